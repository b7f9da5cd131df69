#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zetareg/ffield.hpp"

namespace zetareg {

struct ProjectiveLine {};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, coefficients in the base field.
struct WeierstrassModel {
  FieldSpec::Elem a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
};

/// y^2 + h(x) y = f(x) over the base field; deg f in {2g+1, 2g+2},
/// deg h <= g+1.
struct HyperellipticModel {
  Poly f;
  Poly h;
};

using CurveModel = std::variant<ProjectiveLine, WeierstrassModel, HyperellipticModel>;

/// A nonsingular projective curve over F_q in one of the supported models.
class Curve {
 public:
  /// Validates the model and rejects singular input (SingularCurve) or
  /// unsupported shapes (UnsupportedModel).
  static Curve make(FieldSpec base, CurveModel model);

  const FieldSpec& base() const { return base_; }
  const CurveModel& model() const { return model_; }
  int genus() const { return genus_; }
  std::uint64_t q() const { return base_.order(); }

 private:
  Curve(FieldSpec base, CurveModel model, int genus)
      : base_(std::move(base)), model_(std::move(model)), genus_(genus) {}

  FieldSpec base_;
  CurveModel model_;
  int genus_;
};

/// Genus implied by the model shape (0, 1, or ceil(deg f / 2) - 1).
int model_genus(const CurveModel& model);

/// Discriminant of the general Weierstrass equation.
FieldSpec::Elem weierstrass_discriminant(const FieldSpec& f, const WeierstrassModel& m);

/// Exact smoothness test of the projective model, including the points at
/// infinity of the hyperelliptic smooth model.
bool is_nonsingular(const FieldSpec& base, const CurveModel& model);
inline bool is_nonsingular(const Curve& c) { return is_nonsingular(c.base(), c.model()); }

/// #C(F_{q^n}) by enumeration of x over F_{q^n}. Throws BudgetExceeded when
/// q^n exceeds the budget.
BigInt count_points(const Curve& curve, int n, std::uint64_t budget = enumeration_budget());

/// Point counts and prime-divisor counts, exact. N(n) and pi(n) are 1-based.
class PrimeCountTable {
 public:
  /// Möbius-inverts N_1..N_{n_max}; throws NonIntegralPrimeCount when the
  /// counts are inconsistent.
  PrimeCountTable(std::uint64_t q, int genus, std::vector<BigInt> counts);

  std::uint64_t q() const { return q_; }
  int genus() const { return genus_; }
  int n_max() const { return static_cast<int>(N_.size()); }
  const BigInt& N(int n) const { return N_.at(n - 1); }
  const BigInt& pi(int n) const { return pi_.at(n - 1); }
  const std::vector<BigInt>& counts() const { return N_; }
  const std::vector<BigInt>& prime_counts() const { return pi_; }

 private:
  std::uint64_t q_;
  int genus_;
  std::vector<BigInt> N_;
  std::vector<BigInt> pi_;
};

/// Brute-force table for n = 1..n_max.
PrimeCountTable prime_count_table(const Curve& curve, int n_max,
                                  std::uint64_t budget = enumeration_budget());

/// Curve description grammar:
///   p1 q=<prime power>
///   ell p=<p> [a=<a>] [a1=..] [a2=..] [a3=..] [a4=..] [a6=..]
///   hyp p=<p> [a=<a>] f=<poly> [h=<poly>]
/// Polynomial values follow the x/w grammar of parse_terms; w is the field
/// generator. Throws ParseError on malformed input.
Curve parse_curve(std::string_view text, std::uint64_t budget = enumeration_budget());

/// Reduces a parsed x/w polynomial into the field (coefficients in F_q).
Poly to_field_poly(const FieldSpec& field, const TermMap& terms);

}  // namespace zetareg
