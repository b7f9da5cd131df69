#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zetareg/curves.hpp"

namespace zetareg {

/// Numerator L(u) = sum a_i u^i of the curve zeta function in u = q^{-s}.
///
/// Construction only checks the shape (a_0 = 1, exactly 2g + 1 coefficients,
/// a_{2g} != 0); the functional equation and the Riemann hypothesis are
/// separate checks so that inconsistent polynomials can be represented and
/// rejected by them. Roots are computed once at construction.
class LPolynomial {
 public:
  LPolynomial(std::uint64_t q, int genus, std::vector<BigInt> coeffs);

  std::uint64_t q() const { return q_; }
  int genus() const { return genus_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Roots u_j of L (with multiplicity); the inverse roots are 1 / u_j.
  const std::vector<Complex>& roots() const { return roots_; }

  Complex operator()(Complex u) const;
  Complex derivative(Complex u) const;

 private:
  std::uint64_t q_;
  int genus_;
  std::vector<BigInt> coeffs_;
  std::vector<double> coeffs_d_;
  std::vector<Complex> roots_;
};

/// L from N_1..N_g via exp(sum N_n u^n / n) (1 - u)(1 - q u), in exact
/// rational arithmetic, completed by the functional-equation symmetry.
LPolynomial lpoly_from_counts(std::uint64_t q, int genus, const std::vector<BigInt>& counts);

/// Brute-force N_1..N_g for the curve, then lpoly_from_counts.
LPolynomial lpoly_from_curve(const Curve& curve, std::uint64_t budget = enumeration_budget());

/// a_{2g-i} == q^{g-i} a_i for all i, exactly.
bool check_functional_equation(const LPolynomial& L);

struct WeilReport {
  bool ok = false;
  double max_deviation = 0.0;  // max_j | |u_j| - q^{-1/2} |
  std::vector<Complex> roots;
};

WeilReport check_weil_rh(const LPolynomial& L, double tol);

/// N_n = q^n + 1 - sum_j alpha_j^n via Newton's identities on the
/// coefficients, exact.
std::vector<BigInt> counts_from_lpoly(const LPolynomial& L, int n_max);

PrimeCountTable prime_count_table(const LPolynomial& L, int n_max);

/// L(1), the number of degree-zero divisor classes.
BigInt class_number(const LPolynomial& L);

/// {"q": 2, "g": 1, "coeffs": [1, 0, 2]}; coefficients beyond 64 bits are
/// written as decimal strings.
std::string lpoly_to_json(const LPolynomial& L);
LPolynomial lpoly_from_json(std::string_view text);

/// Roots of an integer polynomial (coefficients low-to-high, nonzero leading
/// coefficient). Exact square-free splitting over Q, then Aberth iteration
/// seeded on the circle |u| = radius with a companion-matrix fallback.
/// Throws RootFindingFailed when the relative residual stays above 1e-12.
std::vector<Complex> integer_poly_roots(const std::vector<BigInt>& coeffs, double radius);

}  // namespace zetareg
