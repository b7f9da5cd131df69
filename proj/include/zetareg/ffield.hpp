#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "zetareg/arith.hpp"
#include "zetareg/polynomial.hpp"

namespace zetareg {

/// Largest field (or extension) size the enumeration-based routines accept.
/// Defaults to 10^7; the ZETAREG_BUDGET environment variable overrides it.
std::uint64_t enumeration_budget();

/// The finite field F_q = F_p[w]/(modulus), q = p^a.
///
/// Elements are packed integers in [0, q): the coefficient vector
/// (c_0, ..., c_{a-1}) of c_0 + c_1 w + ... is stored as sum c_i p^i, which
/// also fixes the lexicographic enumeration order. Handles are cheap to copy
/// and immutable.
class FieldSpec {
 public:
  using Elem = std::uint64_t;

  /// Uses the given monic irreducible modulus of degree a >= 1.
  FieldSpec(std::uint64_t p, Poly modulus, std::uint64_t budget = enumeration_budget());

  std::uint64_t p() const { return d_->p; }
  int degree() const { return d_->a; }
  std::uint64_t order() const { return d_->q; }
  const Poly& modulus() const { return d_->modulus; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// The class of w; equals 0 for prime fields, whose modulus is x.
  Elem generator() const { return d_->a > 1 ? d_->p : 0; }
  Elem from_int(std::int64_t n) const;
  Elem from_coeffs(const Poly& coeffs) const;
  Poly coeffs(Elem x) const;

  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem mul(Elem x, Elem y) const;
  Elem inv(Elem x) const;
  Elem pow(Elem x, const BigInt& e) const;

  /// Euler's criterion; every element is a square in characteristic 2.
  bool is_square(Elem x) const;
  /// Absolute trace to F_p.
  std::uint64_t trace(Elem x) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.d_ == b.d_ || (a.d_->p == b.d_->p && a.d_->modulus == b.d_->modulus);
  }

 private:
  struct Data {
    std::uint64_t p;
    int a;
    std::uint64_t q;
    Poly modulus;
    std::uint64_t modulus_bits;  // p == 2: modulus without its leading term
    std::vector<std::uint64_t> trace_basis;
  };
  std::shared_ptr<const Data> d_;
};

/// F_{p^a} with the lowest-lexicographic monic irreducible modulus.
FieldSpec ff_make(std::uint64_t p, int a, std::uint64_t budget = enumeration_budget());

/// A value bound to its field.
class FieldElement {
 public:
  FieldElement(FieldSpec field, FieldSpec::Elem value);

  const FieldSpec& field() const { return field_; }
  FieldSpec::Elem value() const { return value_; }
  Poly coeffs() const { return field_.coeffs(value_); }
  bool is_zero() const { return value_ == 0; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  FieldSpec field_;
  FieldSpec::Elem value_;
};

FieldElement ff_add(const FieldElement& x, const FieldElement& y);
FieldElement ff_sub(const FieldElement& x, const FieldElement& y);
FieldElement ff_mul(const FieldElement& x, const FieldElement& y);
FieldElement ff_neg(const FieldElement& x);
FieldElement ff_inv(const FieldElement& x);
FieldElement ff_pow(const FieldElement& x, const BigInt& e);

inline FieldElement operator+(const FieldElement& x, const FieldElement& y) { return ff_add(x, y); }
inline FieldElement operator-(const FieldElement& x, const FieldElement& y) { return ff_sub(x, y); }
inline FieldElement operator*(const FieldElement& x, const FieldElement& y) { return ff_mul(x, y); }
inline FieldElement operator-(const FieldElement& x) { return ff_neg(x); }

/// All q elements in packed (lexicographic) order.
std::vector<FieldElement> ff_enumerate(const FieldSpec& field,
                                       std::uint64_t budget = enumeration_budget());

/// Number of monic irreducible polynomials of degree n over F_q.
BigInt irreducible_count(std::uint64_t q, unsigned n);

/// Lowest-lexicographic monic irreducible of degree n over F_p, where
/// polynomials are ordered by their packed index sum c_i p^i.
Poly find_irreducible(std::uint64_t p, int n);

/// A primitive element (generator of the multiplicative group), the first in
/// packed order.
FieldSpec::Elem primitive_element(const FieldSpec& field);

/// Embeds `sub` into `ext` (degree(sub) must divide degree(ext)) by sending
/// w to a root of sub's modulus. Deterministic choice of root.
class FieldEmbedding {
 public:
  FieldEmbedding(FieldSpec sub, FieldSpec ext);

  FieldSpec::Elem operator()(FieldSpec::Elem x) const;
  Poly map_poly(const Poly& a) const;

  const FieldSpec& sub() const { return sub_; }
  const FieldSpec& ext() const { return ext_; }

 private:
  FieldSpec sub_;
  FieldSpec ext_;
  FieldSpec::Elem root_;
};

}  // namespace zetareg
