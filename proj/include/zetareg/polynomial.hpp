#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zetareg/arith.hpp"
#include "zetareg/error.hpp"

namespace zetareg {

/// Dense polynomial, coefficients low-to-high. Coefficients are field
/// elements in whatever packed form the owning field uses; the zero
/// polynomial is the empty vector.
using Poly = std::vector<std::uint64_t>;

/// Arithmetic in Z/pZ; the minimal field model the polynomial templates need.
struct PrimeField {
  using Elem = std::uint64_t;
  std::uint64_t p;

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(std::int64_t n) const {
    const auto m = static_cast<std::int64_t>(p);
    return static_cast<Elem>(((n % m) + m) % m);
  }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
  Elem neg(Elem a) const { return (p - a) % p; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p);
  }
  Elem inv(Elem a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in F_p");
    Elem r = 1, b = a;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
    }
    return r;
  }
};

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

template <class F>
Poly poly_add(const F& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto x = i < a.size() ? a[i] : f.zero();
    const auto y = i < b.size() ? b[i] : f.zero();
    r[i] = f.add(x, y);
  }
  trim(r);
  return r;
}

template <class F>
Poly poly_sub(const F& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto x = i < a.size() ? a[i] : f.zero();
    const auto y = i < b.size() ? b[i] : f.zero();
    r[i] = f.sub(x, y);
  }
  trim(r);
  return r;
}

template <class F>
Poly poly_scale(const F& f, const Poly& a, typename F::Elem c) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
  trim(r);
  return r;
}

template <class F>
Poly poly_mul(const F& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == f.zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

/// Returns {quotient, remainder}. Throws DivisionByZero for b == 0.
template <class F>
std::pair<Poly, Poly> poly_divmod(const F& f, Poly a, const Poly& b) {
  if (b.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  const auto lead_inv = f.inv(b.back());
  const std::size_t n = a.size(), m = b.size();
  Poly q(n - m + 1, f.zero());
  for (std::size_t k = n - m + 1; k-- > 0;) {
    const auto c = f.mul(a[k + m - 1], lead_inv);
    q[k] = c;
    if (c == f.zero()) continue;
    for (std::size_t j = 0; j < m; ++j) a[k + j] = f.sub(a[k + j], f.mul(c, b[j]));
  }
  trim(q);
  a.resize(b.size() - 1);
  trim(a);
  return {q, a};
}

template <class F>
Poly poly_mod(const F& f, const Poly& a, const Poly& b) {
  return poly_divmod(f, a, b).second;
}

template <class F>
Poly poly_monic(const F& f, const Poly& a) {
  if (a.empty()) return a;
  return poly_scale(f, a, f.inv(a.back()));
}

/// Monic greatest common divisor; gcd(0, 0) == 0.
template <class F>
Poly poly_gcd(const F& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(f, a);
}

template <class F>
Poly poly_derivative(const F& f, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) {
    r[i - 1] = f.mul(f.from_int(static_cast<std::int64_t>(i)), a[i]);
  }
  trim(r);
  return r;
}

template <class F>
typename F::Elem poly_eval(const F& f, const Poly& a, typename F::Elem x) {
  auto acc = f.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
  return acc;
}

/// base^e mod m by square-and-multiply.
template <class F>
Poly poly_powmod(const F& f, Poly base, BigInt e, const Poly& m) {
  Poly r{f.one()};
  r = poly_mod(f, r, m);
  base = poly_mod(f, base, m);
  while (e > 0) {
    if ((e & 1) != 0) r = poly_mod(f, poly_mul(f, r, base), m);
    e >>= 1;
    if (e > 0) base = poly_mod(f, poly_mul(f, base, base), m);
  }
  return r;
}

/// Rabin's irreducibility test for a polynomial over F_p (any leading
/// coefficient; degree >= 1).
bool is_irreducible(const Poly& f, std::uint64_t p);

/// Packed index of a polynomial over F_p with degree < n: sum c_i p^i.
std::uint64_t poly_index(const Poly& a, std::uint64_t p);
Poly poly_from_index(std::uint64_t index, std::uint64_t p);

/// Bivariate integer polynomial in the text grammar `c0 + c1*x + c2*x^2`,
/// keyed by (x exponent, w exponent). Coefficients are nonnegative.
using TermMap = std::map<std::pair<int, int>, BigInt>;

/// Parses sums of products of nonnegative integers, `x`, `w`, parenthesized
/// subexpressions and `^` powers; `*` is optional. Throws ParseError.
TermMap parse_terms(std::string_view text);

/// Parses a univariate polynomial in x and reduces it mod p.
Poly parse_poly_fp(std::string_view text, std::uint64_t p);

/// `c0 + c1*x + c2*x^2`, skipping zero terms, coefficient 1 implicit for
/// positive powers. The zero polynomial prints as `0`.
std::string format_poly(const Poly& a, char var = 'x');

}  // namespace zetareg
