#pragma once

// Test-side reference implementations. Nothing here calls into the library;
// each routine takes the slow, obvious route.

#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using Cd = std::complex<double>;
using Vec = std::vector<int>;  // polynomial over F_p, low to high

/// GF(p^k) as F_p[t]/(m) with m the first monic irreducible found by trial
/// division; elements are coefficient vectors of length k.
struct Gf {
  int p;
  int k;
  Vec modulus;

  Gf(int p, int k);
  std::size_t size() const;
  Vec element(std::size_t index) const;
  Vec add(const Vec& a, const Vec& b) const;
  Vec mul(const Vec& a, const Vec& b) const;
  Vec constant(int c) const;
  bool is_zero(const Vec& a) const;
};

/// First monic irreducible of degree n over F_p, scanning monic polynomials
/// with the lower coefficients in lexicographic order of sum c_i p^i.
Vec first_irreducible(int p, int n);
bool irreducible_by_trial_division(const Vec& f, int p);
/// Brute-force count of monic irreducibles of degree n over F_p.
long long count_irreducible(int p, int n);

/// Curve coefficients are polynomials in the base-field generator w.
using Coef = Vec;

struct WeierstrassCurve {
  int p, a;
  Coef a1, a2, a3, a4, a6;
};

struct HyperellipticCurve {
  int p, a;
  std::vector<Coef> f;  // coefficients of x^i
  std::vector<Coef> h;
};

/// #C(F_{p^{a n}}) by enumerating every (x, y) pair, plus the points at
/// infinity of the smooth model.
long long count_points(const WeierstrassCurve& c, int n);
long long count_points(const HyperellipticCurve& c, int n);

/// Primes up to 10^7 by a plain sieve, computed once.
const std::vector<int>& primes_to_1e7();
/// sum_{p <= 10^7} p^{-s} plus the tail estimate X^{1-s} / ((s-1) ln X).
Cd prime_zeta_sieve(Cd s);
/// The same restricted to p = 1 mod m; the tail estimate is divided by phi(m).
double prime_zeta_sieve_progression(double s, int m);

/// Alternating sum sum_{k >= 0} (-1)^k a(k) by Borwein's acceleration with
/// n terms.
template <class F>
Cd alternating_sum(F a, int n);
/// zeta(s) = eta(s) / (1 - 2^{1-s}) with eta from the accelerated series.
Cd zeta_eta(Cd s);

/// Lanczos approximation of log Gamma(z), Re z > 0.
Cd lgamma_lanczos(Cd z);
/// Z(t) built from the two functions above.
double hardy_z(double t);
/// First `count` zeros of Z on t > 10 by scanning and bisection.
std::vector<double> first_zeros(int count);

}  // namespace oracle

#include "oracles_impl.hpp"
