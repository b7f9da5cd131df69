#pragma once

#include <cstdint>
#include <vector>

#include "zetareg/arith.hpp"
#include "zetareg/error.hpp"

namespace zetareg {

/// Euler–Maclaurin parameters: N directly summed terms, M Bernoulli
/// corrections.
struct EMParams {
  int N = 20;
  int M = 12;
};

/// N = max(20, 2 |Im s|), M = 12.
EMParams em_params(Complex s);

/// Exact B_2, B_4, ..., B_30.
const std::vector<Rational>& bernoulli_even();

/// Re(s) >= -1 and |Im(s)| <= 60. Outside this the evaluators still return
/// a value but no error bound is claimed.
bool in_validated_domain(Complex s);

/// Throws PoleAtOne at s == 1.
Complex riemann_zeta(Complex s);
/// zeta(s) - 1, accurate when zeta(s) is close to 1.
Complex riemann_zeta_minus_one(Complex s);
Complex zeta_derivative(Complex s);

/// sum_{n >= 0} (n + a)^{-s} for a in (0, 1].
Complex hurwitz_zeta(Complex s, double a);

/// Real Dirichlet character modulo 1, 3 or 4.
class Character {
 public:
  /// The trivial character for m == 1, otherwise the unique nontrivial real
  /// character mod m (m in {3, 4}).
  static Character real(int m);
  /// Principal character mod m.
  static Character principal(int m);

  int modulus() const { return m_; }
  bool trivial() const { return trivial_; }
  int operator()(std::uint64_t n) const { return values_[n % m_]; }
  const std::vector<int>& values() const { return values_; }

 private:
  Character(int m, std::vector<int> values, bool trivial) : m_(m), values_(std::move(values)), trivial_(trivial) {}

  int m_;
  std::vector<int> values_;
  bool trivial_;
};

/// L(s, chi) for a nontrivial character; entire, so s = 1 is allowed.
/// Throws TrivialCharacter for principal characters.
Complex dirichlet_l(Complex s, const Character& chi);

/// Riemann–Siegel theta from the Stirling series (t >= 5).
double riemann_siegel_theta(double t);
/// Z(t) = exp(i theta(t)) zeta(1/2 + i t), real.
double hardy_z(double t);

/// Ordinates of sign changes of Z in [t_lo, t_hi] (clipped to [5, 60]),
/// bisected to about 1e-10.
std::vector<double> zeta_zero_scan(double t_lo, double t_hi);

}  // namespace zetareg
