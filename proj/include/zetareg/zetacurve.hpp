#pragma once

#include <vector>

#include "zetareg/lfunc.hpp"

namespace zetareg {

/// zeta(s, C) = L(u) / ((1 - u)(1 - q u)) with u = q^{-s}.
class CurveZeta {
 public:
  explicit CurveZeta(LPolynomial L);

  const LPolynomial& L() const { return L_; }
  std::uint64_t q() const { return L_.q(); }
  int genus() const { return L_.genus(); }
  double log_q() const { return log_q_; }
  /// Imaginary period 2 pi / ln q.
  double period() const { return period_; }

  /// u = exp(-s ln q).
  Complex u_of(Complex s) const { return std::exp(-s * log_q_); }

 private:
  LPolynomial L_;
  double log_q_;
  double period_;
};

/// Distance (in u) below which evaluation refuses to return a value.
inline constexpr double kPoleGuard = 1e-12;

/// Throws SingularityError(NearPole) carrying the nearest pole in s.
Complex zeta_eval(const CurveZeta& z, Complex s);

/// Number of effective divisors of degree 0..D: power-series coefficients
/// of L(u) / ((1 - u)(1 - q u)), exact.
std::vector<BigInt> effective_divisor_counts(const LPolynomial& L, int D);

/// sum_{n=0}^{D} b_n q^{-ns}.
Complex zeta_dirichlet_partial(const CurveZeta& z, Complex s, int D);

/// prod_{n=1}^{D} (1 - q^{-ns})^{-pi(n)}; the table must cover 1..D.
Complex euler_product_partial(const CurveZeta& z, const PrimeCountTable& table, Complex s, int D);

/// Zeros s = -log(u_j) / ln q + i period m with Im(s) in [t_lo, t_hi],
/// sorted by imaginary part, then real part.
std::vector<Complex> zeta_zeros(const CurveZeta& z, double t_lo, double t_hi);

/// |q^{(g-1)s} zeta(s) - q^{(g-1)(1-s)} zeta(1-s)| relative to the larger side.
double functional_equation_deviation(const CurveZeta& z, Complex s);

}  // namespace zetareg
