#include "zetareg/zetacurve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace zetareg {

CurveZeta::CurveZeta(LPolynomial L)
    : L_(std::move(L)),
      log_q_(std::log(static_cast<double>(L_.q()))),
      period_(2.0 * std::numbers::pi / log_q_) {}

Complex zeta_eval(const CurveZeta& z, Complex s) {
  const Complex u = z.u_of(s);
  const double qd = static_cast<double>(z.q());
  const double m = std::round(s.imag() / z.period());
  if (std::abs(u - 1.0) <= kPoleGuard) {
    throw SingularityError(ErrorKind::NearPole, Complex(0.0, m * z.period()), 1, SingularityKind::Pole,
                           "s is within the guard radius of the pole at Re(s) = 0");
  }
  if (std::abs(u - 1.0 / qd) <= kPoleGuard) {
    throw SingularityError(ErrorKind::NearPole, Complex(1.0, m * z.period()), 1, SingularityKind::Pole,
                           "s is within the guard radius of the pole at Re(s) = 1");
  }
  return z.L()(u) / ((1.0 - u) * (1.0 - qd * u));
}

std::vector<BigInt> effective_divisor_counts(const LPolynomial& L, int D) {
  if (D < 0) throw Error(ErrorKind::InvalidArgument, "degree cutoff must be nonnegative");
  const BigInt Q(L.q());
  // c_n = (q^{n+1} - 1) / (q - 1) = 1 + q + ... + q^n
  std::vector<BigInt> c(D + 1);
  BigInt qn = 1, acc = 0;
  for (int n = 0; n <= D; ++n) {
    acc += qn;
    c[n] = acc;
    qn *= Q;
  }
  const auto& a = L.coeffs();
  std::vector<BigInt> b(D + 1, BigInt(0));
  for (int n = 0; n <= D; ++n) {
    for (int i = 0; i <= std::min<int>(n, static_cast<int>(a.size()) - 1); ++i) b[n] += a[i] * c[n - i];
  }
  return b;
}

namespace {

// x q^{-n s} without overflowing x or underflowing the power separately.
Complex scaled_term(const CurveZeta& z, const BigInt& x, int n, Complex s) {
  const double mag = scaled_to_double(x, -n * s.real() * z.log_q());
  return std::polar(mag, -n * s.imag() * z.log_q());
}

}  // namespace

Complex zeta_dirichlet_partial(const CurveZeta& z, Complex s, int D) {
  if (D < 1) throw Error(ErrorKind::InvalidArgument, "degree cutoff must be >= 1");
  const auto b = effective_divisor_counts(z.L(), D);
  Complex sum = 0;
  for (int n = 0; n <= D; ++n) sum += scaled_term(z, b[n], n, s);
  return sum;
}

Complex euler_product_partial(const CurveZeta& z, const PrimeCountTable& table, Complex s, int D) {
  if (D < 0) throw Error(ErrorKind::InvalidArgument, "degree cutoff must be nonnegative");
  if (D > table.n_max()) {
    throw Error(ErrorKind::InvalidArgument, "prime count table covers degrees 1.." + std::to_string(table.n_max()));
  }
  Complex log_sum = 0;
  for (int n = 1; n <= D; ++n) {
    const Complex un = z.u_of(s * static_cast<double>(n));
    log_sum -= table.pi(n).convert_to<double>() * log1p(-un);
  }
  return std::exp(log_sum);
}

std::vector<Complex> zeta_zeros(const CurveZeta& z, double t_lo, double t_hi) {
  std::vector<Complex> out;
  if (t_hi < t_lo) return out;
  const double P = z.period();
  for (const auto& u : z.L().roots()) {
    const Complex s0 = -std::log(u) / z.log_q();
    const auto m_lo = static_cast<long>(std::ceil((t_lo - s0.imag()) / P - 1e-12));
    const auto m_hi = static_cast<long>(std::floor((t_hi - s0.imag()) / P + 1e-12));
    for (long m = m_lo; m <= m_hi; ++m) {
      const Complex s = s0 + Complex(0.0, P * static_cast<double>(m));
      if (s.imag() >= t_lo - 1e-12 && s.imag() <= t_hi + 1e-12) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    if (a.imag() != b.imag()) return a.imag() < b.imag();
    return a.real() < b.real();
  });
  return out;
}

double functional_equation_deviation(const CurveZeta& z, Complex s) {
  const double g1 = z.genus() - 1.0;
  const Complex lhs = std::exp(g1 * s * z.log_q()) * zeta_eval(z, s);
  const Complex rhs = std::exp(g1 * (1.0 - s) * z.log_q()) * zeta_eval(z, 1.0 - s);
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return scale == 0 ? 0.0 : std::abs(lhs - rhs) / scale;
}

}  // namespace zetareg
