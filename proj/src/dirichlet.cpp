#include "zetareg/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace zetareg {

EMParams em_params(Complex s) {
  EMParams p;
  p.N = std::max(20, static_cast<int>(std::ceil(2.0 * std::abs(s.imag()))));
  return p;
}

const std::vector<Rational>& bernoulli_even() {
  static const std::vector<Rational> table = [] {
    // Akiyama–Tanigawa recurrence for B_0..B_30.
    constexpr int kMax = 30;
    std::vector<Rational> a(kMax + 1), B(kMax + 1);
    for (int m = 0; m <= kMax; ++m) {
      a[m] = Rational(1, m + 1);
      for (int j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
      B[m] = a[0];
    }
    std::vector<Rational> even;
    for (int k = 2; k <= kMax; k += 2) even.push_back(B[k]);
    return even;
  }();
  return table;
}

bool in_validated_domain(Complex s) { return s.real() >= -1.0 && std::abs(s.imag()) <= 60.0; }

namespace {

// B_{2j} / (2j)! as doubles, j = 1..15.
const std::vector<double>& em_coefficients() {
  static const std::vector<double> c = [] {
    std::vector<double> out;
    Rational fact = 1;
    int n = 0;
    for (const auto& b : bernoulli_even()) {
      fact *= (n + 1) * (n + 2);
      n += 2;
      out.push_back(static_cast<double>(b / fact));
    }
    return out;
  }();
  return c;
}

// sum_{n=n0}^{N-1} (n+a)^{-s} + x^{-s}/2 + Bernoulli corrections at x = N + a,
// i.e. everything except the x^{1-s}/(s-1) tail.
Complex em_regular(Complex s, double a, int n0, const EMParams& p) {
  Complex sum = 0;
  for (int n = n0; n < p.N; ++n) sum += std::exp(-s * std::log(n + a));
  const double x = p.N + a;
  const double lx = std::log(x);
  const Complex xs = std::exp(-s * lx);
  sum += 0.5 * xs;
  const auto& c = em_coefficients();
  Complex rising = s;  // s (s+1) ... (s+2j-2)
  Complex power = xs / x;  // x^{-s-2j+1}
  for (int j = 1; j <= p.M; ++j) {
    sum += c[j - 1] * rising * power;
    rising *= (s + (2.0 * j - 1)) * (s + 2.0 * j);
    power /= x * x;
  }
  return sum;
}

// d/ds of em_regular.
Complex em_regular_derivative(Complex s, double a, int n0, const EMParams& p) {
  Complex sum = 0;
  for (int n = n0; n < p.N; ++n) {
    const double l = std::log(n + a);
    sum -= l * std::exp(-s * l);
  }
  const double x = p.N + a;
  const double lx = std::log(x);
  const Complex xs = std::exp(-s * lx);
  sum -= 0.5 * lx * xs;
  const auto& c = em_coefficients();
  Complex rising = s, rising_d = 1.0;
  Complex power = xs / x;
  for (int j = 1; j <= p.M; ++j) {
    sum += c[j - 1] * (rising_d - lx * rising) * power;
    const Complex f1 = s + (2.0 * j - 1), f2 = s + 2.0 * j;
    rising_d = rising_d * f1 * f2 + rising * (f1 + f2);
    rising *= f1 * f2;
    power /= x * x;
  }
  return sum;
}

Complex tail(Complex s, double x) { return std::exp((1.0 - s) * std::log(x)) / (s - 1.0); }

void check_pole(Complex s) {
  if (s == Complex(1.0, 0.0)) throw Error(ErrorKind::PoleAtOne, "zeta has a pole at s = 1");
}

}  // namespace

Complex riemann_zeta(Complex s) {
  check_pole(s);
  const EMParams p = em_params(s);
  return em_regular(s, 1.0, 0, p) + tail(s, p.N + 1.0);
}

Complex riemann_zeta_minus_one(Complex s) {
  check_pole(s);
  const EMParams p = em_params(s);
  return em_regular(s, 1.0, 1, p) + tail(s, p.N + 1.0);
}

Complex zeta_derivative(Complex s) {
  check_pole(s);
  const EMParams p = em_params(s);
  const double x = p.N + 1.0;
  const Complex t = tail(s, x);
  return em_regular_derivative(s, 1.0, 0, p) - std::log(x) * t - t / (s - 1.0);
}

Complex hurwitz_zeta(Complex s, double a) {
  check_pole(s);
  if (!(a > 0.0 && a <= 1.0)) throw Error(ErrorKind::InvalidArgument, "Hurwitz parameter must lie in (0, 1]");
  const EMParams p = em_params(s);
  return em_regular(s, a, 0, p) + tail(s, p.N + a);
}

Character Character::real(int m) {
  switch (m) {
    case 1: return Character(1, {1}, true);
    case 3: return Character(3, {0, 1, -1}, false);
    case 4: return Character(4, {0, 1, 0, -1}, false);
    default: throw Error(ErrorKind::UnsupportedModulus, "only real characters mod 1, 3, 4 are supported");
  }
}

Character Character::principal(int m) {
  if (m < 1) throw Error(ErrorKind::UnsupportedModulus, "modulus must be positive");
  std::vector<int> v(m);
  for (int a = 0; a < m; ++a) v[a] = std::gcd(a, m) == 1 ? 1 : 0;
  return Character(m, std::move(v), true);
}

Complex dirichlet_l(Complex s, const Character& chi) {
  if (chi.trivial()) throw Error(ErrorKind::TrivialCharacter, "dirichlet_l needs a nontrivial character");
  const int m = chi.modulus();
  const EMParams p = em_params(s);
  // The x^{1-s}/(s-1) tails cancel to leading order since sum chi(a) = 0;
  // combine them against x_ref = N + 1 so that s = 1 is regular.
  const double x_ref = p.N + 1.0;
  const Complex ref_pow = std::exp((1.0 - s) * std::log(x_ref));
  Complex sum = 0;
  for (int a = 1; a <= m; ++a) {
    const int c = chi(a);
    if (c == 0) continue;
    const double frac = static_cast<double>(a) / m;
    const double l = std::log((p.N + frac) / x_ref);
    sum += static_cast<double>(c) * (em_regular(s, frac, 0, p) - ref_pow * l * expm1_over((1.0 - s) * l));
  }
  return std::exp(-s * std::log(static_cast<double>(m))) * sum;
}

double riemann_siegel_theta(double t) {
  const double t2 = t * t;
  return t / 2.0 * std::log(t / (2.0 * std::numbers::pi)) - t / 2.0 - std::numbers::pi / 8.0 +
         1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t2) + 31.0 / (80640.0 * t * t2 * t2) +
         127.0 / (430080.0 * t * t2 * t2 * t2);
}

double hardy_z(double t) {
  return (std::polar(1.0, riemann_siegel_theta(t)) * riemann_zeta(Complex(0.5, t))).real();
}

std::vector<double> zeta_zero_scan(double t_lo, double t_hi) {
  std::vector<double> zeros;
  const double lo = std::max(t_lo, 5.0), hi = std::min(t_hi, 60.0);
  if (!(lo < hi)) return zeros;
  constexpr double kStep = 0.05;
  const int steps = static_cast<int>(std::ceil((hi - lo) / kStep));
  double a = lo, za = hardy_z(a);
  for (int i = 1; i <= steps; ++i) {
    const double b = std::min(hi, lo + i * kStep);
    const double zb = hardy_z(b);
    if (za == 0.0) {
      zeros.push_back(a);
    } else if ((za < 0) != (zb < 0) && zb != 0.0) {
      double x0 = a, x1 = b, f0 = za;
      while (x1 - x0 > 1e-10) {
        const double mid = 0.5 * (x0 + x1);
        const double fm = hardy_z(mid);
        if ((fm < 0) == (f0 < 0)) {
          x0 = mid;
          f0 = fm;
        } else {
          x1 = mid;
        }
      }
      zeros.push_back(0.5 * (x0 + x1));
    }
    a = b;
    za = zb;
  }
  if (za == 0.0) zeros.push_back(a);
  return zeros;
}

}  // namespace zetareg
