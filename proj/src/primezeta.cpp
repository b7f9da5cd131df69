#include "zetareg/primezeta.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace zetareg {

namespace {

constexpr int kMaxTruncation = 500;

int truncation_rule(double sigma, double log_q, double q, double coeff_l1) {
  if (!(sigma > 0.0)) {
    throw Error(ErrorKind::NonConvergent, "the Möbius series for P(s) needs Re(s) > 0");
  }
  // A q^{-K sigma} (1 + q) < 1e-12
  const double A = std::max(1.0, coeff_l1);
  const double need = (std::log(A * (1.0 + q)) + 12.0 * std::log(10.0)) / (sigma * log_q);
  if (need >= kMaxTruncation) return kMaxTruncation;
  return std::max(1, static_cast<int>(std::floor(need)) + 1);
}

std::string describe(Complex s) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", s.real(), s.imag());
  return buf;
}

[[noreturn]] void throw_singular(Complex s_sing, int k, SingularityKind kind) {
  throw SingularityError(ErrorKind::NearSingularity, s_sing, k, kind,
                         "term k = " + std::to_string(k) + " is within the guard radius of the " +
                             std::string(to_string(kind)) + " at s = " + describe(s_sing));
}

// u = q^{-ks}; rejects points within the guard radius of a singular point of
// log zeta(ks, C).
void guard_curve(const PrimeZeta& pz, Complex s, int k, Complex u) {
  const CurveZeta& z = pz.zeta();
  const double P = z.period();
  const double q = static_cast<double>(z.q());
  const Complex w = s * static_cast<double>(k);
  const double m = std::round(w.imag() / P);
  if (std::abs(u - 1.0) <= kSingularGuard) throw_singular(Complex(0.0, m * P) / double(k), k, SingularityKind::Pole);
  if (std::abs(u - 1.0 / q) <= kSingularGuard) {
    throw_singular(Complex(1.0, m * P) / double(k), k, SingularityKind::Pole);
  }
  for (const auto& r : z.L().roots()) {
    if (std::abs(u - r) <= kSingularGuard) {
      const Complex rho0 = -std::log(r) / z.log_q();
      const double mz = std::round((w.imag() - rho0.imag()) / P);
      throw_singular((rho0 + Complex(0.0, mz * P)) / double(k), k, SingularityKind::Zero);
    }
  }
}

Complex curve_log_zeta(const CurveZeta& z, Complex u) {
  const double q = static_cast<double>(z.q());
  Complex v = -log1p(-u) - log1p(-q * u);
  for (const auto& r : z.L().roots()) v += log1p(-u / r);
  return v;
}

Complex curve_dlog_zeta_du(const CurveZeta& z, Complex u) {
  const double q = static_cast<double>(z.q());
  Complex v = 1.0 / (1.0 - u) + q / (1.0 - q * u);
  for (const auto& r : z.L().roots()) v -= 1.0 / (r - u);
  return v;
}

}  // namespace

PrimeZeta::PrimeZeta(CurveZeta z, int n_max)
    : z_(std::move(z)), table_(prime_count_table(z_.L(), n_max)), coeff_l1_(0.0) {
  for (const auto& a : z_.L().coeffs()) coeff_l1_ += std::abs(a.convert_to<double>());
}

int PrimeZeta::default_truncation(Complex s) const {
  return truncation_rule(s.real(), z_.log_q(), static_cast<double>(z_.q()), coeff_l1_);
}

int PrimeZeta::direct_cutoff(Complex s, double tol) const {
  const double sigma = s.real();
  if (!(sigma > 1.0)) throw Error(ErrorKind::NonConvergent, "the direct prime series needs Re(s) > 1");
  // pi(n) <= (q^n + 2g q^{n/2} + 1) / n, so the tail past D is at most
  // C r^{D+1} / ((D+1)(1-r)) with r = q^{1 - sigma}.
  const double r = std::exp((1.0 - sigma) * z_.log_q());
  const double C = 2.0 + 2.0 * z_.genus();
  constexpr int kCap = 20000;
  double rp = r;
  for (int D = 1; D < kCap; ++D) {
    rp *= r;
    if (C * rp / ((D + 1) * (1.0 - r)) < tol) return D;
  }
  return kCap;
}

Complex prime_zeta_direct(const PrimeZeta& pz, Complex s, int D) {
  if (D < 0) throw Error(ErrorKind::InvalidArgument, "cutoff must be nonnegative");
  const CurveZeta& z = pz.zeta();
  const PrimeCountTable local = D > pz.table().n_max() ? prime_count_table(z.L(), D) : PrimeCountTable(pz.table());
  Complex sum = 0;
  for (int n = 1; n <= D; ++n) {
    const double mag = scaled_to_double(local.pi(n), -n * s.real() * z.log_q());
    sum += std::polar(mag, -n * s.imag() * z.log_q());
  }
  return sum;
}

Complex prime_zeta_mobius(const PrimeZeta& pz, Complex s, int K, MobiusOptions opt) {
  if (!(s.real() > 0.0)) throw Error(ErrorKind::NonConvergent, "the Möbius series for P(s) needs Re(s) > 0");
  if (K <= 0) K = pz.default_truncation(s);
  const CurveZeta& z = pz.zeta();
  Complex sum = 0;
  for (int k = 1; k <= K; ++k) {
    const int mu = mobius(k);
    if (mu == 0) continue;
    const Complex u = z.u_of(s * static_cast<double>(k));
    if (!opt.allow_near_singular) guard_curve(pz, s, k, u);
    sum += (static_cast<double>(mu) / k) * curve_log_zeta(z, u);
  }
  return sum;
}

Complex prime_zeta_derivative(const PrimeZeta& pz, Complex s, int K, MobiusOptions opt) {
  if (!(s.real() > 0.0)) throw Error(ErrorKind::NonConvergent, "the Möbius series for P(s) needs Re(s) > 0");
  if (K <= 0) K = pz.default_truncation(s);
  const CurveZeta& z = pz.zeta();
  Complex sum = 0;
  for (int k = 1; k <= K; ++k) {
    const int mu = mobius(k);
    if (mu == 0) continue;
    const Complex u = z.u_of(s * static_cast<double>(k));
    if (!opt.allow_near_singular) guard_curve(pz, s, k, u);
    // d/ds (mu/k) log zeta(ks) = mu * (-ln q) u * dlog zeta/du
    sum += static_cast<double>(mu) * (-z.log_q()) * u * curve_dlog_zeta_du(z, u);
  }
  return sum;
}

namespace {

constexpr double kWindowEps = 1e-9;

struct Dedup {
  std::set<std::pair<long long, long long>> seen;
  std::vector<Singularity> out;

  void add(Complex s, int k, SingularityKind kind) {
    const auto key = std::make_pair(std::llround(s.real() * 1e10), std::llround(s.imag() * 1e10));
    if (seen.insert(key).second) out.push_back({s, k, kind});
  }
};

SingularityList finish(Dedup&& d, double sigma_min) {
  std::stable_sort(d.out.begin(), d.out.end(), [](const Singularity& a, const Singularity& b) {
    if (a.s.real() != b.s.real()) return a.s.real() > b.s.real();
    return a.s.imag() < b.s.imag();
  });
  return {std::move(d.out), sigma_min};
}

void check_sigma(double sigma_min) {
  if (!(sigma_min > 0.0)) throw Error(ErrorKind::InvalidArgument, "sigma_min must be positive");
}

// Integers m with t_lo <= (base + P m) / k <= t_hi.
std::pair<long, long> lattice_range(double base, double P, int k, double t_lo, double t_hi) {
  return {static_cast<long>(std::ceil((k * t_lo - base) / P - kWindowEps)),
          static_cast<long>(std::floor((k * t_hi - base) / P + kWindowEps))};
}

}  // namespace

SingularityList singularity_enumerate(const PrimeZeta& pz, double sigma_min, double t_lo, double t_hi, int k_max) {
  check_sigma(sigma_min);
  const CurveZeta& z = pz.zeta();
  const double P = z.period();
  std::vector<Complex> zero_bases;
  for (const auto& r : z.L().roots()) zero_bases.push_back(-std::log(r) / z.log_q());
  Dedup d;
  if (t_hi < t_lo) return finish(std::move(d), sigma_min);
  for (int k = 1; k <= k_max; ++k) {
    if (mobius(k) == 0) continue;
    if (1.0 / k > sigma_min) {
      const auto [lo, hi] = lattice_range(0.0, P, k, t_lo, t_hi);
      for (long m = lo; m <= hi; ++m) d.add(Complex(1.0, P * m) / double(k), k, SingularityKind::Pole);
    }
    for (const auto& rho0 : zero_bases) {
      if (!(rho0.real() / k > sigma_min)) continue;
      const auto [lo, hi] = lattice_range(rho0.imag(), P, k, t_lo, t_hi);
      for (long m = lo; m <= hi; ++m) d.add((rho0 + Complex(0.0, P * m)) / double(k), k, SingularityKind::Zero);
    }
  }
  return finish(std::move(d), sigma_min);
}

BoundaryReport boundary_evidence_report(const SingularityEnumerator& enumerate, const std::vector<double>& sigmas,
                                        double t_lo, double t_hi, int k_max) {
  BoundaryReport rep;
  for (double sigma : sigmas) {
    check_sigma(sigma);
    const SingularityList list = enumerate(sigma, t_lo, t_hi, k_max);
    BoundaryRow row;
    row.sigma = sigma;
    row.count = list.entries.size();
    row.min_re = std::numeric_limits<double>::quiet_NaN();
    for (const auto& e : list.entries) {
      if (row.argmin_k == 0 || e.s.real() < row.min_re) {
        row.min_re = e.s.real();
        row.argmin_k = e.k;
      }
    }
    rep.rows.push_back(row);
  }
  rep.accumulating = !rep.rows.empty();
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    if (rep.rows[i].count == 0) rep.accumulating = false;
    if (i > 0 && !(rep.rows[i].count > rep.rows[i - 1].count && rep.rows[i].min_re < rep.rows[i - 1].min_re)) {
      rep.accumulating = false;
    }
  }
  return rep;
}

BoundaryReport boundary_evidence_report(const PrimeZeta& pz, const std::vector<double>& sigmas, double t_lo,
                                        double t_hi, int k_max) {
  return boundary_evidence_report(
      [&pz](double sigma, double lo, double hi, int km) { return singularity_enumerate(pz, sigma, lo, hi, km); },
      sigmas, t_lo, t_hi, k_max);
}

const std::vector<double>& riemann_zero_ordinates() {
  static const std::vector<double> zeros = zeta_zero_scan(5.0, 60.0);
  return zeros;
}

int rational_truncation(Complex s) { return truncation_rule(s.real(), std::log(2.0), 2.0, 1.0); }

namespace {

void guard_rational(Complex s, int k) {
  const Complex w = s * static_cast<double>(k);
  if (std::abs(w - 1.0) <= kSingularGuard) throw_singular(Complex(1.0 / k, 0.0), k, SingularityKind::Pole);
  if (std::abs(w.real() - 0.5) > kSingularGuard || std::abs(w.imag()) > 61.0) return;
  for (double g : riemann_zero_ordinates()) {
    for (double sign : {1.0, -1.0}) {
      const Complex rho(0.5, sign * g);
      if (std::abs(w - rho) <= kSingularGuard) throw_singular(rho / double(k), k, SingularityKind::Zero);
    }
  }
}

}  // namespace

Complex prime_zeta_rational(Complex s, int K, MobiusOptions opt) {
  if (!(s.real() > 0.0)) throw Error(ErrorKind::NonConvergent, "the Möbius series for P(s) needs Re(s) > 0");
  if (K <= 0) K = rational_truncation(s);
  Complex sum = 0;
  for (int k = 1; k <= K; ++k) {
    const int mu = mobius(k);
    if (mu == 0) continue;
    if (!opt.allow_near_singular) guard_rational(s, k);
    sum += (static_cast<double>(mu) / k) * log1p(riemann_zeta_minus_one(s * static_cast<double>(k)));
  }
  return sum;
}

Complex prime_zeta_rational_derivative(Complex s, int K, MobiusOptions opt) {
  if (!(s.real() > 0.0)) throw Error(ErrorKind::NonConvergent, "the Möbius series for P(s) needs Re(s) > 0");
  if (K <= 0) K = rational_truncation(s);
  Complex sum = 0;
  for (int k = 1; k <= K; ++k) {
    const int mu = mobius(k);
    if (mu == 0) continue;
    if (!opt.allow_near_singular) guard_rational(s, k);
    const Complex w = s * static_cast<double>(k);
    sum += static_cast<double>(mu) * zeta_derivative(w) / riemann_zeta(w);
  }
  return sum;
}

SingularityList singularity_enumerate_rational(double sigma_min, double t_lo, double t_hi, int k_max) {
  check_sigma(sigma_min);
  Dedup d;
  if (t_hi < t_lo) return finish(std::move(d), sigma_min);
  const auto& zeros = riemann_zero_ordinates();
  for (int k = 1; k <= k_max; ++k) {
    if (mobius(k) == 0) continue;
    if (1.0 / k > sigma_min && t_lo <= kWindowEps && t_hi >= -kWindowEps) {
      d.add(Complex(1.0 / k, 0.0), k, SingularityKind::Pole);
    }
    if (!(0.5 / k > sigma_min)) continue;
    std::vector<double> ims;
    for (double g : zeros) ims.push_back(-g);
    std::reverse(ims.begin(), ims.end());
    ims.insert(ims.end(), zeros.begin(), zeros.end());
    for (double g : ims) {
      const double im = g / k;
      if (im >= t_lo - kWindowEps && im <= t_hi + kWindowEps) {
        d.add(Complex(0.5, g) / double(k), k, SingularityKind::Zero);
      }
    }
  }
  return finish(std::move(d), sigma_min);
}

namespace {

// Smallest prime not dividing m.
double least_coprime_prime(int m) {
  for (int p : {2, 3, 5}) {
    if (m % p != 0) return p;
  }
  return 7;
}

std::vector<int> prime_divisors(int m) {
  std::vector<int> out;
  for (const auto& [p, e] : factorize(static_cast<std::uint64_t>(m))) out.push_back(static_cast<int>(p));
  return out;
}

// P restricted to primes coprime to m.
Complex coprime_prime_zeta(Complex x, int m) {
  Complex v = prime_zeta_rational(x);
  for (int p : prime_divisors(m)) v -= std::exp(-x * std::log(static_cast<double>(p)));
  return v;
}

// Number of terms until p0^{-n sigma} drops below 1e-17.
int series_length(double sigma, double p0) {
  const double n = 17.0 * std::log(10.0) / (sigma * std::log(p0));
  return std::clamp(static_cast<int>(std::ceil(n)) + 1, 1, kMaxTruncation);
}

// sum_p chi(p) p^{-s} by odd-support Möbius inversion of log L(s, chi).
Complex character_prime_zeta(Complex s, const Character& chi, int K) {
  const int m = chi.modulus();
  const double p0 = least_coprime_prime(m);
  const double sigma = s.real();
  auto G = [&](Complex t) {
    Complex v = std::log(dirichlet_l(t, chi));
    const int n_max = series_length(t.real(), p0);
    for (int n = 2; n <= n_max; n += 2) v -= coprime_prime_zeta(t * static_cast<double>(n), m) / double(n);
    return v;
  };
  if (K <= 0) K = series_length(sigma, p0);
  Complex sum = 0;
  for (int k = 1; k <= K; k += 2) {
    const int mu = mobius(k);
    if (mu == 0) continue;
    sum += (static_cast<double>(mu) / k) * G(s * static_cast<double>(k));
  }
  return sum;
}

}  // namespace

Complex prime_zeta_progression(Complex s, int m, int K, bool experimental) {
  if (m != 3 && m != 4 && m != 6) {
    throw Error(ErrorKind::UnsupportedModulus, "progressions are supported for m in {3, 4, 6}");
  }
  if (!(s.real() > 1.0) && !experimental) {
    throw Error(ErrorKind::OutsideValidatedDomain, "progression sums below Re(s) = 1 require the experimental flag");
  }
  if (!(s.real() > 0.0)) throw Error(ErrorKind::NonConvergent, "the Möbius series for P(s) needs Re(s) > 0");
  if (m == 6) {
    // p = 1 mod 6 iff p = 1 mod 3 and p odd; chi_3(2) = -1 is undone by 2^{-s}.
    return 0.5 * (coprime_prime_zeta(s, 6) + character_prime_zeta(s, Character::real(3), K) +
                  std::exp(-s * std::log(2.0)));
  }
  return 0.5 * (coprime_prime_zeta(s, m) + character_prime_zeta(s, Character::real(m), K));
}

}  // namespace zetareg
