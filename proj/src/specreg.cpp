#include "zetareg/specreg.hpp"

#include <algorithm>
#include <cmath>

#include "zetareg/format.hpp"

namespace zetareg {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

bool is_prime_type(const Spectrum& spec) {
  return std::holds_alternative<CurvePrimes>(spec.kind) || std::holds_alternative<RationalPrimes>(spec.kind) ||
         std::holds_alternative<ProgressionPrimes>(spec.kind);
}

}  // namespace

Spectrum Spectrum::make(SpectrumKind kind, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw Error(ErrorKind::InvalidArgument, "scale must be positive");
  std::visit(overloaded{
                 [](const ExplicitSpectrum& e) {
                   for (const auto& ev : e.eigs) {
                     if (!(ev.lambda > 0.0) || !std::isfinite(ev.lambda)) {
                       throw Error(ErrorKind::InvalidArgument, "eigenvalues must be positive");
                     }
                     if (ev.multiplicity == 0) {
                       throw Error(ErrorKind::InvalidArgument, "multiplicities must be positive");
                     }
                   }
                 },
                 [](const PowerFamily& p) {
                   if (!(p.alpha > 0.0)) throw Error(ErrorKind::InvalidArgument, "alpha must be positive");
                 },
                 [](const CurvePrimes& c) {
                   if (!c.pz) throw Error(ErrorKind::InvalidArgument, "curve spectrum needs a curve");
                 },
                 [](const ProgressionPrimes& p) {
                   if (p.m != 3 && p.m != 4 && p.m != 6) {
                     throw Error(ErrorKind::UnsupportedModulus, "progressions are supported for m in {3, 4, 6}");
                   }
                 },
                 [](const auto&) {},
             },
             kind);
  return Spectrum{std::move(kind), scale};
}

Spectrum Spectrum::scaled(double mu) const {
  if (!(mu > 0.0)) throw Error(ErrorKind::InvalidArgument, "mu must be positive");
  return make(kind, scale * mu * mu);
}

std::string spectrum_name(const Spectrum& spec) {
  return std::visit(overloaded{
                        [](const ExplicitSpectrum&) { return std::string("explicit"); },
                        [](const PowerFamily&) { return std::string("power"); },
                        [](const CircleLaplacian&) { return std::string("circle"); },
                        [](const CurvePrimes&) { return std::string("curve-primes"); },
                        [](const RationalPrimes&) { return std::string("rational-primes"); },
                        [](const ProgressionPrimes&) { return std::string("progression-primes"); },
                    },
                    spec.kind);
}

Complex spectral_zeta(const Spectrum& spec, Complex s, bool experimental) {
  const Complex base = std::visit(
      overloaded{
          [&](const ExplicitSpectrum& e) {
            Complex v = 0;
            for (const auto& ev : e.eigs) v += static_cast<double>(ev.multiplicity) * std::exp(-s * std::log(ev.lambda));
            return v;
          },
          [&](const PowerFamily& p) { return riemann_zeta(p.alpha * s); },
          [&](const CircleLaplacian&) { return 2.0 * riemann_zeta(2.0 * s); },
          [&](const CurvePrimes& c) {
            if (s.real() > 1.0) return prime_zeta_direct(*c.pz, s, c.pz->direct_cutoff(s));
            return prime_zeta_mobius(*c.pz, s);
          },
          [&](const RationalPrimes&) { return prime_zeta_rational(s); },
          [&](const ProgressionPrimes& p) { return prime_zeta_progression(s, p.m, 0, experimental); },
      },
      spec.kind);
  if (spec.scale == 1.0) return base;
  return std::exp(-s * std::log(spec.scale)) * base;
}

double richardson_derivative_at_zero(const Spectrum& spec) {
  auto central = [&](double h) {
    return (spectral_zeta(spec, Complex(h, 0.0)).real() - spectral_zeta(spec, Complex(-h, 0.0)).real()) / (2.0 * h);
  };
  return (100.0 * central(1e-4) - central(1e-3)) / 99.0;
}

namespace {

struct Closed {
  double zeta0;
  double zeta_prime0;
};

// zeta_D(0), zeta'_D(0) of the unscaled spectrum.
Closed closed_form(const Spectrum& spec) {
  const double zp0 = zeta_derivative(0.0).real();
  const double z0 = riemann_zeta(0.0).real();
  return std::visit(overloaded{
                        [&](const ExplicitSpectrum& e) {
                          Closed c{0.0, 0.0};
                          for (const auto& ev : e.eigs) {
                            c.zeta0 += static_cast<double>(ev.multiplicity);
                            c.zeta_prime0 -= static_cast<double>(ev.multiplicity) * std::log(ev.lambda);
                          }
                          return c;
                        },
                        [&](const PowerFamily& p) { return Closed{z0, p.alpha * zp0}; },
                        [&](const CircleLaplacian&) { return Closed{2.0 * z0, 4.0 * zp0}; },
                        [&](const auto&) -> Closed {
                          throw Error(ErrorKind::InvalidArgument, "spectrum has no regularized determinant");
                        },
                    },
                    spec.kind);
}

constexpr int kFailureKMax = 200;
constexpr std::size_t kNearestCount = 8;

RegFailure natural_boundary(const Spectrum& spec) {
  const std::vector<double> schedule{0.5, 0.25, 0.1, 0.05, 0.02, 0.01};
  const double t_lo = -1.0, t_hi = 1.0;
  const auto* curve = std::get_if<CurvePrimes>(&spec.kind);
  SingularityEnumerator enumerate;
  if (curve) {
    enumerate = [pz = curve->pz](double sigma, double lo, double hi, int km) {
      return singularity_enumerate(*pz, sigma, lo, hi, km);
    };
  } else {
    // Progression sums share the zeta(ks) lattice through their principal
    // character part; L(s, chi) zeros are not enumerated.
    enumerate = singularity_enumerate_rational;
  }
  RegFailure f;
  f.evidence = boundary_evidence_report(enumerate, schedule, t_lo, t_hi, kFailureKMax);
  std::vector<Singularity> all = enumerate(schedule.back(), t_lo, t_hi, kFailureKMax).entries;
  std::stable_sort(all.begin(), all.end(),
                   [](const Singularity& a, const Singularity& b) { return std::abs(a.s) < std::abs(b.s); });
  if (all.size() > kNearestCount) all.resize(kNearestCount);
  f.nearest = all;

  // Probe the derivative series at the real pole closest to 0; the term
  // that trips the guard is the one that diverges there.
  const Singularity* probe = nullptr;
  for (const auto& e : f.nearest) {
    if (e.kind == SingularityKind::Pole && e.s.imag() == 0.0 && (!probe || e.s.real() < probe->s.real())) probe = &e;
  }
  if (probe) {
    try {
      if (curve) {
        prime_zeta_derivative(*curve->pz, probe->s, std::max(probe->k, curve->pz->default_truncation(probe->s)));
      } else {
        prime_zeta_rational_derivative(probe->s, std::max(probe->k, rational_truncation(probe->s)));
      }
    } catch (const SingularityError& e) {
      f.diverging_term_index = e.term_index();
    }
  }
  return f;
}

}  // namespace

RegResult regularized_det(const Spectrum& spec) {
  if (is_prime_type(spec)) return RegResult{natural_boundary(spec)};
  const Closed c = closed_form(spec);
  RegSuccess r;
  r.zeta0 = c.zeta0;
  r.zeta_prime0 = -std::log(spec.scale) * c.zeta0 + c.zeta_prime0;
  r.det = std::exp(-r.zeta_prime0);
  r.zeta_prime0_fd = richardson_derivative_at_zero(spec);
  return RegResult{r};
}

ScalingReport scaling_check(const Spectrum& spec, double mu) {
  if (is_prime_type(spec)) throw Error(ErrorKind::InvalidArgument, "spectrum has no regularized determinant");
  const RegResult base = regularized_det(spec);
  ScalingReport rep;
  rep.lhs = richardson_derivative_at_zero(spec.scaled(mu));
  rep.rhs = -std::log(mu * mu) * base.success().zeta0 + base.success().zeta_prime0;
  rep.abs_err = std::abs(rep.lhs - rep.rhs);
  return rep;
}

WZero w_zero(const Spectrum& spec, double mu) {
  WZero w;
  const RegResult r = regularized_det(spec.scaled(mu));
  if (r.ok()) {
    w.value = -0.5 * std::log(r.success().det);
  } else {
    w.failure = r.failure();
    w.obstructed = {"P(0)", "dP/ds(0)"};
  }
  return w;
}

std::string reg_result_to_json(const RegResult& r) {
  if (r.ok()) {
    const auto& s = r.success();
    return "{\"outcome\":\"success\",\"zeta0\":" + json_number(s.zeta0) + ",\"zeta_prime0\":" +
           json_number(s.zeta_prime0) + ",\"det\":" + json_number(s.det) + ",\"zeta_prime0_fd\":" +
           json_number(s.zeta_prime0_fd) + "}";
  }
  const auto& f = r.failure();
  std::string out = "{\"outcome\":\"failure\",\"reason\":" + json_string(f.reason) + ",\"nearest\":[";
  for (std::size_t i = 0; i < f.nearest.size(); ++i) {
    const auto& e = f.nearest[i];
    if (i) out += ",";
    out += "{\"re\":" + json_number(e.s.real()) + ",\"im\":" + json_number(e.s.imag()) +
           ",\"k\":" + std::to_string(e.k) + ",\"kind\":" + json_string(std::string(to_string(e.kind))) + "}";
  }
  out += "],\"diverging_term_index\":" + std::to_string(f.diverging_term_index) +
         ",\"accumulating\":" + (f.evidence.accumulating ? "true" : "false") + ",\"evidence\":[";
  for (std::size_t i = 0; i < f.evidence.rows.size(); ++i) {
    const auto& row = f.evidence.rows[i];
    if (i) out += ",";
    out += "{\"sigma\":" + json_number(row.sigma) + ",\"count\":" + std::to_string(row.count) +
           ",\"min_re\":" + json_number(row.min_re) + ",\"argmin_k\":" + std::to_string(row.argmin_k) + "}";
  }
  return out + "]}";
}

}  // namespace zetareg
