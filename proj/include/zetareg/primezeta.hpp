#pragma once

#include <functional>
#include <vector>

#include "zetareg/dirichlet.hpp"
#include "zetareg/zetacurve.hpp"

namespace zetareg {

/// Guard radius in u around each singular point of a Möbius term.
inline constexpr double kSingularGuard = 1e-8;

struct MobiusOptions {
  /// Evaluate even inside the guard radius (for probing divergence).
  bool allow_near_singular = false;
};

/// Prime zeta function of a curve: P(s, C) = sum over prime divisors of
/// Np^{-s} = sum_n pi(n) q^{-ns}.
class PrimeZeta {
 public:
  /// `n_max` sizes the cached prime count table used by the direct series.
  explicit PrimeZeta(CurveZeta z, int n_max = 64);

  const CurveZeta& zeta() const { return z_; }
  const PrimeCountTable& table() const { return table_; }

  /// Smallest K with max(1, sum |a_i|) q^{-K Re(s)} (1 + q) < 1e-12, in
  /// [1, 500]. Throws NonConvergent for Re(s) <= 0.
  int default_truncation(Complex s) const;
  /// Smallest D for which the tail of the direct series is below `tol`,
  /// capped at 20000. Requires Re(s) > 1.
  int direct_cutoff(Complex s, double tol = 1e-13) const;

 private:
  CurveZeta z_;
  PrimeCountTable table_;
  double coeff_l1_;
};

/// sum_{n=1}^{D} pi(n) q^{-ns}; converges to P(s, C) only for Re(s) > 1.
Complex prime_zeta_direct(const PrimeZeta& pz, Complex s, int D);

/// sum_{k=1}^{K} mu(k)/k log zeta(ks, C), with K = default_truncation(s)
/// when K <= 0. The logarithm is taken factor by factor,
///   log zeta = sum_j log(1 - u/u_j) - log(1 - u) - log(1 - q u),
/// each factor on its principal branch.
Complex prime_zeta_mobius(const PrimeZeta& pz, Complex s, int K = 0, MobiusOptions opt = {});

/// dP/ds from the logarithmic derivative of each Möbius term.
Complex prime_zeta_derivative(const PrimeZeta& pz, Complex s, int K = 0, MobiusOptions opt = {});

struct Singularity {
  Complex s;
  int k = 1;
  SingularityKind kind = SingularityKind::Pole;
};

struct SingularityList {
  std::vector<Singularity> entries;
  double sigma_min = 0.0;
};

/// s = rho / k for square-free k <= k_max, rho a pole or zero of zeta(., C),
/// with Re(s) > sigma_min and Im(s) in [t_lo, t_hi]. Deduplicated (first
/// occurrence in k-ascending, poles-first order wins), sorted by Re(s)
/// descending then Im(s) ascending.
SingularityList singularity_enumerate(const PrimeZeta& pz, double sigma_min, double t_lo, double t_hi, int k_max);

struct BoundaryRow {
  double sigma = 0.0;
  std::size_t count = 0;
  double min_re = 0.0;  // NaN when count == 0
  int argmin_k = 0;     // 0 when count == 0
};

struct BoundaryReport {
  std::vector<BoundaryRow> rows;
  /// Counts strictly increase and min_re strictly decreases along the
  /// schedule.
  bool accumulating = false;
};

using SingularityEnumerator = std::function<SingularityList(double sigma_min, double t_lo, double t_hi, int k_max)>;

BoundaryReport boundary_evidence_report(const SingularityEnumerator& enumerate, const std::vector<double>& sigmas,
                                        double t_lo, double t_hi, int k_max);
BoundaryReport boundary_evidence_report(const PrimeZeta& pz, const std::vector<double>& sigmas, double t_lo,
                                        double t_hi, int k_max);

/// Classical prime zeta P(s) = sum_k mu(k)/k log zeta(ks), principal
/// branch per term. K <= 0 selects the default truncation.
Complex prime_zeta_rational(Complex s, int K = 0, MobiusOptions opt = {});
Complex prime_zeta_rational_derivative(Complex s, int K = 0, MobiusOptions opt = {});
int rational_truncation(Complex s);

/// Singularities rho / k of P(s): rho = 1 and the nontrivial zeros
/// 1/2 + i gamma with |gamma| <= 60.
SingularityList singularity_enumerate_rational(double sigma_min, double t_lo, double t_hi, int k_max);

/// Ordinates of the Riemann zeros in (0, 60], computed once.
const std::vector<double>& riemann_zero_ordinates();

/// sum_{p = 1 mod m} p^{-s} for m in {3, 4, 6} via the real character
/// mod m. Requires Re(s) > 1 unless `experimental`.
Complex prime_zeta_progression(Complex s, int m, int K = 0, bool experimental = false);

}  // namespace zetareg
