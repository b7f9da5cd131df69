#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zetareg/primezeta.hpp"

namespace zetareg {

struct Eigenvalue {
  double lambda = 1.0;
  std::uint64_t multiplicity = 1;
};

struct ExplicitSpectrum {
  std::vector<Eigenvalue> eigs;
};
/// lambda_n = n^alpha, n >= 1.
struct PowerFamily {
  double alpha = 1.0;
};
/// lambda_n = n^2 over n != 0: each |n| counted twice.
struct CircleLaplacian {};
/// lambda = q^n with multiplicity pi(n).
struct CurvePrimes {
  std::shared_ptr<const PrimeZeta> pz;
};
struct RationalPrimes {};
struct ProgressionPrimes {
  int m = 4;
};

using SpectrumKind =
    std::variant<ExplicitSpectrum, PowerFamily, CircleLaplacian, CurvePrimes, RationalPrimes, ProgressionPrimes>;

struct Spectrum {
  SpectrumKind kind;
  /// mu^2, multiplying every eigenvalue.
  double scale = 1.0;

  /// Validates positivity of eigenvalues, multiplicities, alpha and scale.
  static Spectrum make(SpectrumKind kind, double scale = 1.0);
  /// Same spectrum with scale multiplied by mu^2.
  Spectrum scaled(double mu) const;
};

std::string spectrum_name(const Spectrum& spec);

/// zeta_D(s) = sum mult * (scale * lambda)^{-s}, continued where a closed
/// form exists. Prime-type spectra use the direct series for Re(s) > 1 and
/// the Möbius continuation otherwise.
Complex spectral_zeta(const Spectrum& spec, Complex s, bool experimental = false);

struct RegSuccess {
  double zeta0 = 0.0;
  double zeta_prime0 = 0.0;
  double det = 0.0;
  /// zeta'_D(0) from Richardson-extrapolated central differences.
  double zeta_prime0_fd = 0.0;
};

struct RegFailure {
  std::string reason = "natural_boundary";
  std::vector<Singularity> nearest;
  int diverging_term_index = 0;
  BoundaryReport evidence;
};

struct RegResult {
  std::variant<RegSuccess, RegFailure> outcome;

  bool ok() const { return std::holds_alternative<RegSuccess>(outcome); }
  const RegSuccess& success() const { return std::get<RegSuccess>(outcome); }
  const RegFailure& failure() const { return std::get<RegFailure>(outcome); }
};

/// (100 D(1e-4) - D(1e-3)) / 99 with D(h) the central difference of
/// Re spectral_zeta at 0.
double richardson_derivative_at_zero(const Spectrum& spec);

RegResult regularized_det(const Spectrum& spec);

struct ScalingReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
};

/// lhs: finite-difference derivative at 0 of the mu^2-scaled spectral zeta.
/// rhs: -ln(mu^2) zeta_D(0) + zeta'_D(0). Throws InvalidArgument when the
/// spectrum has no regularized determinant.
ScalingReport scaling_check(const Spectrum& spec, double mu);

struct WZero {
  std::optional<double> value;
  std::optional<RegFailure> failure;
  /// Terms of W[0] = 1/2 ln mu^2 P(0) + 1/2 P'(0) without a value at s = 0.
  std::vector<std::string> obstructed;
};

/// -1/2 ln det of the mu^2-scaled spectrum.
WZero w_zero(const Spectrum& spec, double mu);

std::string reg_result_to_json(const RegResult& r);

}  // namespace zetareg
