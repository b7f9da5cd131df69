#include "zetareg/error.hpp"

namespace zetareg {

std::string_view error_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError: return "parse_error";
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::NonPrime: return "non_prime";
    case ErrorKind::DegreeOutOfRange: return "degree_out_of_range";
    case ErrorKind::DivisionByZero: return "division_by_zero";
    case ErrorKind::MixedFields: return "mixed_fields";
    case ErrorKind::BudgetExceeded: return "budget_exceeded";
    case ErrorKind::SingularCurve: return "singular_curve";
    case ErrorKind::UnsupportedModel: return "unsupported_model";
    case ErrorKind::NonIntegralPrimeCount: return "non_integral_prime_count";
    case ErrorKind::NonIntegralCoefficient: return "non_integral_coefficient";
    case ErrorKind::GenusMismatch: return "genus_mismatch";
    case ErrorKind::UnsupportedModulus: return "unsupported_modulus";
    case ErrorKind::TrivialCharacter: return "trivial_character";
    case ErrorKind::OutsideValidatedDomain: return "outside_validated_domain";
    case ErrorKind::RootFindingFailed: return "root_finding_failed";
    case ErrorKind::PoleAtOne: return "pole_at_one";
    case ErrorKind::NearPole: return "near_pole";
    case ErrorKind::NearSingularity: return "near_singularity";
    case ErrorKind::NonConvergent: return "non_convergent";
  }
  return "unknown";
}

ErrorClass error_class(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument:
      return ErrorClass::Parse;
    case ErrorKind::RootFindingFailed:
    case ErrorKind::PoleAtOne:
    case ErrorKind::NearPole:
    case ErrorKind::NearSingularity:
    case ErrorKind::NonConvergent:
      return ErrorClass::Numerical;
    default:
      return ErrorClass::Domain;
  }
}

int exit_code(ErrorKind kind) noexcept {
  switch (error_class(kind)) {
    case ErrorClass::Parse: return 2;
    case ErrorClass::Domain: return 3;
    case ErrorClass::Numerical: return 4;
  }
  return 1;
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

std::string_view to_string(SingularityKind kind) noexcept {
  return kind == SingularityKind::Pole ? "pole" : "zero";
}

SingularityError::SingularityError(ErrorKind kind, std::complex<double> s,
                                   int k, SingularityKind which,
                                   const std::string& message)
    : Error(kind, message), s_(s), k_(k), which_(which) {}

}  // namespace zetareg
