#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zetareg {

enum class ErrorKind {
  ParseError,
  InvalidArgument,
  NonPrime,
  DegreeOutOfRange,
  DivisionByZero,
  MixedFields,
  BudgetExceeded,
  SingularCurve,
  UnsupportedModel,
  NonIntegralPrimeCount,
  NonIntegralCoefficient,
  GenusMismatch,
  UnsupportedModulus,
  TrivialCharacter,
  OutsideValidatedDomain,
  RootFindingFailed,
  PoleAtOne,
  NearPole,
  NearSingularity,
  NonConvergent,
};

/// Coarse grouping used for process exit codes: parse (2), domain (3),
/// numerical (4).
enum class ErrorClass { Parse, Domain, Numerical };

std::string_view error_code(ErrorKind kind) noexcept;
ErrorClass error_class(ErrorKind kind) noexcept;
int exit_code(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

enum class SingularityKind { Pole, Zero };

std::string_view to_string(SingularityKind kind) noexcept;

/// Raised when an evaluation point sits within the guard radius of a pole or
/// zero of a zeta factor. `k` is the Möbius term index that hit it (1 for
/// plain zeta evaluations).
class SingularityError : public Error {
 public:
  SingularityError(ErrorKind kind, std::complex<double> s, int k,
                   SingularityKind which, const std::string& message);

  std::complex<double> s() const noexcept { return s_; }
  int term_index() const noexcept { return k_; }
  SingularityKind which() const noexcept { return which_; }

 private:
  std::complex<double> s_;
  int k_;
  SingularityKind which_;
};

}  // namespace zetareg
