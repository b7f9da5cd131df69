#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zetareg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

/// Deterministic trial division; intended for desk-scale inputs.
bool is_prime(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs in ascending order.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

/// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Möbius function; mobius(1) == 1.
int mobius(std::uint64_t n);

/// mu[n] for 0 <= n <= n_max (mu[0] is unused and set to 0).
std::vector<int> mobius_sieve(std::size_t n_max);

/// Primes <= n_max by the sieve of Eratosthenes. Throws BudgetExceeded past
/// 10^8.
std::vector<std::uint32_t> prime_sieve(std::uint64_t n_max);

/// If n = p^a with p prime and a >= 1 returns {p, a}, else {0, 0}.
std::pair<std::uint64_t, int> prime_power(std::uint64_t n);

BigInt ipow(const BigInt& base, unsigned exponent);

/// Exact q^n, throwing BudgetExceeded if it exceeds `limit`.
std::uint64_t checked_pow(std::uint64_t q, unsigned n, std::uint64_t limit);

/// log(x) for a positive big integer without overflowing double.
double log_abs(const BigInt& x);

/// x * exp(log_scale) evaluated without intermediate overflow. The sign of x
/// is preserved; x == 0 yields 0.
double scaled_to_double(const BigInt& x, double log_scale);

/// log(1 + z) accurate for small |z|, principal branch.
Complex log1p(Complex z);

/// (exp(z) - 1) / z, continuous at z == 0.
Complex expm1_over(Complex z);

}  // namespace zetareg
