#include "zetareg/arith.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "zetareg/error.hpp"

namespace zetareg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int mobius(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "mobius: n must be >= 1");
  int mu = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::vector<int> mobius_sieve(std::size_t n_max) {
  std::vector<int> mu(n_max + 1, 1);
  std::vector<bool> composite(n_max + 1, false);
  std::vector<std::size_t> primes;
  mu[0] = 0;
  for (std::size_t i = 2; i <= n_max; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (std::size_t p : primes) {
      if (i * p > n_max) break;
      composite[i * p] = true;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = -mu[i];
    }
  }
  return mu;
}

std::vector<std::uint32_t> prime_sieve(std::uint64_t n_max) {
  constexpr std::uint64_t kLimit = 100'000'000;
  if (n_max > kLimit) {
    throw Error(ErrorKind::BudgetExceeded,
                "prime_sieve: n_max " + std::to_string(n_max) + " exceeds 10^8");
  }
  std::vector<std::uint32_t> primes;
  if (n_max < 2) return primes;
  // Odd-only sieve: index i represents 2i + 1.
  const std::uint64_t half = (n_max - 1) / 2;
  std::vector<bool> composite(half + 1, false);
  primes.push_back(2);
  for (std::uint64_t i = 1; i <= half; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    primes.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t j = (p * p - 1) / 2; j <= half; j += p) composite[j] = true;
  }
  return primes;
}

std::pair<std::uint64_t, int> prime_power(std::uint64_t n) {
  if (n < 2) return {0, 0};
  const auto f = factorize(n);
  if (f.size() != 1) return {0, 0};
  return f.front();
}

BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

std::uint64_t checked_pow(std::uint64_t q, unsigned n, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (r > limit / q) {
      throw Error(ErrorKind::BudgetExceeded,
                  std::to_string(q) + "^" + std::to_string(n) +
                      " exceeds the enumeration budget " + std::to_string(limit));
    }
    r *= q;
  }
  if (r > limit) {
    throw Error(ErrorKind::BudgetExceeded,
                std::to_string(q) + "^" + std::to_string(n) +
                    " exceeds the enumeration budget " + std::to_string(limit));
  }
  return r;
}

namespace {

// Splits |x| = m * 2^e with m an exact double holding the top 53 bits.
std::pair<double, long> split_bits(const BigInt& x) {
  BigInt a = boost::multiprecision::abs(x);
  const long bits = static_cast<long>(boost::multiprecision::msb(a)) + 1;
  const long shift = bits > 60 ? bits - 60 : 0;
  if (shift > 0) a >>= shift;
  return {a.convert_to<double>(), shift};
}

}  // namespace

double log_abs(const BigInt& x) {
  if (x == 0) return -std::numeric_limits<double>::infinity();
  const auto [m, e] = split_bits(x);
  return std::log(m) + static_cast<double>(e) * std::log(2.0);
}

double scaled_to_double(const BigInt& x, double log_scale) {
  if (x == 0) return 0.0;
  const auto [m, e] = split_bits(x);
  const double v = m * std::exp(static_cast<double>(e) * std::log(2.0) + log_scale);
  return x < 0 ? -v : v;
}

Complex log1p(Complex z) {
  const Complex w = 1.0 + z;
  if (w == 1.0) return z;
  if (std::abs(z) > 0.5) return std::log(w);
  // Compensates the rounding of 1 + z (Kahan's trick for log1p).
  return std::log(w) * (z / (w - 1.0));
}

Complex expm1_over(Complex z) {
  if (std::abs(z) < 1e-5) return 1.0 + z / 2.0 + z * z / 6.0;
  return (std::exp(z) - 1.0) / z;
}

}  // namespace zetareg
