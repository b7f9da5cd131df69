#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "zetareg/dirichlet.hpp"

using namespace zetareg;

namespace {

constexpr double pi = std::numbers::pi;

}  // namespace

TEST_CASE("zeta at even integers") {
  CHECK(std::abs(riemann_zeta(2.0) - pi * pi / 6) < 1e-12);
  CHECK(std::abs(riemann_zeta(4.0) - std::pow(pi, 4) / 90) < 1e-13);
  CHECK(std::abs(riemann_zeta(0.0) + 0.5) < 1e-13);
  CHECK(std::abs(riemann_zeta(-1.0) + 1.0 / 12) < 1e-13);
  CHECK(std::abs(zeta_derivative(0.0) + 0.5 * std::log(2 * pi)) < 1e-12);
  CHECK_THROWS_AS(riemann_zeta(1.0), Error);
}

TEST_CASE("Bernoulli numbers") {
  const auto& b = bernoulli_even();
  CHECK(b[0] == Rational(1, 6));
  CHECK(b[1] == Rational(-1, 30));
  CHECK(b[5] == Rational(-691, 2730));
}

TEST_CASE("zeta agrees with the eta-series oracle") {
  for (Complex s : {Complex(0.5, 14.0), Complex(0.25, -3.0), Complex(-0.75, 40.0), Complex(2.5, 7.0),
                    Complex(0.9, 0.1), Complex(1.5, -55.0), Complex(0.5, 59.0)}) {
    CAPTURE(s);
    CHECK(in_validated_domain(s));
    CHECK(std::abs(riemann_zeta(s) - oracle::zeta_eta(s)) < 1e-10 * std::max(1.0, std::abs(riemann_zeta(s))));
  }
}

TEST_CASE("zeta - 1 stays accurate for large real part") {
  const double x = 40.0;
  double ref = 0;
  for (int n = 6; n >= 2; --n) ref += std::pow(n, -x);
  CHECK(std::abs(riemann_zeta_minus_one(x).real() - ref) < 1e-12 * ref);
}

TEST_CASE("derivative against finite differences") {
  for (Complex s : {Complex(0.5, 3.0), Complex(-0.5, 0.0), Complex(3.0, -2.0)}) {
    const double h = 1e-5;
    const Complex fd = (riemann_zeta(s + h) - riemann_zeta(s - h)) / (2 * h);
    CHECK(std::abs(zeta_derivative(s) - fd) < 1e-8);
  }
}

TEST_CASE("Hurwitz zeta") {
  const Complex s(0.3, 2.0);
  CHECK(std::abs(hurwitz_zeta(s, 1.0) - riemann_zeta(s)) < 1e-12);
  // zeta(s) (2^s - 1) = 2^s zeta(s, 1/2)
  const Complex two_s = std::pow(Complex(2.0), s);
  CHECK(std::abs(hurwitz_zeta(s, 0.5) - (two_s - 1.0) * riemann_zeta(s)) < 1e-11);
  // zeta(s, 1/4) + zeta(s, 3/4) = 4^s zeta(s, 1/2)... via 2^s (1 - 2^{-s}) zeta(s)
  const Complex four_s = std::pow(Complex(4.0), s);
  CHECK(std::abs(hurwitz_zeta(s, 0.25) + hurwitz_zeta(s, 0.75) - four_s * (1.0 - 1.0 / two_s) * riemann_zeta(s)) <
        1e-11);
}

TEST_CASE("Dirichlet L-functions") {
  const Character chi4 = Character::real(4);
  const Character chi3 = Character::real(3);
  CHECK(std::abs(dirichlet_l(1.0, chi4) - pi / 4) < 1e-10);
  CHECK(std::abs(dirichlet_l(1.0, chi3) - pi / (3 * std::sqrt(3.0))) < 1e-10);
  CHECK(std::abs(dirichlet_l(2.0, chi4).real() - 0.915965594177219015) < 1e-12);
  for (Complex s : {Complex(0.5, 4.0), Complex(2.0, 1.0), Complex(0.2, -7.0)}) {
    const Complex o4 = oracle::alternating_sum([&](int k) { return std::pow(Complex(2.0 * k + 1), -s); }, 60);
    CHECK(std::abs(dirichlet_l(s, chi4) - o4) < 1e-10);
  }
  CHECK(chi4(3) == -1);
  CHECK(chi4(2) == 0);
  CHECK(chi3(2) == -1);
  CHECK(Character::principal(4)(3) == 1);
  CHECK_THROWS_AS(dirichlet_l(2.0, Character::real(1)), Error);
  CHECK_THROWS_AS(dirichlet_l(2.0, Character::principal(3)), Error);
  CHECK_THROWS_AS(Character::real(5), Error);
}

TEST_CASE("Hardy Z and zero scan") {
  for (double t : {10.0, 17.3, 33.3, 55.0}) CHECK(std::abs(hardy_z(t) - oracle::hardy_z(t)) < 1e-8);
  const auto zeros = zeta_zero_scan(5, 60);
  CHECK(zeros.size() == 13);
  const auto ref = oracle::first_zeros(13);
  REQUIRE(ref.size() == 13);
  for (std::size_t i = 0; i < zeros.size(); ++i) CHECK(std::abs(zeros[i] - ref[i]) < 1e-6);
  for (double t : zeros) CHECK(std::abs(riemann_zeta(Complex(0.5, t))) < 1e-8);
}

TEST_CASE("arithmetic helpers") {
  const auto mu = mobius_sieve(1000);
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    CHECK(mu[n] == mobius(n));
    int s = 0;
    for (auto d : divisors(n)) s += mobius(d);
    CHECK(s == (n == 1 ? 1 : 0));
  }
  CHECK(prime_sieve(1000000).size() == 78498);
  CHECK(prime_power(49) == std::pair<std::uint64_t, int>{7, 2});
  CHECK(prime_power(12).first == 0);
  CHECK(std::abs(scaled_to_double(ipow(BigInt(10), 400), -400 * std::log(10.0)) - 1.0) < 1e-12);
}
