#include <doctest.h>

#include <cmath>

#include "zetareg/zetacurve.hpp"

using namespace zetareg;

namespace {

CurveZeta p1_f2() { return CurveZeta(LPolynomial(2, 0, {BigInt(1)})); }
CurveZeta ell_f2() { return CurveZeta(lpoly_from_curve(parse_curve("ell p=2 a3=1"))); }
CurveZeta hyp_f5() { return CurveZeta(lpoly_from_curve(parse_curve("hyp p=5 f=x^5+x+1"))); }

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

}  // namespace

TEST_CASE("closed-form values") {
  // 1/((1 - 1/4)(1 - 1/2)) = 8/3
  CHECK(std::abs(zeta_eval(p1_f2(), 2.0) - 8.0 / 3.0) < 1e-14);
  // y^2 + y = x^3 over F_2: (1 + 2/16) / ((1 - 1/4)(1 - 1/2)) = 3
  CHECK(std::abs(zeta_eval(ell_f2(), 2.0) - 3.0) < 1e-14);
  CHECK(std::abs(zeta_eval(ell_f2(), 3.0) - 11.0 / 7.0) < 1e-14);
}

TEST_CASE("poles are refused") {
  const CurveZeta z = ell_f2();
  for (Complex s : {Complex(0, 0), Complex(1, 0), Complex(1, z.period()), Complex(0, -2 * z.period())}) {
    try {
      zeta_eval(z, s);
      FAIL("expected NearPole");
    } catch (const SingularityError& e) {
      CHECK(e.kind() == ErrorKind::NearPole);
      CHECK(e.which() == SingularityKind::Pole);
      CHECK(std::abs(e.s() - s) < 1e-9);
    }
  }
  CHECK_NOTHROW(zeta_eval(z, Complex(1.0 + 1e-6, 0)));
}

TEST_CASE("periodicity in the imaginary direction") {
  for (const CurveZeta& z : {p1_f2(), ell_f2(), hyp_f5()}) {
    for (Complex s : {Complex(0.3, 0.2), Complex(2.0, -1.0), Complex(-1.5, 4.0)}) {
      CHECK(rel(zeta_eval(z, s), zeta_eval(z, s + Complex(0, z.period()))) < 1e-10);
    }
  }
}

TEST_CASE("functional equation on a grid") {
  for (const CurveZeta& z : {p1_f2(), ell_f2(), hyp_f5()}) {
    for (int i = 0; i < 10; ++i) {
      for (int j = 0; j < 5; ++j) {
        const Complex s(-1.25 + 0.4 * i, -2.7 + 1.5 * j);
        CHECK(functional_equation_deviation(z, s) <= 1e-10);
      }
    }
  }
}

TEST_CASE("effective divisor counts") {
  const auto b = effective_divisor_counts(LPolynomial(2, 0, {BigInt(1)}), 10);
  for (int n = 0; n <= 10; ++n) CHECK(b[n] == (BigInt(1) << (n + 1)) - 1);
  // genus 1: b_0 = 1 and b_n = h (q^n - 1)/(q - 1) for n >= 1
  const auto e = effective_divisor_counts(ell_f2().L(), 8);
  CHECK(e[0] == 1);
  for (int n = 1; n <= 8; ++n) CHECK(e[n] == 3 * ((BigInt(1) << n) - 1));
}

TEST_CASE("Euler product and Dirichlet series agree") {
  for (const CurveZeta& z : {p1_f2(), ell_f2(), hyp_f5()}) {
    const PrimeCountTable t = prime_count_table(z.L(), 40);
    for (double s : {2.0, 3.0}) {
      const Complex exact = zeta_eval(z, s);
      const double e_dir = rel(zeta_dirichlet_partial(z, s, 40), exact);
      const double e_eul = rel(euler_product_partial(z, t, s, 40), exact);
      CHECK(e_dir <= 1e-6);
      CHECK(e_eul <= 1e-6);
      CHECK(rel(zeta_dirichlet_partial(z, s, 20), exact) >= e_dir);
      CHECK(rel(euler_product_partial(z, t, s, 20), exact) >= e_eul);
    }
  }
  CHECK_THROWS_AS(euler_product_partial(p1_f2(), prime_count_table(p1_f2().L(), 5), 2.0, 10), Error);
}

TEST_CASE("zeros lie on the critical line") {
  const CurveZeta z = hyp_f5();
  const auto zeros = zeta_zeros(z, -z.period(), z.period());
  CHECK(zeros.size() >= 4);
  for (const auto& s : zeros) {
    CHECK(std::abs(s.real() - 0.5) < 1e-9);
    CHECK(std::abs(z.L()(z.u_of(s))) < 1e-9);
  }
  for (std::size_t i = 1; i < zeros.size(); ++i) CHECK(zeros[i - 1].imag() <= zeros[i].imag());
  CHECK(zeta_zeros(p1_f2(), -10, 10).empty());
}
