#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "zetareg/ffield.hpp"

using namespace zetareg;

namespace {

Poly to_poly(const oracle::Vec& v) { return Poly(v.begin(), v.end()); }

}  // namespace

TEST_CASE("ff_make picks the lowest monic irreducible") {
  CHECK(ff_make(2, 1).modulus() == Poly{0, 1});
  CHECK(ff_make(2, 2).modulus() == Poly{1, 1, 1});
  CHECK(ff_make(5, 1).order() == 5);
  CHECK(find_irreducible(2, 3) == Poly{1, 1, 0, 1});
  CHECK(find_irreducible(3, 1) == Poly{0, 1});
  for (auto [p, n] : {std::pair{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {3, 4}}) {
    CAPTURE(p);
    CAPTURE(n);
    CHECK(find_irreducible(p, n) == to_poly(oracle::first_irreducible(p, n)));
  }
}

TEST_CASE("ff_make rejects bad input") {
  CHECK_THROWS_AS(ff_make(4, 1), Error);
  try {
    ff_make(6, 2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonPrime);
  }
  try {
    ff_make(2, 40);
    FAIL("expected DegreeOutOfRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeOutOfRange);
  }
  CHECK_THROWS_AS(FieldSpec(2, Poly{1, 0, 1}), Error);  // x^2 + 1 = (x + 1)^2
}

TEST_CASE("small field examples") {
  const FieldSpec f2 = ff_make(2, 1);
  CHECK(ff_add(FieldElement(f2, 1), FieldElement(f2, 1)).is_zero());
  const FieldSpec f4 = ff_make(2, 2);
  const FieldElement w(f4, f4.generator());
  CHECK((w * w).coeffs() == Poly{1, 1});
  const FieldSpec f5 = ff_make(5, 1);
  CHECK(ff_inv(FieldElement(f5, 2)).value() == 3);
  try {
    ff_inv(FieldElement(f5, 0));
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
  try {
    ff_add(FieldElement(f4, 1), FieldElement(f5, 1));
    FAIL("expected MixedFields");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MixedFields);
  }
}

TEST_CASE("field axioms by enumeration") {
  for (auto [p, a] : {std::pair{2, 1}, {2, 2}, {2, 3}, {3, 2}, {5, 2}, {2, 4}, {7, 1}}) {
    const FieldSpec F = ff_make(p, a);
    const auto all = ff_enumerate(F);
    REQUIRE(all.size() == F.order());
    std::set<FieldSpec::Elem> distinct;
    for (const auto& x : all) distinct.insert(x.value());
    CHECK(distinct.size() == F.order());
    for (const auto& x : all) {
      for (const auto& y : all) {
        CHECK(F.add(x.value(), y.value()) == F.add(y.value(), x.value()));
        CHECK(F.mul(x.value(), y.value()) == F.mul(y.value(), x.value()));
        CHECK(F.sub(F.add(x.value(), y.value()), y.value()) == x.value());
      }
      if (x.is_zero()) continue;
      CHECK(F.mul(x.value(), F.inv(x.value())) == 1);
      CHECK(F.pow(x.value(), BigInt(F.order() - 1)) == 1);
    }
  }
}

TEST_CASE("multiplication matches the independent field") {
  for (auto [p, a] : {std::pair{2, 3}, {2, 5}, {3, 3}, {5, 2}}) {
    const FieldSpec F = ff_make(p, a);
    const oracle::Gf G(p, a);
    for (std::uint64_t i = 0; i < F.order(); i += 3) {
      for (std::uint64_t j = 0; j < F.order(); j += 5) {
        const auto prod = G.mul(G.element(i), G.element(j));
        CHECK(F.coeffs(F.mul(i, j)) == Poly(prod.begin(), prod.end()));
      }
    }
  }
}

TEST_CASE("distributivity and Frobenius") {
  const FieldSpec F = ff_make(3, 3);
  for (std::uint64_t x = 0; x < F.order(); x += 2) {
    for (std::uint64_t y = 1; y < F.order(); y += 3) {
      const auto z = (x * 7 + y) % F.order();
      CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
      CHECK(F.pow(F.add(x, y), 3) == F.add(F.pow(x, 3), F.pow(y, 3)));
    }
  }
}

TEST_CASE("trace and squares") {
  for (auto [p, a] : {std::pair{2, 3}, {3, 2}, {5, 2}}) {
    const FieldSpec F = ff_make(p, a);
    for (std::uint64_t x = 0; x < F.order(); ++x) {
      // Tr(x) = x + x^p + ... + x^{p^{a-1}}
      std::uint64_t t = 0, y = x;
      for (int i = 0; i < a; ++i) {
        t = F.add(t, y);
        y = F.pow(y, p);
      }
      CHECK(t == F.from_int(static_cast<std::int64_t>(F.trace(x))));
      bool square = false;
      for (std::uint64_t r = 0; r < F.order(); ++r) square = square || F.mul(r, r) == x;
      CHECK(F.is_square(x) == square);
    }
  }
}

TEST_CASE("irreducible_count") {
  CHECK(irreducible_count(2, 1) == 2);
  CHECK(irreducible_count(2, 2) == 1);
  CHECK(irreducible_count(2, 4) == 3);
  for (auto [p, n] : {std::pair{2, 3}, {2, 6}, {3, 3}, {3, 4}, {5, 3}}) {
    CHECK(irreducible_count(p, n) == oracle::count_irreducible(p, n));
  }
  for (std::uint64_t q : {2, 3, 4, 8, 9, 25}) {
    for (unsigned n = 1; n <= 12; ++n) {
      BigInt sum = 0;
      for (auto d : divisors(n)) sum += BigInt(d) * irreducible_count(q, static_cast<unsigned>(d));
      CHECK(sum == ipow(BigInt(q), n));
    }
  }
}

TEST_CASE("ff_enumerate order and budget") {
  const auto f2 = ff_enumerate(ff_make(2, 1));
  REQUIRE(f2.size() == 2);
  CHECK(f2[0].value() == 0);
  CHECK(f2[1].value() == 1);
  try {
    ff_enumerate(ff_make(2, 10), 100);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("subfield embedding is a ring homomorphism") {
  const FieldSpec sub = ff_make(2, 2), ext = ff_make(2, 6);
  const FieldEmbedding phi(sub, ext);
  for (std::uint64_t x = 0; x < 4; ++x) {
    for (std::uint64_t y = 0; y < 4; ++y) {
      CHECK(phi(sub.add(x, y)) == ext.add(phi(x), phi(y)));
      CHECK(phi(sub.mul(x, y)) == ext.mul(phi(x), phi(y)));
    }
  }
  CHECK(phi(1) == 1);
}

TEST_CASE("primitive element generates the group") {
  const FieldSpec F = ff_make(3, 2);
  const auto g = primitive_element(F);
  std::set<std::uint64_t> seen;
  std::uint64_t x = 1;
  for (std::uint64_t i = 0; i + 1 < F.order(); ++i) {
    seen.insert(x);
    x = F.mul(x, g);
  }
  CHECK(seen.size() == F.order() - 1);
}

TEST_CASE("polynomial text round trip") {
  CHECK(format_poly(Poly{1, 1, 1}) == "1 + x + x^2");
  CHECK(format_poly(Poly{}) == "0");
  CHECK(parse_poly_fp("x^3 + x + 1", 2) == Poly{1, 1, 0, 1});
  CHECK(parse_poly_fp("2*x^2 + 3x + 4", 5) == Poly{4, 3, 2});
  CHECK(parse_poly_fp("(x + 1)^2", 2) == Poly{1, 0, 1});
  CHECK_THROWS_AS(parse_poly_fp("x +* 1", 2), Error);
}
