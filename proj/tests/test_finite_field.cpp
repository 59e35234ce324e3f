#include <doctest.h>

#include <random>

#include "pg/finite_field.hpp"
#include "support/oracles.hpp"

using namespace pg;

namespace {

FieldElement fe(const FiniteField& f, long long v) { return {f, f.from_int(v)}; }

// Brute-force modulus oracle: first monic irreducible quadratic over GF(7)
// in low-degree-first lexicographic coefficient order, irreducibility by
// root search.
std::vector<unsigned> first_irreducible_quadratic_mod7() {
  for (unsigned a0 = 0; a0 < 7; ++a0)
    for (unsigned a1 = 0; a1 < 7; ++a1) {
      bool has_root = false;
      for (unsigned c = 0; c < 7; ++c)
        if ((c * c + a1 * c + a0) % 7 == 0) has_root = true;
      if (!has_root) return {a0, a1, 1};
    }
  return {};
}

}  // namespace

TEST_CASE("prime field GF(7) basics") {
  const FiniteField& f = FiniteField::get(7, 1);
  CHECK(f.size() == 7);
  CHECK(f.modulus() == std::vector<unsigned>{0, 1});  // plain mod-7 arithmetic
  CHECK((fe(f, 3) + fe(f, 5)) == fe(f, 1));
  CHECK((fe(f, 3) / fe(f, 5)) == fe(f, 2));  // 5 * 2 = 10 = 3
  CHECK((fe(f, 3) - fe(f, 5)) == fe(f, 5));
  CHECK_THROWS_AS(fe(f, 3) / fe(f, 0), DivisionByZero);
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_AS(FiniteField::get(4, 2), NonPrimeCharacteristic);
  CHECK_THROWS_AS(FiniteField::get(1, 1), NonPrimeCharacteristic);
  CHECK_THROWS_AS(FiniteField::get(7, 0), DegreeOutOfRange);
  CHECK_THROWS_AS(FiniteField::get(7, 9), DegreeOutOfRange);  // 7^9 > 2^20
}

TEST_CASE("mixed-field arithmetic is rejected") {
  const FiniteField& f7 = FiniteField::get(7, 1);
  const FiniteField& f49 = FiniteField::get(7, 2);
  CHECK_THROWS_AS(fe(f7, 1) + fe(f49, 1), MixedFields);
}

TEST_CASE("GF(49) modulus matches the brute-force oracle and is deterministic") {
  const FiniteField& f = FiniteField::get(7, 2);
  CHECK(f.modulus() == first_irreducible_quadratic_mod7());
  CHECK(f.modulus() == std::vector<unsigned>{1, 0, 1});  // x^2 + 1
  CHECK(&FiniteField::get(7, 2) == &f);                  // interned
  CHECK(FiniteField::get(7, 2).modulus() == f.modulus());
}

TEST_CASE("GF(49): x * x reduces to -1") {
  const FiniteField& f = FiniteField::get(7, 2);
  uint32_t x = f.pack({0, 1});
  CHECK(f.mul(x, x) == f.from_int(-1));
}

TEST_CASE("sqrt: zero, absent, present with lex tie-break") {
  const FiniteField& f7 = FiniteField::get(7, 1);
  CHECK(f7.sqrt(0) == 0u);
  // squares mod 7 are {0,1,2,4} by brute force
  std::set<uint32_t> squares;
  for (uint32_t b = 0; b < 7; ++b) squares.insert(f7.mul(b, b));
  CHECK(squares == std::set<uint32_t>{0, 1, 2, 4});
  CHECK(!f7.sqrt(f7.from_int(5)).has_value());

  const FiniteField& f49 = FiniteField::get(7, 2);
  auto s = f49.sqrt(f49.from_int(5));
  REQUIRE(s.has_value());
  CHECK(f49.mul(*s, *s) == f49.from_int(5));
  // oracle: (a+bx)^2 = 5 forces a=0, b^2 = -5 = 2, so b in {3,4}; lex-least is 3x
  CHECK(f49.coeffs(*s) == std::vector<unsigned>{0, 3});
  auto i = f49.sqrt(f49.neg(f49.one()));
  REQUIRE(i.has_value());
  CHECK(f49.coeffs(*i) == std::vector<unsigned>{0, 1});  // x itself: modulus is x^2+1
}

TEST_CASE("sqrt soundness and completeness over GF(7^k), k <= 4") {
  for (unsigned k = 1; k <= 4; ++k) {
    const FiniteField& f = FiniteField::get(7, k);
    std::vector<char> is_square(f.size(), 0);
    for (uint32_t b = 0; b < f.size(); ++b) is_square[f.mul(b, b)] = 1;
    for (uint32_t a = 0; a < f.size(); ++a) {
      auto s = f.sqrt(a);
      if (s) {
        CHECK(f.mul(*s, *s) == a);
      }
      CHECK(s.has_value() == static_cast<bool>(is_square[a]));
    }
    bool even = k % 2 == 0;
    CHECK(f.sqrt(f.neg(f.one())).has_value() == even);
    CHECK(f.sqrt(f.from_int(5)).has_value() == even);
  }
}

TEST_CASE("mult_order") {
  const FiniteField& f7 = FiniteField::get(7, 1);
  CHECK(f7.mult_order(f7.one()) == 1);
  {
    // oracle: powers of 3 mod 7 cycle through all six units
    uint64_t n = 1;
    int acc = 3;
    while (acc != 1) {
      acc = acc * 3 % 7;
      ++n;
    }
    CHECK(n == 6);
    CHECK(f7.mult_order(f7.from_int(3)) == 6);
  }
  const FiniteField& f49 = FiniteField::get(7, 2);
  CHECK(f49.mult_order(f49.neg(f49.one())) == 2);
  CHECK_THROWS_AS(f49.mult_order(0), ZeroElement);
}

TEST_CASE("field axioms and order divisibility, randomized") {
  std::mt19937_64 rng(20260810);
  for (unsigned k : {1u, 2u, 3u, 4u}) {
    const FiniteField& f = FiniteField::get(7, k);
    for (int trial = 0; trial < 200; ++trial) {
      uint32_t a = static_cast<uint32_t>(rng() % f.size());
      uint32_t b = static_cast<uint32_t>(rng() % f.size());
      uint32_t c = static_cast<uint32_t>(rng() % f.size());
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
      CHECK(f.add(a, f.add(b, c)) == f.add(f.add(a, b), c));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      if (a != 0) {
        CHECK(f.mul(a, f.inv(a)) == f.one());
        CHECK((f.size() - 1) % f.mult_order(a) == 0);
      }
    }
  }
}

TEST_CASE("generator is primitive") {
  for (unsigned k : {1u, 2u, 3u}) {
    const FiniteField& f = FiniteField::get(7, k);
    CHECK(f.mult_order(f.generator()) == f.size() - 1);
  }
}
