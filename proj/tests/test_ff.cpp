#include <random>

#include "doctest.h"
#include "fracjump/errors.hpp"
#include "fracjump/ff.hpp"

using namespace fracjump;

TEST_CASE("field construction validates the modulus") {
  CHECK_THROWS_AS(PrimeField(0), ParameterError);
  CHECK_THROWS_AS(PrimeField(1), ParameterError);
  CHECK_THROWS_AS(PrimeField(9), ParameterError);
  CHECK_THROWS_AS(PrimeField(257, Backend::tables), ParameterError);
  CHECK_THROWS_AS(PrimeField(0x80000000u), ParameterError);
  CHECK_NOTHROW(PrimeField(2147483647u));
  CHECK(PrimeField(251, Backend::tables).backend() == Backend::tables);
  CHECK(PrimeField(251).backend() == Backend::computed);
}

TEST_CASE("worked add/mul/inv/neg values") {
  for (auto backend : {Backend::computed, Backend::tables}) {
    const PrimeField f5(5, backend), f3(3, backend), f7(7, backend);
    CHECK(f5.add(f5.element(3), f5.element(4)) == f5.element(2));
    CHECK(f5.add(f5.element(0), f5.element(0)) == f5.element(0));
    CHECK(f3.add(f3.element(2), f3.element(2)) == f3.element(1));

    CHECK(f5.mul(f5.element(3), f5.element(2)) == f5.element(1));
    CHECK(f7.mul(f7.element(3), f7.element(5)) == f7.element(1));
    CHECK(f5.mul(f5.element(4), f5.element(0)) == f5.element(0));

    CHECK(f5.inv(f5.element(4)) == f5.element(4));
    CHECK(f5.inv(f5.element(3)) == f5.element(2));
    CHECK(f7.inv(f7.element(3)) == f7.element(5));

    CHECK(f5.neg(f5.element(1)) == f5.element(4));
    CHECK(f5.neg(f5.element(0)) == f5.element(0));
    CHECK(f3.neg(f3.element(2)) == f3.element(1));
  }
}

TEST_CASE("error paths") {
  const PrimeField f5(5), f7(7);
  CHECK_THROWS_AS(f5.inv(f5.element(0)), DivisionByZero);
  CHECK_THROWS_AS(f5.inv(Residue{0}), DivisionByZero);
  CHECK_THROWS_AS(PrimeField(5, Backend::tables).inv(Residue{0}), DivisionByZero);
  CHECK_THROWS_AS(f5.add(f5.element(1), f7.element(1)), ParameterError);
  CHECK_THROWS_AS(f5.mul(f7.element(1), f5.element(1)), ParameterError);
  CHECK_THROWS_AS(f5.neg(f7.element(1)), ParameterError);
  CHECK(f5.element(-1).value == 4);
  CHECK(f5.element(12).value == 2);
}

TEST_CASE("table and computed backends agree exhaustively for p <= 256") {
  for (std::uint32_t p = 2; p <= 256; ++p) {
    if (!is_prime(p)) continue;
    const PrimeField computed(p), tables(p, Backend::tables);
    for (Residue a = 0; a < p; ++a) {
      REQUIRE(computed.neg(a) == tables.neg(a));
      if (a != 0) {
        REQUIRE(computed.inv(a) == tables.inv(a));
        REQUIRE(computed.mul(a, computed.inv(a)) == 1);
        REQUIRE(computed.inv(a) == computed.pow(a, p - 2));
      }
      for (Residue b = 0; b < p; ++b) {
        REQUIRE(computed.add(a, b) == tables.add(a, b));
        REQUIRE(computed.mul(a, b) == tables.mul(a, b));
        REQUIRE(computed.add(a, b) == (a + b) % p);
        REQUIRE(computed.mul(a, b) == (a * b) % p);
      }
    }
  }
}

TEST_CASE("ring axioms: exhaustive for small p, sampled for large p") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const PrimeField f(p);
    for (Residue a = 0; a < p; ++a)
      for (Residue b = 0; b < p; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (Residue c = 0; c < p; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
  }

  std::mt19937_64 rng(20240611);
  for (std::uint32_t p : {65521u, 2147483647u}) {
    const PrimeField f(p);
    std::uniform_int_distribution<Residue> dist(0, p - 1);
    for (int k = 0; k < 2000; ++k) {
      const Residue a = dist(rng), b = dist(rng), c = dist(rng);
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
  }
}
