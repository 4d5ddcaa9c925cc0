#include <random>

#include "doctest.h"
#include "fracjump/errors.hpp"
#include "fracjump/poly.hpp"
#include "oracles.hpp"

using namespace fracjump;

namespace {

Poly P(const PrimeField& f, std::vector<std::int64_t> c) { return Poly::from_ints(f, c); }
const Poly kT = Poly::monomial(1, 1);

}  // namespace

TEST_CASE("Poly normalizes trailing zeros") {
  CHECK(Poly({1, 2, 0, 0}).degree() == 1);
  CHECK(Poly({0, 0}).is_zero());
  CHECK(Poly().degree() == -1);
}

TEST_CASE("poly_mulmod") {
  const PrimeField f5(5), f3(3);
  CHECK(poly_mulmod(f5, kT, kT, P(f5, {3, 0, 1})) == Poly::constant(2));
  const Poly m = P(f5, {1, 2, 3, 1});
  const Poly a = P(f5, {4, 0, 2, 3, 1});
  CHECK(poly_mulmod(f5, a, Poly::constant(1), m) == poly_rem(f5, a, m));
  CHECK(poly_mulmod(f3, P(f3, {0, 0, 1}), kT, P(f3, {-1, -1, 0, 1})) == P(f3, {1, 1}));

  CHECK_THROWS_AS(poly_mulmod(f5, kT, kT, P(f5, {3, 0, 2})), ParameterError);
  CHECK_THROWS_AS(poly_mulmod(f5, kT, kT, Poly::constant(1)), ParameterError);
  CHECK_THROWS_AS(QuotientElement::make(f5, kT, Poly{}), ParameterError);
}

TEST_CASE("powmod") {
  const PrimeField f5(5);
  const Poly m = P(f5, {3, 0, 1});
  const auto t = QuotientElement::make(f5, kT, m);
  CHECK(powmod(f5, t, 0).residue == Poly::constant(1));
  CHECK(powmod(f5, t, 1) == t);
  CHECK(powmod(f5, t, 8).residue == Poly::constant(1));
  for (int k = 1; k < 8; ++k) CHECK(powmod(f5, t, k).residue != Poly::constant(1));
}

TEST_CASE("powmod agrees with iterated mulmod on random inputs") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u, 13u}) {
    const PrimeField f(p);
    std::uniform_int_distribution<std::int64_t> coef(0, p - 1);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<std::int64_t> mc(1 + trial % 5 + 1), ac(6);
      for (auto& v : mc) v = coef(rng);
      mc.back() = 1;
      for (auto& v : ac) v = coef(rng);
      const Poly m = P(f, mc), a = P(f, ac);
      Poly acc = poly_rem(f, Poly::constant(1), m);
      for (unsigned e = 0; e < 30; ++e) {
        REQUIRE(poly_powmod(f, a, e, m) == acc);
        acc = poly_mulmod(f, acc, a, m);
      }
    }
  }
}

TEST_CASE("is_irreducible") {
  const PrimeField f5(5), f7(7);
  CHECK(is_irreducible(f5, P(f5, {3, 4, 0, 1})));
  CHECK_FALSE(is_irreducible(f5, P(f5, {1, 0, 1})));
  CHECK(is_irreducible(f7, P(f7, {-2, -1, 0, 0, 0, 0, 0, 1})));
  CHECK_THROWS_AS(is_irreducible(f5, Poly::constant(3)), ParameterError);
  CHECK(is_irreducible(f5, P(f5, {2, 3})));
  // non-monic input is normalized first
  CHECK(is_irreducible(f5, P(f5, {1, 3, 0, 2})) == is_irreducible(f5, P(f5, {3, 4, 0, 1})));
}

TEST_CASE("is_irreducible matches trial division for every monic poly of degree <= 6") {
  for (std::uint32_t p : {2u, 3u}) {
    const PrimeField f(p);
    for (int d = 1; d <= 6; ++d) {
      for (const auto& c : oracle::monic_polys(d, p)) {
        REQUIRE(is_irreducible(f, P(f, c)) == oracle::is_irreducible(c, p));
      }
    }
  }
  const PrimeField f5(5);
  for (int d = 1; d <= 4; ++d)
    for (const auto& c : oracle::monic_polys(d, 5)) REQUIRE(is_irreducible(f5, P(f5, c)) == oracle::is_irreducible(c, 5));
}

TEST_CASE("factor_trial_division") {
  auto fac = factor_trial_division(BigNat(124));
  REQUIRE(fac.size() == 2);
  CHECK(fac[0] == std::pair<BigNat, unsigned>(2, 2));
  CHECK(fac[1] == std::pair<BigNat, unsigned>(31, 1));
  CHECK(factor_trial_division(BigNat(1)).empty());
  CHECK(factor_trial_division(BigNat(2047), {.trial_division_bound = 100}).size() == 2);
  CHECK_THROWS_AS(factor_trial_division(BigNat(2047), {.trial_division_bound = 5}), ResourceError);
  // cofactor below bound^2 is prime
  CHECK(factor_trial_division(BigNat(31), {.trial_division_bound = 5}).size() == 1);
}

TEST_CASE("multiplicative_order") {
  const PrimeField f5(5);
  const Poly m2 = P(f5, {3, 0, 1}), m3 = P(f5, {3, 4, 0, 1});
  CHECK(multiplicative_order(f5, QuotientElement::make(f5, Poly::constant(1), m2), 24) == 1);
  CHECK(multiplicative_order(f5, QuotientElement::make(f5, kT, m2), 24) == 8);
  // Frozen from brute-force enumeration of the powers of T in F_125^*.
  CHECK(oracle::order({0, 1}, {3, 4, 0, 1}, 5) == 124);
  CHECK(multiplicative_order(f5, QuotientElement::make(f5, kT, m3), 124) == 124);

  CHECK_THROWS_AS(multiplicative_order(f5, QuotientElement::make(f5, Poly{}, m2), 24), DomainError);
  // T is a zero divisor modulo T(T+1)
  CHECK_THROWS_AS(multiplicative_order(f5, QuotientElement::make(f5, kT, P(f5, {0, 1, 1})), 24),
                  DomainError);
  // 7 is not a multiple of the order 8
  CHECK_THROWS_AS(multiplicative_order(f5, QuotientElement::make(f5, kT, m2), 7), DomainError);

  const PrimeField f2(2);
  const auto t11 = QuotientElement::make(f2, kT, P(f2, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(multiplicative_order(f2, t11, 2047) == 2047);
  CHECK_THROWS_AS(multiplicative_order(f2, t11, 2047, {.trial_division_bound = 5}), ResourceError);
}

TEST_CASE("projective_order") {
  const PrimeField f5(5);
  CHECK(oracle::projective_order_of_t({3, 0, 1}, 5) == 2);
  CHECK(projective_order(f5, P(f5, {3, 0, 1})) == 2);
  CHECK(projective_order(f5, P(f5, {3, 4, 0, 1})) == 31);
  CHECK(projective_order(f5, P(f5, {-1, 1})) == 1);
  CHECK_THROWS_AS(projective_order(f5, kT), DomainError);
  CHECK_THROWS_AS(projective_order(f5, P(f5, {2, -3, 1})), DomainError);  // (T-1)(T-2)
  CHECK_THROWS_AS(projective_order(f5, Poly::constant(2)), ParameterError);
  // powers of an irreducible are accepted, including e divisible by p
  const Poly g = P(f5, {2, 0, 1});
  CHECK(projective_order(f5, poly_pow(f5, g, 5)) ==
        oracle::projective_order_of_t(oracle::poly_pow({2, 0, 1}, 5, 5), 5));
}

TEST_CASE("is_projectively_primitive") {
  const PrimeField f5(5);
  CHECK(is_projectively_primitive(f5, P(f5, {3, 4, 0, 1})));
  CHECK_FALSE(is_projectively_primitive(f5, P(f5, {3, 0, 1})));
  CHECK_FALSE(is_projectively_primitive(f5, kT));
  CHECK_THROWS_AS(is_projectively_primitive(f5, Poly::constant(1)), ParameterError);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const PrimeField f(p);
    for (std::int64_t c = 1; c < p; ++c) {
      std::vector<std::int64_t> coeffs(p + 1, 0);
      coeffs[0] = -c;
      coeffs[1] = -1;
      coeffs[p] = 1;
      CHECK(is_projectively_primitive(f, P(f, coeffs)));
    }
  }
}

TEST_CASE("projective primitivity agrees with brute force for all monic f, deg <= 3") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PrimeField f(p);
    for (int d = 1; d <= 3; ++d) {
      const auto target = static_cast<std::uint64_t>(projective_space_size(p, d));
      for (const auto& c : oracle::monic_polys(d, p)) {
        const bool brute = oracle::is_irreducible(c, p) && c[0] != 0 &&
                           oracle::projective_order_of_t(c, p) == target;
        const bool fast = is_projectively_primitive(f, P(f, c));
        REQUIRE(fast == brute);
        if (fast) REQUIRE(is_irreducible(f, P(f, c)));
      }
    }
  }
}

TEST_CASE("orders in quotients: [[T]] has the order of [T]^(p-1), dividing A(p, e, deg g)") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PrimeField f(p);
    for (int d = 1; d <= 3; ++d) {
      for (const auto& g : oracle::monic_polys(d, p)) {
        if (g[0] == 0 || !oracle::is_irreducible(g, p)) continue;
        for (unsigned e = 1; e <= 3; ++e) {
          const auto ge = oracle::poly_pow(g, e, p);
          const std::uint64_t brute = oracle::projective_order_of_t(ge, p);
          const auto t_q1 = oracle::mulmod(oracle::reduce({0, 1}, ge, p), {1}, ge, p);
          std::vector<std::int64_t> tpow{1};
          for (std::uint32_t k = 0; k < p - 1; ++k) tpow = oracle::mulmod(tpow, t_q1, ge, p);
          REQUIRE(brute == oracle::order(tpow, ge, p));
          REQUIRE(projective_order(f, P(f, ge)) == brute);
          REQUIRE(a_bound(p, e, d) % brute == 0);
        }
      }
    }
  }
}

TEST_CASE("a_bound") {
  for (std::uint64_t q : {2u, 3u, 7u})
    for (std::uint64_t fdeg = 1; fdeg <= 4; ++fdeg) CHECK(a_bound(q, 1, fdeg) == projective_space_size(q, fdeg));
  CHECK(a_bound(2, 3, 1) == 4);
  CHECK(a_bound(5, 2, 2) == 30);
  CHECK(a_bound(3, 3, 1) == 3);
  CHECK(a_bound(3, 4, 1) == 9);
  CHECK_THROWS_AS(a_bound(1, 1, 1), ParameterError);
}

TEST_CASE("squarefree decomposition reconstructs its input") {
  const PrimeField f3(3);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> coef(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> a(1 + trial % 4 + 1), b(2);
    for (auto& v : a) v = coef(rng);
    for (auto& v : b) v = coef(rng);
    a.back() = 1;
    b.back() = 1;
    // mix in repeated factors, including a cube (e divisible by p = 3)
    const Poly f = poly_mul(f3, poly_pow(f3, P(f3, a), 2), poly_pow(f3, P(f3, b), 3));
    Poly rebuilt = Poly::constant(1);
    for (const auto& [g, e] : squarefree_decomposition(f3, f)) {
      REQUIRE(g.is_monic());
      REQUIRE(poly_gcd(f3, g, derivative(f3, g)).is_one());
      rebuilt = poly_mul(f3, rebuilt, poly_pow(f3, g, e));
    }
    REQUIRE(rebuilt == make_monic(f3, f));
  }
}
