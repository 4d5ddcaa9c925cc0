#pragma once

// Dense univariate polynomials over F_p, quotient rings F_p[T]/(m), and the
// order computations that decide projective primitivity.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <utility>
#include <vector>

#include "fracjump/ff.hpp"

namespace fracjump {

using BigNat = boost::multiprecision::cpp_int;

// Coefficients in ascending degree order with no trailing zeros; the zero
// polynomial has no coefficients. Values are assumed reduced mod p.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Residue> coeffs);

  static Poly constant(Residue c) { return Poly({c}); }
  static Poly monomial(Residue c, std::size_t degree);
  // Reduces arbitrary integers into F_p.
  static Poly from_ints(const PrimeField& field, const std::vector<std::int64_t>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Residue leading() const { return c_.empty() ? 0 : c_.back(); }
  Residue operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<Residue>& coeffs() const { return c_; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<Residue> c_;
};

Poly poly_add(const PrimeField& field, const Poly& a, const Poly& b);
Poly poly_sub(const PrimeField& field, const Poly& a, const Poly& b);
Poly poly_scale(const PrimeField& field, const Poly& a, Residue c);
Poly poly_mul(const PrimeField& field, const Poly& a, const Poly& b);
Poly poly_pow(const PrimeField& field, const Poly& a, unsigned e);
// Throws DivisionByZero for a zero divisor.
std::pair<Poly, Poly> poly_divmod(const PrimeField& field, const Poly& a, const Poly& b);
Poly poly_rem(const PrimeField& field, const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const PrimeField& field, const Poly& a, const Poly& b);
Poly poly_lcm(const PrimeField& field, const Poly& a, const Poly& b);
Poly make_monic(const PrimeField& field, const Poly& a);
Poly derivative(const PrimeField& field, const Poly& a);
Residue evaluate(const PrimeField& field, const Poly& a, Residue x);

// a*b mod m. Throws ParameterError unless m is monic of degree >= 1.
Poly poly_mulmod(const PrimeField& field, const Poly& a, const Poly& b, const Poly& m);
Poly poly_powmod(const PrimeField& field, const Poly& a, const BigNat& e, const Poly& m);

// An element of F_p[T]/(modulus). The modulus is monic of degree >= 1 and
// deg(residue) < deg(modulus).
struct QuotientElement {
  Poly residue;
  Poly modulus;

  // Reduces `value` modulo `modulus`; throws ParameterError if the modulus
  // is not monic of positive degree.
  static QuotientElement make(const PrimeField& field, const Poly& value, const Poly& modulus);

  friend bool operator==(const QuotientElement&, const QuotientElement&) = default;
};

QuotientElement powmod(const PrimeField& field, const QuotientElement& a, const BigNat& e);
bool is_unit(const PrimeField& field, const QuotientElement& a);

// Rabin's test. Throws ParameterError for constant input.
bool is_irreducible(const PrimeField& field, const Poly& f);

// Squarefree decomposition: f = lc * prod g_i^{e_i}, g_i monic squarefree and
// pairwise coprime. Empty for constant f.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const PrimeField& field,
                                                                const Poly& f);

struct FactorBudget {
  // Largest trial divisor tried when factoring a group order.
  std::uint64_t trial_division_bound = 1'000'000;
};

// Prime factorization by trial division. Throws ResourceError when an
// unfactored cofactor remains that could still be composite.
std::vector<std::pair<BigNat, unsigned>> factor_trial_division(BigNat n,
                                                              const FactorBudget& budget = {});

// Exact multiplicative order of a unit, given a multiple of it.
// Throws DomainError for a non-unit or if a^group_order != 1.
BigNat multiplicative_order(const PrimeField& field, const QuotientElement& a,
                            const BigNat& group_order, const FactorBudget& budget = {});

// Order of the class of T in (F_p[T]/(f))^* / F_p^*, computed as the order
// of T^(p-1) in (F_p[T]/(f))^*. f must be a power g^e of an irreducible g
// with g(0) != 0; otherwise DomainError.
BigNat projective_order(const PrimeField& field, const Poly& f, const FactorBudget& budget = {});

// Irreducible and the class of a root generates F_{p^d}^* / F_p^*.
bool is_projectively_primitive(const PrimeField& field, const Poly& f,
                               const FactorBudget& budget = {});

// q^ceil(log_q e) * (q^f - 1)/(q - 1).
BigNat a_bound(std::uint64_t q, std::uint64_t e, std::uint64_t f);

BigNat ipow(std::uint64_t base, std::uint64_t exp);

// (p^d - 1)/(p - 1), the size of P^{d-1}(F_p).
BigNat projective_space_size(std::uint64_t p, std::uint64_t d);

}  // namespace fracjump
