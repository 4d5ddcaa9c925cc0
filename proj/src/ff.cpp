#include "fracjump/ff.hpp"

#include <string>

#include "fracjump/errors.hpp"

namespace fracjump {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p, Backend backend) : p_(p) {
  if (p < 2 || p > kMaxModulus || !is_prime(p)) {
    throw ParameterError("modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  if (backend == Backend::computed) return;
  if (p > kMaxTableModulus) {
    throw ParameterError("table backend requires p <= 256, got " + std::to_string(p));
  }

  auto t = std::make_shared<Tables>();
  t->add.resize(std::size_t{p} * p);
  t->mul.resize(std::size_t{p} * p);
  t->neg.resize(p);
  t->inv.resize(p);
  for (Residue a = 0; a < p; ++a) {
    t->neg[a] = static_cast<std::uint8_t>(a == 0 ? 0 : p - a);
    t->inv[a] = static_cast<std::uint8_t>(a == 0 ? 0 : inv_euclid(a));
    for (Residue b = 0; b < p; ++b) {
      t->add[a * p + b] = static_cast<std::uint8_t>((a + b) % p);
      t->mul[a * p + b] = static_cast<std::uint8_t>((a * b) % p);
    }
  }
  tables_ = std::move(t);
}

Residue PrimeField::inv_euclid(Residue a) const {
  if (a % p_ == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p_));
  std::int64_t r0 = p_, r1 = a % p_;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  // r0 == 1 since p is prime.
  return reduce(s0);
}

Residue PrimeField::inv(Residue a) const {
  if (a == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p_));
  if (tables_) return tables_->inv[a];
  return inv_euclid(a);
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const {
  Residue result = 1 % p_;
  Residue base = a;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

void PrimeField::check(FieldElement a) const {
  if (a.modulus != p_) {
    throw ParameterError("element of F_" + std::to_string(a.modulus) + " used in F_" +
                         std::to_string(p_));
  }
  if (a.value >= p_) throw ParameterError("unreduced field element");
}

FieldElement PrimeField::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {add(a.value, b.value), p_};
}

FieldElement PrimeField::mul(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {mul(a.value, b.value), p_};
}

FieldElement PrimeField::neg(FieldElement a) const {
  check(a);
  return {neg(a.value), p_};
}

FieldElement PrimeField::inv(FieldElement a) const {
  check(a);
  return {inv(a.value), p_};
}

}  // namespace fracjump
