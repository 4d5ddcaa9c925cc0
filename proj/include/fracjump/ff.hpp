#pragma once

// Prime field arithmetic F_p.
//
// Two layers are provided. The raw layer works on bare residues (`Residue`)
// and is what polynomial, matrix and jump code use in their inner loops;
// inputs are assumed already reduced. The checked layer works on
// `FieldElement`, which carries its modulus so that mixing elements of two
// different fields is reported instead of silently producing garbage.
//
// A field may be backed by precomputed add/mul/neg/inv tables (p <= 256),
// in which case every operation is a single lookup.

#include <cstdint>
#include <memory>
#include <vector>

namespace fracjump {

using Residue = std::uint32_t;

enum class Backend { computed, tables };

struct FieldElement {
  Residue value = 0;
  std::uint32_t modulus = 0;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  static constexpr std::uint32_t kMaxModulus = 0x7fffffffu;
  static constexpr std::uint32_t kMaxTableModulus = 256;

  // Throws ParameterError if p is not a prime in [2, 2^31), or if a table
  // backend is requested for p > 256.
  explicit PrimeField(std::uint32_t p, Backend backend = Backend::computed);

  std::uint32_t modulus() const { return p_; }
  Backend backend() const { return tables_ ? Backend::tables : Backend::computed; }

  Residue reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }

  Residue add(Residue a, Residue b) const {
    if (tables_) return tables_->add[a * p_ + b];
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  Residue sub(Residue a, Residue b) const { return add(a, neg(b)); }

  Residue neg(Residue a) const {
    if (tables_) return tables_->neg[a];
    return a == 0 ? 0 : p_ - a;
  }

  Residue mul(Residue a, Residue b) const {
    if (tables_) return tables_->mul[a * p_ + b];
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }

  // Throws DivisionByZero for a == 0.
  Residue inv(Residue a) const;

  Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }

  Residue pow(Residue a, std::uint64_t e) const;

  // Inverse by the extended Euclidean algorithm, independent of the backend.
  Residue inv_euclid(Residue a) const;

  // Checked layer.
  FieldElement element(std::int64_t v) const { return {reduce(v), p_}; }
  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement inv(FieldElement a) const;

 private:
  struct Tables {
    std::vector<std::uint8_t> add;
    std::vector<std::uint8_t> mul;
    std::vector<std::uint8_t> neg;
    std::vector<std::uint8_t> inv;
  };

  void check(FieldElement a) const;

  std::uint32_t p_;
  std::shared_ptr<const Tables> tables_;
};

}  // namespace fracjump
