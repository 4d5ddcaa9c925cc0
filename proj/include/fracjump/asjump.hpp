#pragma once

// Closed-form fractional jump of the companion matrix of T^p - T - c over
// A^{p-1}(F_p), evaluated straight from per-piece affine forms without any
// matrix arithmetic, with operation counting.
//
// Coordinates are x_1..x_{p-1} (stored 0-based). Pieces, 1-based:
//
//   b^(i) = x_{p-i}          1 <= i <= p-2
//   b^(p-1) = x_1 + 1
//   b^(p) = x_{p-1} + c
//
// so U_p is the single point (-1, 0, ..., 0). Over F_2 the last piece
// degenerates to b^(2) = x_1 because 1 + c = 0 there.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fracjump/ff.hpp"
#include "fracjump/fjump.hpp"
#include "fracjump/linalg.hpp"
#include "fracjump/poly.hpp"

namespace fracjump {

using Rational = boost::multiprecision::cpp_rational;

struct CostCounters {
  std::uint64_t sums = 0;
  std::uint64_t mults = 0;
  std::uint64_t invs = 0;
  std::size_t piece_index = 0;

  std::uint64_t total() const { return sums + mults + invs; }
};

class ArtinSchreierJump {
 public:
  // Throws ParameterError unless p is prime and c is nonzero mod p. Uses the
  // table backend whenever p is small enough for it.
  ArtinSchreierJump(std::uint32_t p, std::int64_t c);

  std::uint32_t p() const { return field_.modulus(); }
  Residue c() const { return c_; }
  std::size_t n() const { return field_.modulus() - 1; }
  const PrimeField& field() const { return field_; }

  // T^p - T - c
  Poly polynomial() const;
  Matrix companion_matrix() const;
  ProjectiveAutomorphism automorphism() const;

  std::size_t piece_index(std::span<const Residue> x) const;
  Vector step(std::span<const Residue> x) const;
  std::pair<Vector, CostCounters> step_counted(std::span<const Residue> x) const;

  // The affine forms of piece i as written in closed form; used to check
  // them against the rows of M^i.
  JumpPiece piece_forms(std::size_t i) const;

 private:
  template <typename Ops>
  Vector evaluate(Ops& ops, std::span<const Residue> x, std::size_t piece) const;

  PrimeField field_;
  Residue c_;
};

// c_i = p + 2i - 1 for i <= p-1 and 3p for i = p.
std::uint64_t piece_cost_formula(std::uint32_t p, std::size_t i);

// Exact mean of sums + mults + invs over all p^{p-1} points.
Rational expected_cost_empirical(const ArtinSchreierJump& jump,
                                 const EnumerationBudget& budget = {.max_points = 1'000'000});

// 3p^{2-p} - (3p^3 - (p^2+1)p^p - 4p^2 + 3p) / (p^p (p-1)); tends to p.
Rational expected_cost_formula(std::uint32_t p);

// sum_i P(U_i) c_i with P(U_i) = p^{-i}(p-1), i < p, and P(U_p) = p^{1-p}.
Rational expected_cost_series(std::uint32_t p);

std::vector<std::uint64_t> region_census(const ArtinSchreierJump& jump,
                                         const EnumerationBudget& budget = {.max_points = 1'000'000});

// p^{p-1-i}(p-1) for i <= p-1, and 1 for i = p.
std::vector<std::uint64_t> region_census_formula(std::uint32_t p);

// Iterates step from the origin; true iff every one of the p^{p-1} points is
// visited exactly once before the orbit closes.
bool has_full_orbit(const ArtinSchreierJump& jump,
                    const EnumerationBudget& budget = {.max_points = 10'000'000});

}  // namespace fracjump
