#pragma once

// Fractional jumps of projective automorphisms of P^n(F_p).
//
// The affine chart U = {X_n != 0} is identified with A^n through
// x -> [x_1 : ... : x_n : 1]. The fractional jump of Psi sends x to the
// first iterate Psi^k(x), k >= 1, that lands back in U. When Psi acts
// transitively on P^n the jump index k never exceeds n+1 and the map is
// piecewise linear-fractional: piece i is read off the rows of M^i.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fracjump/ff.hpp"
#include "fracjump/linalg.hpp"
#include "fracjump/poly.hpp"

namespace fracjump {

struct EnumerationBudget {
  // Largest point set (|P^n|, p^n, number of matrices) walked exhaustively.
  std::uint64_t max_points = 10'000'000;
};

// Calls fn(x) for every x in F_p^n, x_1 varying fastest.
template <typename Fn>
void for_each_point(std::uint32_t p, std::size_t n, Fn&& fn) {
  Vector x(n, 0);
  for (;;) {
    fn(static_cast<const Vector&>(x));
    std::size_t i = 0;
    while (i < n && ++x[i] == p) x[i++] = 0;
    if (i == n) return;
  }
}

// Mixed-radix index of x in F_p^n, matching the order of for_each_point.
std::uint64_t point_index(std::uint32_t p, std::span<const Residue> x);

// p^n, or ResourceError if it exceeds the budget.
std::uint64_t affine_point_count(std::uint32_t p, std::size_t n, const EnumerationBudget& budget);
// |P^n| = (p^(n+1) - 1)/(p - 1), or ResourceError if it exceeds the budget.
std::uint64_t projective_point_count(std::uint32_t p, std::size_t n, const EnumerationBudget& budget);

// The excluded parameter pairs of the transitivity equivalence: n = 1 over a
// prime field, and p = 2 with n = 2.
bool is_degenerate_pair(std::uint32_t p, std::size_t n);

class ProjectivePoint {
 public:
  // Scales so that the last nonzero coordinate is 1. Throws ParameterError
  // for the zero vector.
  static ProjectivePoint normalize(const PrimeField& field, Vector coords);
  static ProjectivePoint from_affine(std::span<const Residue> x);

  const Vector& coords() const { return coords_; }
  bool in_affine_chart() const { return coords_.back() == 1; }
  // Drops the last coordinate; only meaningful inside the affine chart.
  Vector to_affine() const { return {coords_.begin(), coords_.end() - 1}; }

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  explicit ProjectivePoint(Vector coords) : coords_(std::move(coords)) {}
  Vector coords_;
};

// The class [M] of an invertible (n+1)x(n+1) matrix, n >= 1.
class ProjectiveAutomorphism {
 public:
  // Throws ParameterError for a singular matrix or a 1x1 matrix.
  ProjectiveAutomorphism(PrimeField field, Matrix matrix);

  const PrimeField& field() const { return field_; }
  const Matrix& matrix() const { return matrix_; }
  std::size_t n() const { return matrix_.dim() - 1; }

  ProjectivePoint apply(const ProjectivePoint& point) const;

 private:
  PrimeField field_;
  Matrix matrix_;
};

struct AffineForm {
  Vector linear;
  Residue constant = 0;

  Residue eval(const PrimeField& field, std::span<const Residue> x) const;

  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

struct JumpPiece {
  AffineForm denominator;
  std::vector<AffineForm> numerators;

  friend bool operator==(const JumpPiece&, const JumpPiece&) = default;
};

struct OpCount {
  std::uint64_t sums = 0;
  std::uint64_t mults = 0;
  std::uint64_t invs = 0;

  std::uint64_t total() const { return sums + mults + invs; }
  friend bool operator==(const OpCount&, const OpCount&) = default;
};

enum class BuildMode { checked, unchecked };

class FractionalJump {
 public:
  // Piece i (1-based) is read from M^i: the denominator from the last row,
  // numerator j from row j; the last column gives the constant terms.
  // In checked mode the automorphism must be transitive, decided through
  // projective primitivity of the characteristic polynomial, falling back
  // to orbit enumeration when factoring is out of budget. Throws
  // PreconditionError otherwise.
  static FractionalJump build(const ProjectiveAutomorphism& psi,
                              BuildMode mode = BuildMode::checked,
                              const FactorBudget& factor_budget = {},
                              const EnumerationBudget& enum_budget = {});

  const PrimeField& field() const { return field_; }
  std::size_t n() const { return n_; }
  const std::vector<JumpPiece>& pieces() const { return pieces_; }

  // Smallest i with b^(i)(x) != 0, 1-based. Throws NotTransitiveCompatible.
  std::size_t piece_index(std::span<const Residue> x) const;

  // Evaluates the selected piece with a single field inversion.
  Vector eval(std::span<const Residue> x) const;

 private:
  FractionalJump(PrimeField field, std::size_t n, std::vector<JumpPiece> pieces)
      : field_(std::move(field)), n_(n), pieces_(std::move(pieces)) {}

  PrimeField field_;
  std::size_t n_;
  std::vector<JumpPiece> pieces_;
};

struct DirectJump {
  Vector point;
  std::uint64_t jump_index = 0;
};

// Iterates the matrix on (x, 1) until the last coordinate is nonzero.
// Throws TrappedAtInfinity after |P^n| applications.
DirectJump eval_direct(const ProjectiveAutomorphism& psi, std::span<const Residue> x);

bool is_transitive_projective(const ProjectiveAutomorphism& psi,
                              const EnumerationBudget& budget = {});

// Full orbit of the origin under the piecewise map, respectively under
// direct iteration (which is also valid for non-transitive Psi).
bool is_transitive_affine(const FractionalJump& jump, const EnumerationBudget& budget = {});
bool is_transitive_affine(const ProjectiveAutomorphism& psi, const EnumerationBudget& budget = {});

struct Classification {
  bool proj_transitive = false;
  bool affine_transitive = false;
  bool degenerate = false;

  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(const ProjectiveAutomorphism& psi, const EnumerationBudget& budget = {});

// kind 1: [[1,1],[0,1]] over any F_p. kind 2: [[1,1,1],[0,1,1],[0,0,1]] over F_2.
ProjectiveAutomorphism degenerate_example(int kind, std::uint32_t p);

// |U_i| for i = 1..n+1, by exhaustive enumeration of A^n.
std::vector<std::uint64_t> region_census(const FractionalJump& jump,
                                         const EnumerationBudget& budget = {});

// Per-piece operation count of the direct formula evaluation: every nonzero
// term past the first of a form costs a sum, every linear coefficient outside
// {0, 1} a multiplication, plus one inversion and n scalings by it.
std::vector<OpCount> piece_cost_model(const FractionalJump& jump);

struct SweepException {
  Matrix matrix;
  Classification result;
};

struct SweepReport {
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::uint64_t classes = 0;
  std::uint64_t proj_transitive = 0;
  std::uint64_t affine_transitive = 0;
  // Classes where the two transitivity flags disagree.
  std::vector<SweepException> exceptions;
};

// Classifies every element of PGL_{n+1}(F_p), one representative per class
// (first nonzero entry scaled to 1). ResourceError if p^((n+1)^2) exceeds
// the budget.
SweepReport classification_sweep(std::uint32_t p, std::size_t n,
                                 const EnumerationBudget& budget = {});

}  // namespace fracjump
