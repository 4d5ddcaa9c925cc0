#include "fracjump/fjump.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fracjump/errors.hpp"
#include "fracjump/text_format.hpp"

namespace fracjump {

namespace {

// p^k, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t p, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    r *= p;
  }
  return r;
}

std::uint64_t within_budget(std::uint64_t count, const EnumerationBudget& budget, const char* what) {
  if (count > budget.max_points) {
    throw ResourceError(std::string(what) + " has " +
                        (count == std::numeric_limits<std::uint64_t>::max() ? std::string("too many")
                                                                            : std::to_string(count)) +
                        " points, enumeration budget is " + std::to_string(budget.max_points));
  }
  return count;
}

AffineForm dehomogenize_row(std::span<const Residue> row) {
  return {Vector(row.begin(), row.end() - 1), row.back()};
}

void require_affine_length(std::size_t n, std::span<const Residue> x) {
  if (x.size() != n) {
    throw ParameterError("affine point has " + std::to_string(x.size()) + " coordinates, expected " +
                         std::to_string(n));
  }
}

}  // namespace

std::uint64_t point_index(std::uint32_t p, std::span<const Residue> x) {
  std::uint64_t idx = 0;
  for (std::size_t i = x.size(); i-- > 0;) idx = idx * p + x[i];
  return idx;
}

std::uint64_t affine_point_count(std::uint32_t p, std::size_t n, const EnumerationBudget& budget) {
  return within_budget(saturating_pow(p, n), budget, "affine space");
}

std::uint64_t projective_point_count(std::uint32_t p, std::size_t n, const EnumerationBudget& budget) {
  const std::uint64_t top = saturating_pow(p, n + 1);
  const std::uint64_t count =
      top == std::numeric_limits<std::uint64_t>::max() ? top : (top - 1) / (p - 1);
  return within_budget(count, budget, "projective space");
}

bool is_degenerate_pair(std::uint32_t p, std::size_t n) { return n == 1 || (p == 2 && n == 2); }

ProjectivePoint ProjectivePoint::normalize(const PrimeField& field, Vector coords) {
  auto last = std::find_if(coords.rbegin(), coords.rend(), [](Residue v) { return v != 0; });
  if (last == coords.rend()) throw ParameterError("the zero vector is not a projective point");
  if (*last != 1) {
    const Residue s = field.inv(*last);
    for (auto& v : coords) v = field.mul(v, s);
  }
  return ProjectivePoint(std::move(coords));
}

ProjectivePoint ProjectivePoint::from_affine(std::span<const Residue> x) {
  Vector coords(x.begin(), x.end());
  coords.push_back(1);
  return ProjectivePoint(std::move(coords));
}

ProjectiveAutomorphism::ProjectiveAutomorphism(PrimeField field, Matrix matrix)
    : field_(std::move(field)), matrix_(std::move(matrix)) {
  if (matrix_.dim() < 2) throw ParameterError("a projective automorphism needs dimension >= 2");
  for (auto v : matrix_.entries()) {
    if (v >= field_.modulus()) throw ParameterError("matrix entry not reduced mod p");
  }
  if (determinant(field_, matrix_) == 0) throw ParameterError("matrix is singular");
}

ProjectivePoint ProjectiveAutomorphism::apply(const ProjectivePoint& point) const {
  return ProjectivePoint::normalize(field_, mat_vec(field_, matrix_, point.coords()));
}

Residue AffineForm::eval(const PrimeField& field, std::span<const Residue> x) const {
  Residue acc = constant;
  for (std::size_t k = 0; k < linear.size(); ++k) acc = field.add(acc, field.mul(linear[k], x[k]));
  return acc;
}

FractionalJump FractionalJump::build(const ProjectiveAutomorphism& psi, BuildMode mode,
                                     const FactorBudget& factor_budget,
                                     const EnumerationBudget& enum_budget) {
  const PrimeField& field = psi.field();
  if (mode == BuildMode::checked) {
    bool transitive;
    try {
      transitive = is_projectively_primitive(field, char_poly(field, psi.matrix()), factor_budget);
    } catch (const ResourceError&) {
      transitive = is_transitive_projective(psi, enum_budget);
    }
    if (!transitive) {
      throw PreconditionError("automorphism does not act transitively on P^" +
                              std::to_string(psi.n()) + " (characteristic polynomial is not "
                              "projectively primitive)");
    }
  }

  const std::size_t n = psi.n();
  std::vector<JumpPiece> pieces;
  pieces.reserve(n + 1);
  Matrix power = psi.matrix();
  for (std::size_t i = 1; i <= n + 1; ++i) {
    JumpPiece piece;
    piece.denominator = dehomogenize_row(power.row(n));
    for (std::size_t j = 0; j < n; ++j) piece.numerators.push_back(dehomogenize_row(power.row(j)));
    pieces.push_back(std::move(piece));
    if (i <= n) power = mat_mul(field, power, psi.matrix());
  }
  return FractionalJump(field, n, std::move(pieces));
}

std::size_t FractionalJump::piece_index(std::span<const Residue> x) const {
  require_affine_length(n_, x);
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].denominator.eval(field_, x) != 0) return i + 1;
  }
  throw NotTransitiveCompatible("every piece denominator vanishes at (" +
                                format_vector(Vector(x.begin(), x.end())) + ")");
}

Vector FractionalJump::eval(std::span<const Residue> x) const {
  require_affine_length(n_, x);
  for (const auto& piece : pieces_) {
    const Residue b = piece.denominator.eval(field_, x);
    if (b == 0) continue;
    const Residue t = field_.inv(b);
    Vector out(n_);
    for (std::size_t j = 0; j < n_; ++j) out[j] = field_.mul(piece.numerators[j].eval(field_, x), t);
    return out;
  }
  throw NotTransitiveCompatible("every piece denominator vanishes at the input point");
}

DirectJump eval_direct(const ProjectiveAutomorphism& psi, std::span<const Residue> x) {
  const std::size_t n = psi.n();
  require_affine_length(n, x);
  const PrimeField& field = psi.field();
  const std::uint64_t cap = projective_point_count(
      field.modulus(), n, EnumerationBudget{std::numeric_limits<std::uint64_t>::max()});

  Vector v(x.begin(), x.end());
  v.push_back(1);
  for (std::uint64_t k = 1; k <= cap; ++k) {
    v = mat_vec(field, psi.matrix(), v);
    if (v[n] == 0) continue;
    const Residue t = field.inv(v[n]);
    Vector out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = field.mul(v[j], t);
    return {std::move(out), k};
  }
  throw TrappedAtInfinity("orbit never returned to the affine chart");
}

bool is_transitive_projective(const ProjectiveAutomorphism& psi, const EnumerationBudget& budget) {
  const std::uint64_t size = projective_point_count(psi.field().modulus(), psi.n(), budget);
  const ProjectivePoint start = ProjectivePoint::from_affine(Vector(psi.n(), 0));
  ProjectivePoint cur = psi.apply(start);
  std::uint64_t orbit = 1;
  while (!(cur == start)) {
    if (++orbit > size) return false;
    cur = psi.apply(cur);
  }
  return orbit == size;
}

namespace {

// The orbit of the origin is a full cycle iff its first return to the
// origin happens after exactly p^n steps; earlier points are then distinct.
template <typename Step>
bool origin_orbit_is_full(std::uint32_t p, std::size_t n, const EnumerationBudget& budget,
                          Step&& step) {
  const std::uint64_t size = affine_point_count(p, n, budget);
  const Vector origin(n, 0);
  Vector cur = step(origin);
  std::uint64_t orbit = 1;
  while (cur != origin) {
    if (++orbit > size) return false;
    cur = step(cur);
  }
  return orbit == size;
}

}  // namespace

bool is_transitive_affine(const FractionalJump& jump, const EnumerationBudget& budget) {
  return origin_orbit_is_full(jump.field().modulus(), jump.n(), budget,
                              [&](const Vector& x) { return jump.eval(x); });
}

bool is_transitive_affine(const ProjectiveAutomorphism& psi, const EnumerationBudget& budget) {
  return origin_orbit_is_full(psi.field().modulus(), psi.n(), budget,
                              [&](const Vector& x) { return eval_direct(psi, x).point; });
}

Classification classify(const ProjectiveAutomorphism& psi, const EnumerationBudget& budget) {
  return {is_transitive_projective(psi, budget), is_transitive_affine(psi, budget),
          is_degenerate_pair(psi.field().modulus(), psi.n())};
}

ProjectiveAutomorphism degenerate_example(int kind, std::uint32_t p) {
  PrimeField field(p);
  switch (kind) {
    case 1:
      return {field, Matrix::from_rows(field, {{1, 1}, {0, 1}})};
    case 2:
      if (p != 2) throw ParameterError("the second degenerate example exists only over F_2");
      return {field, Matrix::from_rows(field, {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}})};
    default:
      throw ParameterError("degenerate example kind must be 1 or 2");
  }
}

std::vector<std::uint64_t> region_census(const FractionalJump& jump, const EnumerationBudget& budget) {
  affine_point_count(jump.field().modulus(), jump.n(), budget);
  std::vector<std::uint64_t> census(jump.n() + 1, 0);
  for_each_point(jump.field().modulus(), jump.n(),
                 [&](const Vector& x) { ++census[jump.piece_index(x) - 1]; });
  return census;
}

std::vector<OpCount> piece_cost_model(const FractionalJump& jump) {
  std::vector<OpCount> out;
  for (const auto& piece : jump.pieces()) {
    OpCount cost;
    auto add_form = [&](const AffineForm& form) {
      std::uint64_t terms = form.constant != 0 ? 1 : 0;
      for (auto a : form.linear) {
        if (a != 0) ++terms;
        if (a > 1) ++cost.mults;
      }
      if (terms > 1) cost.sums += terms - 1;
    };
    add_form(piece.denominator);
    for (const auto& a : piece.numerators) add_form(a);
    cost.invs = 1;
    cost.mults += jump.n();
    out.push_back(cost);
  }
  return out;
}

}  // namespace fracjump
