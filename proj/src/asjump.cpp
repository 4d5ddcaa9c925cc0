#include "fracjump/asjump.hpp"

#include <string>

#include "fracjump/errors.hpp"

namespace fracjump {

namespace {

struct PlainOps {
  const PrimeField& field;
  Residue add(Residue a, Residue b) const { return field.add(a, b); }
  Residue mul(Residue a, Residue b) const { return field.mul(a, b); }
  Residue inv(Residue a) const { return field.inv(a); }
};

struct CountingOps {
  const PrimeField& field;
  CostCounters& counters;
  Residue add(Residue a, Residue b) {
    ++counters.sums;
    return field.add(a, b);
  }
  Residue mul(Residue a, Residue b) {
    ++counters.mults;
    return field.mul(a, b);
  }
  Residue inv(Residue a) {
    ++counters.invs;
    return field.inv(a);
  }
};

PrimeField make_field(std::uint32_t p) {
  return PrimeField(p, p <= PrimeField::kMaxTableModulus && is_prime(p) ? Backend::tables
                                                                        : Backend::computed);
}

}  // namespace

ArtinSchreierJump::ArtinSchreierJump(std::uint32_t p, std::int64_t c)
    : field_(make_field(p)), c_(field_.reduce(c)) {
  if (c_ == 0) throw ParameterError("Artin-Schreier parameter c must be nonzero mod p");
}

Poly ArtinSchreierJump::polynomial() const {
  std::vector<Residue> coeffs(p() + 1, 0);
  coeffs[0] = field_.neg(c_);
  coeffs[1] = field_.add(coeffs[1], field_.neg(1));
  coeffs[p()] = field_.add(coeffs[p()], 1);
  return Poly(std::move(coeffs));
}

Matrix ArtinSchreierJump::companion_matrix() const { return companion(field_, polynomial()); }

ProjectiveAutomorphism ArtinSchreierJump::automorphism() const {
  return {field_, companion_matrix()};
}

std::size_t ArtinSchreierJump::piece_index(std::span<const Residue> x) const {
  const std::size_t p = this->p();
  if (x.size() != p - 1) throw ParameterError("point must have p-1 coordinates");
  // b^(i) = x_{p-i} for i <= p-2
  for (std::size_t i = 1; i + 2 <= p; ++i) {
    if (x[p - i - 1] != 0) return i;
  }
  return x[0] != p - 1 ? p - 1 : p;
}

template <typename Ops>
Vector ArtinSchreierJump::evaluate(Ops& ops, std::span<const Residue> x, std::size_t i) const {
  const std::size_t p = this->p();
  const std::size_t n = p - 1;
  const Residue c = c_;
  auto X = [&](std::size_t k) { return x[k - 1]; };
  Vector a(n, 0);
  auto A = [&](std::size_t j) -> Residue& { return a[j - 1]; };
  Residue b;

  if (i == p) {
    A(1) = ops.add(ops.mul(c, X(1)), c);
    if (n >= 2) A(2) = ops.add(ops.add(X(1), ops.mul(c, X(2))), 1);
    for (std::size_t j = 3; j <= n; ++j) A(j) = ops.add(X(j - 1), ops.mul(c, X(j)));
    b = p == 2 ? X(1) : ops.add(X(n), c);
  } else if (i == 1) {
    A(1) = c;
    if (n >= 2) A(2) = ops.add(X(1), 1);
    for (std::size_t j = 3; j <= n; ++j) A(j) = X(j - 1);
    b = p >= 3 ? X(p - 1) : ops.add(X(1), 1);
  } else {
    A(1) = ops.mul(c, X(p - i + 1));
    for (std::size_t j = 2; j + 1 <= i; ++j) A(j) = ops.add(X(p - i + j - 1), ops.mul(c, X(p - i + j)));
    A(i) = ops.add(X(p - 1), c);
    if (i + 1 <= n) A(i + 1) = ops.add(X(1), 1);
    for (std::size_t j = i + 2; j <= n; ++j) A(j) = X(j - i);
    b = i + 2 <= p ? X(p - i) : ops.add(X(1), 1);
  }

  const Residue t = ops.inv(b);
  for (auto& v : a) v = ops.mul(v, t);
  return a;
}

Vector ArtinSchreierJump::step(std::span<const Residue> x) const {
  PlainOps ops{field_};
  return evaluate(ops, x, piece_index(x));
}

std::pair<Vector, CostCounters> ArtinSchreierJump::step_counted(std::span<const Residue> x) const {
  CostCounters counters;
  counters.piece_index = piece_index(x);
  CountingOps ops{field_, counters};
  Vector next = evaluate(ops, x, counters.piece_index);
  return {std::move(next), counters};
}

JumpPiece ArtinSchreierJump::piece_forms(std::size_t i) const {
  const std::size_t p = this->p();
  const std::size_t n = p - 1;
  if (i < 1 || i > p) throw ParameterError("piece index out of range");
  const Residue c = c_;

  auto form = [n](Residue constant) { return AffineForm{Vector(n, 0), constant}; };
  // x_k with coefficient v
  auto set = [](AffineForm& f, std::size_t k, Residue v) { f.linear[k - 1] = v; };

  JumpPiece piece;
  piece.numerators.assign(n, form(0));
  auto& A = piece.numerators;
  auto& b = piece.denominator;

  if (i == p) {
    A[0] = form(c);
    set(A[0], 1, c);
    if (n >= 2) {
      A[1] = form(1);
      set(A[1], 1, 1);
      set(A[1], 2, c);
    }
    for (std::size_t j = 3; j <= n; ++j) {
      set(A[j - 1], j - 1, 1);
      set(A[j - 1], j, c);
    }
    b = form(p == 2 ? field_.add(1, c) : c);
    set(b, n, 1);
  } else if (i == 1) {
    A[0] = form(c);
    if (n >= 2) {
      A[1] = form(1);
      set(A[1], 1, 1);
    }
    for (std::size_t j = 3; j <= n; ++j) set(A[j - 1], j - 1, 1);
    b = form(p >= 3 ? 0 : 1);
    set(b, p >= 3 ? p - 1 : 1, 1);
  } else {
    set(A[0], p - i + 1, c);
    for (std::size_t j = 2; j + 1 <= i; ++j) {
      set(A[j - 1], p - i + j - 1, 1);
      set(A[j - 1], p - i + j, c);
    }
    A[i - 1] = form(c);
    set(A[i - 1], p - 1, 1);
    if (i + 1 <= n) {
      A[i] = form(1);
      set(A[i], 1, 1);
    }
    for (std::size_t j = i + 2; j <= n; ++j) set(A[j - 1], j - i, 1);
    if (i + 2 <= p) {
      b = form(0);
      set(b, p - i, 1);
    } else {
      b = form(1);
      set(b, 1, 1);
    }
  }
  return piece;
}

std::uint64_t piece_cost_formula(std::uint32_t p, std::size_t i) {
  if (i < 1 || i > p) throw ParameterError("piece index out of range");
  return i == p ? 3ull * p : p + 2ull * i - 1;
}

Rational expected_cost_empirical(const ArtinSchreierJump& jump, const EnumerationBudget& budget) {
  const std::uint64_t size = affine_point_count(jump.p(), jump.n(), budget);
  BigNat total = 0;
  for_each_point(jump.p(), jump.n(), [&](const Vector& x) { total += jump.step_counted(x).second.total(); });
  return Rational(total, BigNat(size));
}

Rational expected_cost_formula(std::uint32_t p) {
  if (!is_prime(p)) throw ParameterError("p must be prime");
  const BigNat P = p;
  const BigNat pp = ipow(p, p);
  const Rational first(3 * P * P, pp);
  const Rational numerator(3 * P * P * P - (P * P + 1) * pp - 4 * P * P + 3 * P);
  return first - numerator / Rational(pp * (P - 1));
}

Rational expected_cost_series(std::uint32_t p) {
  if (!is_prime(p)) throw ParameterError("p must be prime");
  Rational sum = 0;
  for (std::size_t i = 1; i < p; ++i) {
    sum += Rational(BigNat(p - 1), ipow(p, i)) * piece_cost_formula(p, i);
  }
  sum += Rational(BigNat(1), ipow(p, p - 1)) * piece_cost_formula(p, p);
  return sum;
}

std::vector<std::uint64_t> region_census(const ArtinSchreierJump& jump, const EnumerationBudget& budget) {
  affine_point_count(jump.p(), jump.n(), budget);
  std::vector<std::uint64_t> census(jump.p(), 0);
  for_each_point(jump.p(), jump.n(), [&](const Vector& x) { ++census[jump.piece_index(x) - 1]; });
  return census;
}

std::vector<std::uint64_t> region_census_formula(std::uint32_t p) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 1; i < p; ++i) {
    out.push_back(static_cast<std::uint64_t>(ipow(p, p - 1 - i) * (p - 1)));
  }
  out.push_back(1);
  return out;
}

bool has_full_orbit(const ArtinSchreierJump& jump, const EnumerationBudget& budget) {
  const std::uint64_t size = affine_point_count(jump.p(), jump.n(), budget);
  std::vector<bool> seen(size, false);
  const Vector origin(jump.n(), 0);
  Vector cur = origin;
  for (std::uint64_t k = 0; k < size; ++k) {
    const auto idx = point_index(jump.p(), cur);
    if (seen[idx]) return false;
    seen[idx] = true;
    cur = jump.step(cur);
  }
  return cur == origin;
}

}  // namespace fracjump
