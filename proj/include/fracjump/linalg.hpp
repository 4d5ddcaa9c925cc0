#pragma once

// Small dense square matrices over F_p.

#include <cstdint>
#include <span>
#include <vector>

#include "fracjump/ff.hpp"
#include "fracjump/poly.hpp"

namespace fracjump {

using Vector = std::vector<Residue>;

// Row-major dim x dim matrix. Entries are assumed reduced mod p.
class Matrix {
 public:
  explicit Matrix(std::size_t dim);
  // Throws ParameterError if entries.size() != dim * dim or dim == 0.
  Matrix(std::size_t dim, std::vector<Residue> entries);

  static Matrix identity(std::size_t dim);
  static Matrix from_rows(const PrimeField& field,
                          const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t dim() const { return dim_; }
  Residue operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  std::span<const Residue> row(std::size_t r) const {
    return {a_.data() + r * dim_, dim_};
  }
  const std::vector<Residue>& entries() const { return a_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Residue> a_;
};

Matrix mat_mul(const PrimeField& field, const Matrix& a, const Matrix& b);
Matrix mat_add(const PrimeField& field, const Matrix& a, const Matrix& b);
Matrix mat_scale(const PrimeField& field, const Matrix& a, Residue c);
Matrix mat_pow(const PrimeField& field, const Matrix& a, std::uint64_t k);
Vector mat_vec(const PrimeField& field, const Matrix& a, std::span<const Residue> v);
Residue determinant(const PrimeField& field, const Matrix& a);

// f(A) by Horner's rule.
Matrix poly_eval(const PrimeField& field, const Poly& f, const Matrix& a);

// Companion matrix of monic f of degree m: ones on the subdiagonal and last
// column (c_0, ..., c_{m-1})^t where T^m = sum c_j T^j mod f. Column vectors
// e_j are sent to e_{j+1}, i.e. the matrix acts as multiplication by T.
// For T^p - T - c this gives last column (c, 1, 0, ..., 0)^t.
Matrix companion(const PrimeField& field, const Poly& f);

// det(T Id - A), by Berkowitz's division-free algorithm.
Poly char_poly(const PrimeField& field, const Matrix& a);

// Monic minimal polynomial, as the lcm of the Krylov minimal polynomials of
// the standard basis vectors.
Poly min_poly(const PrimeField& field, const Matrix& a);

}  // namespace fracjump
