#include "fracjump/linalg.hpp"

#include <algorithm>
#include <string>

#include "fracjump/errors.hpp"

namespace fracjump {

namespace {

void require_same_dim(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) {
    throw ParameterError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

}  // namespace

Matrix::Matrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0) {
  if (dim == 0) throw ParameterError("matrix dimension must be >= 1");
}

Matrix::Matrix(std::size_t dim, std::vector<Residue> entries) : dim_(dim), a_(std::move(entries)) {
  if (dim == 0) throw ParameterError("matrix dimension must be >= 1");
  if (a_.size() != dim * dim) throw ParameterError("matrix entry count does not match dimension");
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const PrimeField& field,
                         const std::vector<std::vector<std::int64_t>>& rows) {
  Matrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw ParameterError("matrix is not square");
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = field.reduce(rows[r][c]);
  }
  return m;
}

Matrix mat_mul(const PrimeField& field, const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Residue aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) = field.add(out(i, j), field.mul(aik, b(k, j)));
    }
  }
  return out;
}

Matrix mat_add(const PrimeField& field, const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  std::vector<Residue> e(a.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = field.add(a.entries()[i], b.entries()[i]);
  return Matrix(a.dim(), std::move(e));
}

Matrix mat_scale(const PrimeField& field, const Matrix& a, Residue c) {
  std::vector<Residue> e(a.entries());
  for (auto& x : e) x = field.mul(x, c);
  return Matrix(a.dim(), std::move(e));
}

Matrix mat_pow(const PrimeField& field, const Matrix& a, std::uint64_t k) {
  Matrix result = Matrix::identity(a.dim());
  Matrix base = a;
  while (k != 0) {
    if (k & 1) result = mat_mul(field, result, base);
    k >>= 1;
    if (k != 0) base = mat_mul(field, base, base);
  }
  return result;
}

Vector mat_vec(const PrimeField& field, const Matrix& a, std::span<const Residue> v) {
  if (v.size() != a.dim()) throw ParameterError("vector length does not match matrix dimension");
  Vector out(a.dim(), 0);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Residue acc = 0;
    for (std::size_t j = 0; j < a.dim(); ++j) acc = field.add(acc, field.mul(a(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

Residue determinant(const PrimeField& field, const Matrix& a) {
  const std::size_t n = a.dim();
  Matrix m = a;
  Residue det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = field.neg(det);
    }
    det = field.mul(det, m(col, col));
    const Residue inv = field.inv(m(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const Residue factor = field.mul(m(r, col), inv);
      if (factor == 0) continue;
      for (std::size_t j = col; j < n; ++j) m(r, j) = field.sub(m(r, j), field.mul(factor, m(col, j)));
    }
  }
  return det;
}

Matrix poly_eval(const PrimeField& field, const Poly& f, const Matrix& a) {
  Matrix acc(a.dim());
  const Matrix id = Matrix::identity(a.dim());
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = mat_add(field, mat_mul(field, acc, a), mat_scale(field, id, c[i]));
  }
  return acc;
}

Matrix companion(const PrimeField& field, const Poly& f) {
  if (f.degree() < 1 || !f.is_monic()) throw ParameterError("companion matrix needs a monic polynomial of degree >= 1");
  const auto m = static_cast<std::size_t>(f.degree());
  Matrix c(m);
  for (std::size_t i = 1; i < m; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < m; ++i) c(i, m - 1) = field.neg(f[i]);
  return c;
}

Poly char_poly(const PrimeField& field, const Matrix& a) {
  const std::size_t n = a.dim();
  // Coefficients in descending order; v[0] is the leading 1.
  std::vector<Residue> v{1, field.neg(a(0, 0))};
  for (std::size_t r = 1; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R C, -R A_r C, ..., -R A_r^{r-1} C
    std::vector<Residue> t(r + 2);
    t[0] = 1;
    t[1] = field.neg(a(r, r));
    std::vector<Residue> u(r);
    for (std::size_t i = 0; i < r; ++i) u[i] = a(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Residue dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot = field.add(dot, field.mul(a(r, i), u[i]));
      t[k + 2] = field.neg(dot);
      std::vector<Residue> next(r, 0);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) next[i] = field.add(next[i], field.mul(a(i, j), u[j]));
      }
      u = std::move(next);
    }
    std::vector<Residue> w(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) w[i] = field.add(w[i], field.mul(t[i - j], v[j]));
    }
    v = std::move(w);
  }
  std::reverse(v.begin(), v.end());
  return Poly(std::move(v));
}

namespace {

// Minimal polynomial of A restricted to the cyclic subspace spanned by
// e_k, A e_k, A^2 e_k, ...
Poly krylov_min_poly(const PrimeField& field, const Matrix& a, std::size_t k) {
  struct Row {
    Vector w;      // = q(A) e_k, reduced
    Poly q;
    std::size_t pivot;
  };
  const std::size_t n = a.dim();
  std::vector<Row> basis;
  Vector u(n, 0);
  u[k] = 1;
  for (std::size_t j = 0; j <= n; ++j) {
    Vector w = u;
    Poly q = Poly::monomial(1, j);
    for (const auto& b : basis) {
      const Residue x = w[b.pivot];
      if (x == 0) continue;
      const Residue factor = field.div(x, b.w[b.pivot]);
      for (std::size_t i = 0; i < n; ++i) w[i] = field.sub(w[i], field.mul(factor, b.w[i]));
      q = poly_sub(field, q, poly_scale(field, b.q, factor));
    }
    auto nz = std::find_if(w.begin(), w.end(), [](Residue x) { return x != 0; });
    if (nz == w.end()) return q;
    const auto pivot = static_cast<std::size_t>(nz - w.begin());
    basis.push_back({std::move(w), std::move(q), pivot});
    u = mat_vec(field, a, u);
  }
  throw Error("Krylov sequence failed to become dependent");  // unreachable
}

}  // namespace

Poly min_poly(const PrimeField& field, const Matrix& a) {
  Poly result = Poly::constant(1);
  for (std::size_t k = 0; k < a.dim(); ++k) {
    result = poly_lcm(field, result, krylov_min_poly(field, a, k));
  }
  return result;
}

}  // namespace fracjump
