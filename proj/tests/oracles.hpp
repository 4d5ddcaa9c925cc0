#pragma once

// Brute-force reference computations for the test suites. Nothing here
// calls the order, irreducibility or characteristic-polynomial code under
// test; it works on plain integer vectors.

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Coeffs = std::vector<std::int64_t>;  // ascending, reduced mod p

inline Coeffs trim(Coeffs c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

inline std::int64_t mod(std::int64_t v, std::int64_t p) { return ((v % p) + p) % p; }

inline std::int64_t inv_fermat(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, b = mod(a, p);
  for (std::int64_t e = p - 2; e > 0; e >>= 1, b = b * b % p) {
    if (e & 1) r = r * b % p;
  }
  return r;
}

// (a * b) mod m, m monic of degree d >= 1; result has exactly d entries.
inline Coeffs mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::int64_t p) {
  const std::size_t d = m.size() - 1;
  Coeffs r(a.size() + b.size() + d, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (std::size_t k = r.size(); k-- > d;) {
    const std::int64_t c = r[k];
    if (c == 0) continue;
    for (std::size_t t = 0; t <= d; ++t) r[k - d + t] = mod(r[k - d + t] - c * m[t], p);
  }
  r.resize(d);
  return r;
}

inline Coeffs reduce(const Coeffs& a, const Coeffs& m, std::int64_t p) {
  return mulmod(a, Coeffs{1}, m, p);
}

inline bool is_constant(const Coeffs& r) {
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) return false;
  return true;
}

// Walks x, x^2, ... until 1. Returns 0 if 1 is never reached (non-unit).
inline std::uint64_t order(const Coeffs& x, const Coeffs& m, std::int64_t p) {
  const Coeffs one = reduce({1}, m, p);
  const Coeffs base = reduce(x, m, p);
  Coeffs cur = base;
  for (std::uint64_t k = 1; k < 10'000'000; ++k) {
    if (cur == one) return k;
    cur = mulmod(cur, base, m, p);
    if (cur == Coeffs(cur.size(), 0)) return 0;
  }
  return 0;
}

// Order of the class of T in (F_p[T]/m)^* / F_p^*: smallest k with T^k a
// nonzero constant.
inline std::uint64_t projective_order_of_t(const Coeffs& m, std::int64_t p) {
  const Coeffs t = reduce({0, 1}, m, p);
  Coeffs cur = t;
  for (std::uint64_t k = 1; k < 10'000'000; ++k) {
    if (is_constant(cur) && cur[0] != 0) return k;
    cur = mulmod(cur, t, m, p);
  }
  return 0;
}

// Irreducible iff no monic factor of degree 1..deg/2 divides it.
inline bool is_irreducible(const Coeffs& f, std::int64_t p) {
  const int d = static_cast<int>(f.size()) - 1;
  const std::int64_t lead_inv = inv_fermat(f.back(), p);
  Coeffs monic(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) monic[i] = f[i] * lead_inv % p;
  for (int k = 1; 2 * k <= d; ++k) {
    std::int64_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      Coeffs g(k + 1, 0);
      g[k] = 1;
      std::int64_t v = idx;
      for (int i = 0; i < k; ++i, v /= p) g[i] = v % p;
      // f mod g == 0 ?
      Coeffs r = reduce(monic, g, p);
      if (r == Coeffs(r.size(), 0)) return false;
    }
  }
  return true;
}

// All monic polynomials of degree d over F_p.
inline std::vector<Coeffs> monic_polys(int d, std::int64_t p) {
  std::vector<Coeffs> out;
  std::int64_t count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  for (std::int64_t idx = 0; idx < count; ++idx) {
    Coeffs g(d + 1, 0);
    g[d] = 1;
    std::int64_t v = idx;
    for (int i = 0; i < d; ++i, v /= p) g[i] = v % p;
    out.push_back(g);
  }
  return out;
}

inline Coeffs poly_pow(const Coeffs& g, unsigned e, std::int64_t p) {
  Coeffs r{1};
  for (unsigned k = 0; k < e; ++k) {
    Coeffs next(r.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) next[i + j] = (next[i + j] + r[i] * g[j]) % p;
    r = next;
  }
  return r;
}

using Mat = std::vector<std::vector<std::int64_t>>;

inline std::int64_t det(Mat a, std::int64_t p) {
  const std::size_t n = a.size();
  std::int64_t d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && mod(a[r][c], p) == 0) ++r;
    if (r == n) return 0;
    if (r != c) {
      std::swap(a[r], a[c]);
      d = mod(-d, p);
    }
    d = d * mod(a[c][c], p) % p;
    const std::int64_t iv = inv_fermat(a[c][c], p);
    for (std::size_t k = c + 1; k < n; ++k) {
      const std::int64_t f = mod(a[k][c], p) * iv % p;
      for (std::size_t j = c; j < n; ++j) a[k][j] = mod(a[k][j] - f * a[c][j], p);
    }
  }
  return d;
}

// det(t Id - A) evaluated at every t in F_p.
inline std::vector<std::int64_t> char_poly_values(const Mat& a, std::int64_t p) {
  std::vector<std::int64_t> out;
  for (std::int64_t t = 0; t < p; ++t) {
    Mat m = a;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) m[i][j] = mod((i == j ? t : 0) - a[i][j], p);
    out.push_back(det(m, p));
  }
  return out;
}

inline Mat random_matrix(std::size_t n, std::int64_t p, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  Mat m(n, std::vector<std::int64_t>(n));
  for (auto& row : m)
    for (auto& v : row) v = dist(rng);
  return m;
}

}  // namespace oracle
