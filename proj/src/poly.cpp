#include "fracjump/poly.hpp"

#include <algorithm>
#include <string>

#include "fracjump/errors.hpp"

namespace fracjump {

namespace {

void trim(std::vector<Residue>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

void require_modulus(const Poly& m) {
  if (m.degree() < 1 || !m.is_monic()) {
    throw ParameterError("modulus must be monic of degree >= 1");
  }
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// c(T) = sum c_{kp} T^{kp}  ->  sum c_{kp} T^k. Valid over F_p since a^p = a.
Poly pth_root(const Poly& c, std::uint32_t p) {
  std::vector<Residue> out;
  for (std::size_t i = 0; i < c.coeffs().size(); i += p) out.push_back(c[i]);
  return Poly(std::move(out));
}

BigNat unit_group_order(std::uint64_t p, std::uint64_t d, unsigned e) {
  return ipow(p, (e - 1) * d) * (ipow(p, d) - 1);
}

BigNat projective_order_of_power(const PrimeField& field, const Poly& g, unsigned e,
                                 const FactorBudget& budget) {
  const std::uint32_t p = field.modulus();
  Poly f = poly_pow(field, g, e);
  auto t = QuotientElement::make(field, Poly::monomial(1, 1), f);
  auto t_q1 = powmod(field, t, BigNat(p - 1));
  return multiplicative_order(field, t_q1,
                              unit_group_order(p, static_cast<std::uint64_t>(g.degree()), e),
                              budget);
}

}  // namespace

Poly::Poly(std::vector<Residue> coeffs) : c_(std::move(coeffs)) { trim(c_); }

Poly Poly::monomial(Residue c, std::size_t degree) {
  std::vector<Residue> v(degree + 1, 0);
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::from_ints(const PrimeField& field, const std::vector<std::int64_t>& coeffs) {
  std::vector<Residue> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(field.reduce(c));
  return Poly(std::move(v));
}

Poly poly_add(const PrimeField& field, const Poly& a, const Poly& b) {
  std::vector<Residue> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field.add(a[i], b[i]);
  return Poly(std::move(out));
}

Poly poly_sub(const PrimeField& field, const Poly& a, const Poly& b) {
  std::vector<Residue> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field.sub(a[i], b[i]);
  return Poly(std::move(out));
}

Poly poly_scale(const PrimeField& field, const Poly& a, Residue c) {
  std::vector<Residue> out(a.coeffs());
  for (auto& x : out) x = field.mul(x, c);
  return Poly(std::move(out));
}

Poly poly_mul(const PrimeField& field, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<Residue> out(ac.size() + bc.size() - 1, 0);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      out[i + j] = field.add(out[i + j], field.mul(ac[i], bc[j]));
    }
  }
  return Poly(std::move(out));
}

Poly poly_pow(const PrimeField& field, const Poly& a, unsigned e) {
  Poly result = Poly::constant(1);
  Poly base = a;
  while (e != 0) {
    if (e & 1u) result = poly_mul(field, result, base);
    e >>= 1;
    if (e != 0) base = poly_mul(field, base, base);
  }
  return result;
}

std::pair<Poly, Poly> poly_divmod(const PrimeField& field, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};

  std::vector<Residue> rem(a.coeffs());
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Residue lead_inv = field.inv(b.leading());
  std::vector<Residue> quot(rem.size() - db, 0);

  for (std::size_t k = rem.size(); k-- > db;) {
    Residue q = field.mul(rem[k], lead_inv);
    if (q == 0) continue;
    quot[k - db] = q;
    for (std::size_t t = 0; t <= db; ++t) {
      rem[k - db + t] = field.sub(rem[k - db + t], field.mul(q, bc[t]));
    }
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_rem(const PrimeField& field, const Poly& a, const Poly& b) {
  return poly_divmod(field, a, b).second;
}

Poly make_monic(const PrimeField& field, const Poly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return poly_scale(field, a, field.inv(a.leading()));
}

Poly poly_gcd(const PrimeField& field, const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = poly_rem(field, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(field, x);
}

Poly poly_lcm(const PrimeField& field, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly g = poly_gcd(field, a, b);
  return make_monic(field, poly_mul(field, poly_divmod(field, a, g).first, b));
}

Poly derivative(const PrimeField& field, const Poly& a) {
  if (a.degree() < 1) return {};
  std::vector<Residue> out(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
    out[i - 1] = field.mul(field.reduce(static_cast<std::int64_t>(i)), a[i]);
  }
  return Poly(std::move(out));
}

Residue evaluate(const PrimeField& field, const Poly& a, Residue x) {
  Residue acc = 0;
  const auto& c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = field.add(field.mul(acc, x), c[i]);
  return acc;
}

Poly poly_mulmod(const PrimeField& field, const Poly& a, const Poly& b, const Poly& m) {
  require_modulus(m);
  return poly_rem(field, poly_mul(field, a, b), m);
}

Poly poly_powmod(const PrimeField& field, const Poly& a, const BigNat& e, const Poly& m) {
  require_modulus(m);
  if (e < 0) throw ParameterError("negative exponent");
  Poly result = poly_rem(field, Poly::constant(1), m);
  Poly base = poly_rem(field, a, m);
  const auto bits = e == 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
  for (unsigned i = bits; i-- > 0;) {
    result = poly_mulmod(field, result, result, m);
    if (boost::multiprecision::bit_test(e, i)) result = poly_mulmod(field, result, base, m);
  }
  return result;
}

QuotientElement QuotientElement::make(const PrimeField& field, const Poly& value,
                                      const Poly& modulus) {
  require_modulus(modulus);
  return {poly_rem(field, value, modulus), modulus};
}

QuotientElement powmod(const PrimeField& field, const QuotientElement& a, const BigNat& e) {
  return {poly_powmod(field, a.residue, e, a.modulus), a.modulus};
}

bool is_unit(const PrimeField& field, const QuotientElement& a) {
  return poly_gcd(field, a.residue, a.modulus).is_one();
}

bool is_irreducible(const PrimeField& field, const Poly& f_in) {
  if (f_in.degree() < 1) throw ParameterError("irreducibility of a constant is undefined");
  const Poly f = make_monic(field, f_in);
  const auto d = static_cast<std::uint64_t>(f.degree());
  if (d == 1) return true;

  const Poly t = Poly::monomial(1, 1);
  const BigNat p(field.modulus());
  // frob[k] = T^(p^k) mod f
  std::vector<Poly> frob{t};
  for (std::uint64_t k = 1; k <= d; ++k) frob.push_back(poly_powmod(field, frob.back(), p, f));

  if (frob[d] != t) return false;
  for (auto r : prime_divisors(d)) {
    if (!poly_gcd(field, poly_sub(field, frob[d / r], t), f).is_one()) return false;
  }
  return true;
}

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const PrimeField& field,
                                                                const Poly& f_in) {
  std::vector<std::pair<Poly, unsigned>> out;
  if (f_in.degree() < 1) return out;
  const Poly f = make_monic(field, f_in);
  const std::uint32_t p = field.modulus();

  Poly fp = derivative(field, f);
  if (fp.is_zero()) {
    for (auto& [g, e] : squarefree_decomposition(field, pth_root(f, p))) out.emplace_back(g, e * p);
    return out;
  }

  Poly c = poly_gcd(field, f, fp);
  Poly w = poly_divmod(field, f, c).first;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = poly_gcd(field, w, c);
    Poly fac = poly_divmod(field, w, y).first;
    if (fac.degree() >= 1) out.emplace_back(make_monic(field, fac), i);
    ++i;
    w = std::move(y);
    c = poly_divmod(field, c, w).first;
  }
  if (c.degree() >= 1) {
    for (auto& [g, e] : squarefree_decomposition(field, pth_root(c, p))) out.emplace_back(g, e * p);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first.coeffs() < b.first.coeffs();
  });
  return out;
}

std::vector<std::pair<BigNat, unsigned>> factor_trial_division(BigNat n,
                                                              const FactorBudget& budget) {
  if (n < 1) throw ParameterError("can only factor positive integers");
  std::vector<std::pair<BigNat, unsigned>> out;
  std::uint64_t d = 2;
  for (; d <= budget.trial_division_bound && BigNat(d) * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    out.emplace_back(BigNat(d), k);
  }
  if (n > 1) {
    if (BigNat(d) * d <= n) {
      throw ResourceError("cofactor " + n.str() + " not resolved by trial division up to " +
                          std::to_string(budget.trial_division_bound));
    }
    out.emplace_back(n, 1);
  }
  return out;
}

BigNat multiplicative_order(const PrimeField& field, const QuotientElement& a,
                            const BigNat& group_order, const FactorBudget& budget) {
  if (!is_unit(field, a)) throw DomainError("order of a non-unit");
  if (group_order < 1) throw ParameterError("group order must be positive");
  const Poly one = poly_rem(field, Poly::constant(1), a.modulus);
  if (powmod(field, a, group_order).residue != one) {
    throw DomainError("stated group order is not a multiple of the element order");
  }
  BigNat order = group_order;
  for (const auto& [r, k] : factor_trial_division(group_order, budget)) {
    for (unsigned i = 0; i < k; ++i) {
      BigNat candidate = order / r;
      if (powmod(field, a, candidate).residue != one) break;
      order = std::move(candidate);
    }
  }
  return order;
}

BigNat projective_order(const PrimeField& field, const Poly& f, const FactorBudget& budget) {
  if (f.degree() < 1) throw ParameterError("projective order needs a non-constant modulus");
  if (f[0] == 0) throw DomainError("T is not a unit modulo a polynomial divisible by T");
  auto parts = squarefree_decomposition(field, f);
  if (parts.size() != 1 || !is_irreducible(field, parts[0].first)) {
    throw DomainError("modulus is not a power of an irreducible polynomial");
  }
  return projective_order_of_power(field, parts[0].first, parts[0].second, budget);
}

bool is_projectively_primitive(const PrimeField& field, const Poly& f_in,
                               const FactorBudget& budget) {
  if (f_in.degree() < 1) throw ParameterError("projective primitivity needs degree >= 1");
  const Poly f = make_monic(field, f_in);
  if (f[0] == 0 || !is_irreducible(field, f)) return false;
  const auto d = static_cast<std::uint64_t>(f.degree());
  return projective_order_of_power(field, f, 1, budget) ==
         projective_space_size(field.modulus(), d);
}

BigNat ipow(std::uint64_t base, std::uint64_t exp) {
  BigNat result = 1;
  BigNat b = base;
  while (exp != 0) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp != 0) b *= b;
  }
  return result;
}

BigNat projective_space_size(std::uint64_t p, std::uint64_t d) {
  return (ipow(p, d) - 1) / (p - 1);
}

BigNat a_bound(std::uint64_t q, std::uint64_t e, std::uint64_t f) {
  if (q < 2 || e < 1 || f < 1) throw ParameterError("a_bound needs q >= 2, e >= 1, f >= 1");
  std::uint64_t k = 0;
  for (BigNat qk = 1; qk < e; qk *= q) ++k;
  return ipow(q, k) * projective_space_size(q, f);
}

}  // namespace fracjump
