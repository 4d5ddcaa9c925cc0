#include "fracjump/text_format.hpp"

#include <charconv>
#include <vector>

#include "fracjump/errors.hpp"

namespace fracjump {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::int64_t> parse_ints(std::string_view text) {
  text = strip(text);
  if (text.empty()) throw ParseError("empty list");
  std::vector<std::int64_t> out;
  for (auto tok : split(text, ',')) {
    tok = strip(tok);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw ParseError("not an integer: '" + std::string(tok) + "'");
    }
    out.push_back(v);
  }
  return out;
}

template <typename Range>
std::string join(const Range& values, char sep) {
  std::string out;
  bool first = true;
  for (auto v : values) {
    if (!first) out += sep;
    out += std::to_string(v);
    first = false;
  }
  return out;
}

}  // namespace

Poly parse_poly(const PrimeField& field, std::string_view text) {
  return Poly::from_ints(field, parse_ints(text));
}

Matrix parse_matrix(const PrimeField& field, std::string_view text) {
  std::vector<std::vector<std::int64_t>> rows;
  for (auto row : split(strip(text), ';')) rows.push_back(parse_ints(row));
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw ParseError("matrix is not square");
  }
  return Matrix::from_rows(field, rows);
}

Vector parse_vector(const PrimeField& field, std::string_view text) {
  Vector out;
  for (auto v : parse_ints(text)) out.push_back(field.reduce(v));
  return out;
}

std::string format_poly(const Poly& f) {
  if (f.is_zero()) return "0";
  return join(f.coeffs(), ',');
}

std::string format_matrix(const Matrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    if (r != 0) out += ';';
    out += join(m.row(r), ',');
  }
  return out;
}

std::string format_vector(const Vector& v) { return join(v, ','); }

}  // namespace fracjump
