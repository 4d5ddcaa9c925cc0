#pragma once

// Text formats shared by the CLI and the reports.
//
//   polynomial  "3,4,0,1"        ascending coefficients: 3 + 4T + T^3
//   matrix      "3,2,1;3,3,1"    rows separated by ';', entries by ','
//   vector      "0,2"            comma-separated coordinates
//
// Integers may be negative; they are reduced mod p.

#include <string>
#include <string_view>

#include "fracjump/linalg.hpp"
#include "fracjump/poly.hpp"

namespace fracjump {

Poly parse_poly(const PrimeField& field, std::string_view text);
Matrix parse_matrix(const PrimeField& field, std::string_view text);
Vector parse_vector(const PrimeField& field, std::string_view text);

std::string format_poly(const Poly& f);
std::string format_matrix(const Matrix& m);
std::string format_vector(const Vector& v);

}  // namespace fracjump
