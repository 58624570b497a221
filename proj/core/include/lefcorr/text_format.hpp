#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lefcorr/matrix.hpp"
#include "lefcorr/scalar.hpp"

namespace lefcorr {

// Text format shared by the CLI and the reports: row-major, rows separated
// by ';', entries by ','. Scalars use the ExactScalar syntax, so "2,0;0,2"
// and "1+1*i,0;0,1" are both valid.

ExactMatrix parse_matrix(std::string_view text);
IntMatrix parse_int_matrix(std::string_view text);
std::vector<Rational> parse_rational_vector(std::string_view text);

std::string format_matrix(const ExactMatrix& m);
std::string format_matrix(const IntMatrix& m);
std::string format_vector(const std::vector<Rational>& v);

/// Shortest round-trip decimal form of a double, e.g. "0.1" or "-2.5e-07".
std::string format_double(double value);
/// "~x+y*i" floating complex representation used in floating-mode reports.
std::string format_approx(const Complex& value);

}  // namespace lefcorr
