#include "lefcorr/text_format.hpp"

#include <charconv>
#include <cmath>
#include <array>

#include "lefcorr/errors.hpp"

namespace lefcorr {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

ExactMatrix parse_matrix(std::string_view text) {
  const auto rows = split(text, ';');
  std::vector<std::vector<ExactScalar>> entries;
  for (auto row : rows) {
    std::vector<ExactScalar> parsed;
    for (auto item : split(row, ',')) parsed.push_back(ExactScalar::parse(item));
    if (!entries.empty() && parsed.size() != entries.front().size()) {
      throw ParseError("ragged matrix '" + std::string(text) + "'");
    }
    entries.push_back(std::move(parsed));
  }
  ExactMatrix out(entries.size(), entries.front().size());
  for (std::size_t r = 0; r < out.rows(); ++r) {
    for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = entries[r][c];
  }
  return out;
}

IntMatrix parse_int_matrix(std::string_view text) {
  const ExactMatrix m = parse_matrix(text);
  try {
    return to_integer(m);
  } catch (const ShapeError&) {
    throw ParseError("expected an integer matrix, got '" + std::string(text) + "'");
  }
}

std::vector<Rational> parse_rational_vector(std::string_view text) {
  std::vector<Rational> out;
  for (auto item : split(text, ',')) out.push_back(parse_rational(item));
  return out;
}

std::string format_matrix(const ExactMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r != 0) out += ';';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c != 0) out += ',';
      out += m(r, c).to_string();
    }
  }
  return out;
}

std::string format_matrix(const IntMatrix& m) { return format_matrix(to_exact(m)); }

std::string format_vector(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += ',';
    out += format_rational(v[i]);
  }
  return out;
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  (void)ec;
  return std::string(buf.data(), end);
}

std::string format_approx(const Complex& value) {
  std::string out = "~" + format_double(value.real());
  if (!std::signbit(value.imag())) out += '+';
  out += format_double(value.imag());
  out += "*i";
  return out;
}

}  // namespace lefcorr
