#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lefcorr {

using Integer = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;

/// Parses "p" or "p/q" (optional sign, q > 0 after canonicalization).
Rational parse_rational(std::string_view text);

/// "p/q" with gcd(p, q) = 1 and q > 0; "/1" is omitted.
std::string format_rational(const Rational& value);

/// An element of Q or Q(i), held as two canonical GMP rationals.
///
/// The field tag records which field a value lives in. Arithmetic promotes
/// to the larger field, so a computation that never touches a Gaussian
/// operand stays rational and serializes as "p/q". Gaussian values always
/// serialize as "re+im*i", even when the imaginary part is zero. Equality
/// compares values and ignores the tag.
class ExactScalar {
 public:
  enum class Field : std::uint8_t { kRational, kGaussian };

  ExactScalar() = default;
  ExactScalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(const Integer& value) : re_(value) {}  // NOLINT
  ExactScalar(Rational value) : re_(std::move(value)) { re_.canonicalize(); }  // NOLINT
  ExactScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)), field_(Field::kGaussian) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static ExactScalar gaussian(Rational re, Rational im = 0) {
    return ExactScalar(std::move(re), std::move(im));
  }
  static ExactScalar i() { return gaussian(0, 1); }

  /// Accepts "p/q", "x+y*i", "m+ni", "i", "-2i", ...
  static ExactScalar parse(std::string_view text);

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }
  Field field() const { return field_; }
  bool is_gaussian() const { return field_ == Field::kGaussian; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  /// Both parts have denominator 1.
  bool is_integral() const;

  ExactScalar conj() const;
  /// re^2 + im^2.
  Rational norm() const;
  ExactScalar promoted() const { return gaussian(re_, im_); }

  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string to_string() const;

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& rhs);
  ExactScalar& operator-=(const ExactScalar& rhs);
  ExactScalar& operator*=(const ExactScalar& rhs);
  /// Throws SingularMatrix on division by zero.
  ExactScalar& operator/=(const ExactScalar& rhs);

  friend ExactScalar operator+(ExactScalar lhs, const ExactScalar& rhs) { return lhs += rhs; }
  friend ExactScalar operator-(ExactScalar lhs, const ExactScalar& rhs) { return lhs -= rhs; }
  friend ExactScalar operator*(ExactScalar lhs, const ExactScalar& rhs) { return lhs *= rhs; }
  friend ExactScalar operator/(ExactScalar lhs, const ExactScalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const ExactScalar& lhs, const ExactScalar& rhs) {
    return lhs.re_ == rhs.re_ && lhs.im_ == rhs.im_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactScalar& value);

 private:
  static Field join(Field a, Field b) { return a == Field::kGaussian ? a : b; }

  Rational re_;
  Rational im_;
  Field field_ = Field::kRational;
};

/// Raises to a nonnegative integer power by repeated squaring.
ExactScalar pow(ExactScalar base, unsigned exponent);

/// Sqrt in Q(i) when it exists there. The root returned has positive real
/// part, or is i*r with r >= 0 when the real part vanishes.
bool exact_sqrt(const ExactScalar& value, ExactScalar& root);

/// Exact square root of a nonnegative rational, if it is a perfect square.
bool exact_sqrt(const Rational& value, Rational& root);

/// Floor of a rational as a rational with denominator 1.
Rational floor(const Rational& value);
/// value - floor(value), in [0, 1).
Rational frac(const Rational& value);

/// Scalar helpers used by the templated matrix code.
inline bool is_zero(const ExactScalar& value) { return value.is_zero(); }
inline bool is_zero(const Rational& value) { return sgn(value) == 0; }
inline bool is_zero(const Integer& value) { return sgn(value) == 0; }
inline bool is_zero(const Complex& value) { return value == Complex{}; }

}  // namespace lefcorr
