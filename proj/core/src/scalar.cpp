#include "lefcorr/scalar.hpp"

#include <cctype>
#include <ostream>

#include "lefcorr/errors.hpp"

namespace lefcorr {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

bool is_signed_integer(std::string_view text) {
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!num.empty() && num.front() == '+') num.remove_prefix(1);
  if (!is_signed_integer(num) || !is_signed_integer(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (sgn(d) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational value(n, d);
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) { return value.get_str(10); }

ExactScalar ExactScalar::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty scalar");
  if (text.back() != 'i') return ExactScalar(parse_rational(text));

  std::string_view body = text.substr(0, text.size() - 1);
  if (!body.empty() && body.back() == '*') body.remove_suffix(1);

  std::size_t split = std::string_view::npos;
  for (std::size_t pos = body.size(); pos-- > 1;) {
    if (body[pos] == '+' || body[pos] == '-') {
      split = pos;
      break;
    }
  }
  std::string_view re_text = split == std::string_view::npos ? std::string_view{"0"} : body.substr(0, split);
  std::string_view im_text = split == std::string_view::npos ? body : body.substr(split);
  if (im_text.empty() || im_text == "+") im_text = "1";
  if (im_text == "-") im_text = "-1";
  try {
    return gaussian(parse_rational(re_text), parse_rational(im_text));
  } catch (const ParseError&) {
    throw ParseError("not a Gaussian rational: '" + std::string(text) + "'");
  }
}

bool ExactScalar::is_integral() const {
  return re_.get_den() == 1 && im_.get_den() == 1;
}

ExactScalar ExactScalar::conj() const {
  ExactScalar out = *this;
  out.im_ = -im_;
  return out;
}

Rational ExactScalar::norm() const { return re_ * re_ + im_ * im_; }

std::string ExactScalar::to_string() const {
  if (field_ == Field::kRational) return format_rational(re_);
  std::string out = format_rational(re_);
  if (sgn(im_) >= 0) out += '+';
  out += format_rational(im_);
  out += "*i";
  return out;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar out = *this;
  out.re_ = -re_;
  out.im_ = -im_;
  return out;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  field_ = join(field_, rhs.field_);
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  field_ = join(field_, rhs.field_);
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& rhs) {
  field_ = join(field_, rhs.field_);
  if (sgn(im_) == 0 && sgn(rhs.im_) == 0) {
    re_ *= rhs.re_;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  im_ = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& rhs) {
  if (rhs.is_zero()) throw SingularMatrix("division by zero");
  field_ = join(field_, rhs.field_);
  if (sgn(rhs.im_) == 0) {
    re_ /= rhs.re_;
    im_ /= rhs.re_;
    return *this;
  }
  const Rational n = rhs.norm();
  Rational re = (re_ * rhs.re_ + im_ * rhs.im_) / n;
  im_ = (im_ * rhs.re_ - re_ * rhs.im_) / n;
  re_ = std::move(re);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& value) {
  return os << value.to_string();
}

ExactScalar pow(ExactScalar base, unsigned exponent) {
  ExactScalar result = base.is_gaussian() ? ExactScalar::gaussian(1) : ExactScalar(1);
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

bool exact_sqrt(const Rational& value, Rational& root) {
  if (sgn(value) < 0) return false;
  const Integer& num = value.get_num();
  const Integer& den = value.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return false;
  }
  Integer rn;
  Integer rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

bool exact_sqrt(const ExactScalar& value, ExactScalar& root) {
  const Rational& p = value.real();
  const Rational& q = value.imag();
  if (sgn(q) == 0) {
    Rational r;
    if (sgn(p) >= 0) {
      if (!exact_sqrt(p, r)) return false;
      root = ExactScalar::gaussian(r, 0);
    } else {
      if (!exact_sqrt(Rational(-p), r)) return false;
      root = ExactScalar::gaussian(0, r);
    }
    return true;
  }
  // (x + yi)^2 = p + qi  =>  x^2 = (p + |p + qi|) / 2, y = q / (2x).
  Rational modulus;
  if (!exact_sqrt(Rational(p * p + q * q), modulus)) return false;
  Rational x;
  if (!exact_sqrt(Rational((p + modulus) / 2), x)) return false;
  Rational y = q / (2 * x);
  root = ExactScalar::gaussian(x, y);
  return true;
}

Rational floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return Rational(q);
}

Rational frac(const Rational& value) { return value - floor(value); }

}  // namespace lefcorr
