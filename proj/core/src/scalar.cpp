#include "gsimplex/scalar.hpp"

#include <charconv>
#include <cstdio>
#include <string>

#include "gsimplex/error.hpp"

namespace gsimplex {

std::string_view to_string(Arithmetic a) {
  return a == Arithmetic::Float ? "float" : "rational";
}

Arithmetic parse_arithmetic(std::string_view text) {
  if (text == "float" || text == "double") return Arithmetic::Float;
  if (text == "rational" || text == "exact") return Arithmetic::Rational;
  throw Error(ErrorKind::Parse, "unknown arithmetic '" + std::string(text) + "'");
}

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) throw Error(ErrorKind::Parse, "malformed number '" + std::string(whole) + "'");
  std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (start == text.size()) throw Error(ErrorKind::Parse, "malformed number '" + std::string(whole) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw Error(ErrorKind::Parse, "malformed number '" + std::string(whole) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return mpz_class(digits, 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view raw) {
  std::string_view text = trim(raw);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(trim(text.substr(0, slash)), raw);
    mpz_class den = parse_integer(trim(text.substr(slash + 1)), raw);
    if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(raw) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  // Decimal with optional exponent, converted exactly.
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string_view exp_text = text.substr(e + 1);
    mpz_class ez = parse_integer(exp_text, raw);
    if (!ez.fits_slong_p() || abs(ez) > 4096) {
      throw Error(ErrorKind::Parse, "exponent out of range in '" + std::string(raw) + "'");
    }
    exponent = ez.get_si();
  }
  bool negative = !mantissa.empty() && mantissa[0] == '-';
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) mantissa.remove_prefix(1);
  std::string digits;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = mantissa.substr(0, dot);
    std::string_view frac_part = mantissa.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw Error(ErrorKind::Parse, "malformed number '" + std::string(raw) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    digits = std::string(mantissa);
  }
  mpz_class value = parse_integer(digits, raw);
  if (negative) value = -value;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational q = exponent < 0 ? Rational(value, scale) : Rational(value * scale, 1);
  q.canonicalize();
  return q;
}

Rational sqrt_rational(const Rational& x) {
  if (x < 0) throw Error(ErrorKind::Precondition, "square root of a negative rational");
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) != 0 && mpz_perfect_square_p(den.get_mpz_t()) != 0) {
    mpz_class rn;
    mpz_class rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
  }
  return Rational(std::sqrt(x.get_d()));
}

double ScalarTraits<double>::parse(std::string_view raw) {
  std::string_view text = trim(raw);
  if (text.find('/') != std::string_view::npos) return parse_rational(text).get_d();
  double value = 0.0;
  std::string buffer(text);
  const char* first = buffer.c_str();
  const char* last = first + buffer.size();
  if (!buffer.empty() && buffer[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error(ErrorKind::Parse, "malformed number '" + std::string(raw) + "'");
  }
  return value;
}

std::string ScalarTraits<double>::to_string(double x) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), x);
  return std::string(buffer, ptr);
}

}  // namespace gsimplex
