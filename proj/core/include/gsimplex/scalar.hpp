#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

namespace gsimplex {

/// Exact arithmetic scalar. Always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

enum class Arithmetic { Float, Rational };

std::string_view to_string(Arithmetic a);
Arithmetic parse_arithmetic(std::string_view text);

/// Parses "p/q", integers and plain decimals ("0.25", "-1e-3") into an exact rational.
Rational parse_rational(std::string_view text);

/// Exact square root when numerator and denominator are perfect squares,
/// otherwise the rational nearest to the double-precision square root.
Rational sqrt_rational(const Rational& x);

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr Arithmetic arithmetic = Arithmetic::Float;
  static double abs(double x) { return std::fabs(x); }
  static double sqrt(double x) { return std::sqrt(x); }
  static double to_double(double x) { return x; }
  static double from_double(double x) { return x; }
  static double from_rational(const Rational& x) { return x.get_d(); }
  static double parse(std::string_view text);
  // Shortest round-trip representation.
  static std::string to_string(double x);
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr Arithmetic arithmetic = Arithmetic::Rational;
  static Rational abs(const Rational& x) { return Rational(::abs(x)); }
  static Rational sqrt(const Rational& x) { return sqrt_rational(x); }
  static double to_double(const Rational& x) { return x.get_d(); }
  // Exact binary expansion of the double.
  static Rational from_double(double x) { return Rational(x); }
  static Rational from_rational(const Rational& x) { return x; }
  static Rational parse(std::string_view text) { return parse_rational(text); }
  static std::string to_string(Rational x) {
    x.canonicalize();
    return x.get_str();
  }
};

template <class T>
T abs_value(const T& x) {
  return ScalarTraits<T>::abs(x);
}

template <class T>
double to_double(const T& x) {
  return ScalarTraits<T>::to_double(x);
}

template <class T>
std::string format_scalar(const T& x) {
  return ScalarTraits<T>::to_string(x);
}

/// base^exponent for integral exponent (negative allowed).
template <class T>
T pow_int(const T& base, int exponent) {
  T result(1);
  T factor = exponent < 0 ? T(T(1) / base) : base;
  unsigned e = exponent < 0 ? static_cast<unsigned>(-exponent) : static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1U) result *= factor;
    factor *= factor;
    e >>= 1U;
  }
  return result;
}

template <class To, class From>
To scalar_cast(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else if constexpr (std::is_same_v<From, double>) {
    return ScalarTraits<To>::from_double(x);
  } else {
    return ScalarTraits<To>::from_rational(x);
  }
}

}  // namespace gsimplex
