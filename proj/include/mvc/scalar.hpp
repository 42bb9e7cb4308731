#ifndef MVC_SCALAR_HPP
#define MVC_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "mvc/error.hpp"

namespace mvc {

/// Exact arithmetic used by the rational LP mode.
using Rational = boost::multiprecision::cpp_rational;

/// Numerical thresholds shared by the LP engine and the predicates.
/// Exact scalars ignore them and decide signs exactly.
struct Tolerances {
  double feasibility = 1e-9;
  double pivot = 1e-12;
};

template <class T>
struct scalar_traits {
  static constexpr bool exact = false;
  static double to_double(const T& v) { return static_cast<double>(v); }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static double to_double(const Rational& v) { return v.convert_to<double>(); }
};

template <class T>
inline constexpr bool is_exact_v = scalar_traits<T>::exact;

/// A tolerance as a value of the working scalar; zero in exact mode.
template <class T>
T tol(double t) {
  if constexpr (is_exact_v<T>) {
    return T(0);
  } else {
    return T(t);
  }
}

template <class T>
T abs_value(const T& v) {
  return v < T(0) ? T(-v) : v;
}

template <class T>
double as_double(const T& v) {
  return scalar_traits<T>::to_double(v);
}

/// Parses "p/q", integers and decimals (optionally with an exponent) exactly.
inline Rational parse_rational(std::string_view tok) {
  auto fail = [&] { throw Error(Errc::ParseError, "bad number '" + std::string(tok) + "'"); };
  if (tok.empty()) fail();
  if (auto slash = tok.find('/'); slash != std::string_view::npos) {
    Rational num = parse_rational(tok.substr(0, slash));
    Rational den = parse_rational(tok.substr(slash + 1));
    if (den == 0) fail();
    return num / den;
  }
  std::size_t i = 0;
  bool neg = false;
  if (tok[i] == '+' || tok[i] == '-') {
    neg = tok[i] == '-';
    ++i;
  }
  boost::multiprecision::cpp_int mant = 0;
  int scale = 0;
  bool digits = false, dot = false;
  for (; i < tok.size(); ++i) {
    char c = tok[i];
    if (c >= '0' && c <= '9') {
      mant = mant * 10 + (c - '0');
      digits = true;
      if (dot) --scale;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!digits) fail();
  if (i < tok.size()) {
    if (tok[i] != 'e' && tok[i] != 'E') fail();
    std::string exp(tok.substr(i + 1));
    if (exp.empty()) fail();
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(exp, &used);
    } catch (...) {
      fail();
    }
    if (used != exp.size()) fail();
    scale += e;
  }
  Rational r(mant);
  boost::multiprecision::cpp_int p = 1;
  for (int k = 0; k < std::abs(scale); ++k) p *= 10;
  r = scale >= 0 ? Rational(r * p) : Rational(r / p);
  return neg ? Rational(-r) : r;
}

}  // namespace mvc

#endif  // MVC_SCALAR_HPP
