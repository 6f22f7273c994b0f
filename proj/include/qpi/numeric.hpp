#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace qpi {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(long n) {
  Int r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

inline Int ipow(Int base, long e) {
  Int r = 1;
  while (e-- > 0) r *= base;
  return r;
}

inline Rational rpow(const Rational& base, long e) {
  Rational r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r);
}

inline std::string to_string(const Rational& r) {
  return r.str();
}

/// Parses "p/q" or "p"; throws std::invalid_argument on garbage.
Rational parse_rational(const std::string& s);

inline Rational parse_rational(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: " + s);
  }
}

struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct parameter_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qpi
