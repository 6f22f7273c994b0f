#pragma once

#include <complex>
#include <vector>

#include "qpi/numeric.hpp"

namespace qpi {

/// Coefficients of the x-th cyclotomic polynomial, ascending, monic.
const std::vector<Int>& cyclotomic_polynomial(long x);

/// Element of Z[zeta_x] (or Q[zeta_x]), stored as a coefficient vector over
/// 1, zeta, ..., zeta^{phi(x)-1}, canonically reduced modulo the x-th
/// cyclotomic polynomial. Equality is exact equality of complex values.
template <typename C>
class Cyclotomic {
 public:
  explicit Cyclotomic(long order = 1)
      : order_(order), c_(cyclotomic_polynomial(order).size() - 1, C(0)) {}

  static Cyclotomic from_integer(long order, C v) {
    Cyclotomic r(order);
    r.c_[0] = std::move(v);
    return r;
  }

  /// zeta_x^k
  static Cyclotomic root_power(long order, long k) {
    k %= order;
    if (k < 0) k += order;
    std::vector<C> raw(order, C(0));
    raw[static_cast<size_t>(k)] = C(1);
    return from_raw(order, std::move(raw));
  }

  /// Builds from an arbitrary-length exponent vector (coefficient of zeta^j
  /// at index j), reducing exponents mod x and then mod Phi_x.
  static Cyclotomic from_raw(long order, std::vector<C> raw) {
    std::vector<C> folded(static_cast<size_t>(order), C(0));
    for (size_t j = 0; j < raw.size(); ++j)
      folded[j % static_cast<size_t>(order)] += raw[j];
    // divide by Phi_x, keep remainder
    const auto& phi = cyclotomic_polynomial(order);
    const size_t deg = phi.size() - 1;
    for (size_t j = folded.size(); j-- > deg;) {
      C q = folded[j];
      if (q == C(0)) continue;
      for (size_t i = 0; i < phi.size(); ++i)
        folded[j - deg + i] -= q * C(phi[i]);
    }
    Cyclotomic r(order);
    for (size_t i = 0; i < deg; ++i) r.c_[i] = std::move(folded[i]);
    return r;
  }

  long order() const { return order_; }
  const std::vector<C>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (v != C(0)) return false;
    return true;
  }

  Cyclotomic operator+(const Cyclotomic& o) const {
    check(o);
    Cyclotomic r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
  }
  Cyclotomic operator-(const Cyclotomic& o) const {
    check(o);
    Cyclotomic r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
  }
  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  Cyclotomic operator*(const Cyclotomic& o) const {
    check(o);
    std::vector<C> raw(2 * c_.size(), C(0));
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == C(0)) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) raw[i + j] += c_[i] * o.c_[j];
    }
    // raw has exponents < 2*phi(x) < 2x; fold mod x happens in from_raw
    return from_raw(order_, std::move(raw));
  }
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }

  /// Complex conjugate (zeta -> zeta^{-1}).
  Cyclotomic conj() const {
    std::vector<C> raw(static_cast<size_t>(order_), C(0));
    for (size_t j = 0; j < c_.size(); ++j) {
      size_t e = (j == 0) ? 0 : static_cast<size_t>(order_) - j;
      raw[e] += c_[j];
    }
    return from_raw(order_, std::move(raw));
  }

  std::complex<double> to_complex() const {
    std::complex<double> z = 0;
    for (size_t j = 0; j < c_.size(); ++j) {
      double a = 2.0 * 3.14159265358979323846 * double(j) / double(order_);
      z += static_cast<double>(c_[j]) * std::complex<double>(cos(a), sin(a));
    }
    return z;
  }

  bool operator==(const Cyclotomic& o) const {
    return order_ == o.order_ && c_ == o.c_;
  }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
  bool operator<(const Cyclotomic& o) const {
    if (order_ != o.order_) return order_ < o.order_;
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
  }

 private:
  void check(const Cyclotomic& o) const {
    if (order_ != o.order_)
      throw parameter_error("cyclotomic order mismatch");
  }

  long order_;
  std::vector<C> c_;
};

using CycInt = Cyclotomic<Int>;
using CycRational = Cyclotomic<Rational>;

template <typename C>
Cyclotomic<Rational> to_cyc_rational(const Cyclotomic<C>& z) {
  std::vector<Rational> raw;
  raw.reserve(z.coeffs().size());
  for (const auto& v : z.coeffs()) raw.emplace_back(v);
  return Cyclotomic<Rational>::from_raw(z.order(), std::move(raw));
}

}  // namespace qpi
