#pragma once

// Exact rationals over 64-bit integers, kept in lowest terms with a positive denominator.

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "otsalg/error.hpp"

namespace otsalg {

class Rational {
 public:
  Rational(std::int64_t n = 0, std::int64_t d = 1) : num_(n), den_(d) {
    if (den_ == 0) throw InvalidArgument("zero denominator");
    normalize();
  }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    std::int64_t g = std::gcd(a.den_, b.den_);
    std::int64_t l = mul(a.den_ / g, b.den_);
    return Rational(add(mul(a.num_, l / a.den_), mul(b.num_, l / b.den_)), l);
  }
  friend Rational operator-(const Rational& a) { return Rational(mul(a.num_, -1), a.den_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    // Cross-cancel first to keep intermediates small.
    std::int64_t g1 = std::gcd(a.num_, b.den_), g2 = std::gcd(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return Rational(mul(a.num_ / g1, b.num_ / g2), mul(a.den_ / g2, b.den_ / g1));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw InvalidArgument("division by zero");
    return a * Rational(b.den_, b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num_;
    if (r.den_ != 1) os << "/" << r.den_;
    return os;
  }

 private:
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
    return r;
  }
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
    return r;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = mul(num_, -1);
      den_ = mul(den_, -1);
    }
    std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace otsalg
