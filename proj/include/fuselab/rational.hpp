#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace fuselab {

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InternalError("64-bit overflow (add)");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw InternalError("64-bit overflow (sub)");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InternalError("64-bit overflow (mul)");
  return r;
}

}  // namespace checked

// Exact rational over checked 64-bit integers, always reduced, denominator > 0.
// Scale argument: every quantity in this library is bounded by small powers of
// |S| <= 512, so a trapped overflow signals a bug rather than a size problem.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    input_check(d != 0, "rational with zero denominator");
    reduce();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  std::int64_t as_integer() const {
    internal_check(den_ == 1, "rational " + str() + " used where an integer is required");
    return num_;
  }

  Rational operator-() const { return Rational(checked::sub(0, num_), den_, already_reduced{}); }

  Rational operator+(const Rational& o) const {
    std::int64_t g = std::gcd(den_, o.den_);
    std::int64_t l = checked::mul(den_ / g, o.den_);
    std::int64_t n = checked::add(checked::mul(num_, o.den_ / g), checked::mul(o.num_, den_ / g));
    return Rational(n, l);
  }

  Rational operator-(const Rational& o) const { return *this + (-o); }

  Rational operator*(const Rational& o) const {
    // cross-reduce first to keep intermediates small
    std::int64_t g1 = std::gcd(std::abs(num_), o.den_);
    std::int64_t g2 = std::gcd(std::abs(o.num_), den_);
    std::int64_t n = checked::mul(num_ / g1, o.num_ / g2);
    std::int64_t d = checked::mul(den_ / g2, o.den_ / g1);
    return Rational(n, d, already_reduced{});
  }

  Rational operator/(const Rational& o) const {
    input_check(o.num_ != 0, "division by zero rational");
    Rational inv = o.num_ > 0 ? Rational(o.den_, o.num_, already_reduced{})
                              : Rational(checked::sub(0, o.den_), checked::sub(0, o.num_), already_reduced{});
    return *this * inv;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  bool operator<(const Rational& o) const {
    // exact compare via 128-bit cross products
    return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
  }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  struct already_reduced {};
  Rational(std::int64_t n, std::int64_t d, already_reduced) : num_(n), den_(d) {}

  void reduce() {
    if (den_ < 0) {
      num_ = checked::sub(0, num_);
      den_ = checked::sub(0, den_);
    }
    std::int64_t g = std::gcd(std::abs(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace fuselab
