#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace fuselab {

namespace detail {

inline int prime_of_prime_power(int m) {
  // m = p^a with a >= 1, or m = 1 (returns 0)
  if (m == 1) return 0;
  int p = 0;
  for (int d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = m;
  int n = m;
  while (n % p == 0) n /= p;
  input_check(n == 1, "cyclotomic order must be a prime power, got " + std::to_string(m));
  return p;
}

inline int phi_prime_power(int m, int p) {
  if (m == 1) return 1;
  return m - m / p;  // phi(p^a) = p^a - p^{a-1}
}

}  // namespace detail

// Element of Q(zeta_m) for a prime-power m, stored exactly on the power basis
// zeta^0 .. zeta^{phi(m)-1}. Exponents at or above phi(m) are rewritten with
// the minimal polynomial of zeta_m (for m = p^a:
// zeta^{(p-1)p^{a-1} + r} = -(zeta^r + zeta^{p^{a-1}+r} + ... )), so the
// coefficient vector is a canonical form and equality is coefficient equality.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), prime_(0), coeffs_(1) {}

  static Cyclotomic rational(const Rational& r) {
    Cyclotomic c;
    c.coeffs_[0] = r;
    return c;
  }

  static Cyclotomic zero() { return Cyclotomic(); }
  static Cyclotomic one() { return rational(Rational(1)); }

  static Cyclotomic root_of_unity(int order, std::int64_t exponent) {
    Cyclotomic c = blank(order);
    c.accumulate_root(exponent, Rational(1));
    return c;
  }

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return false;
    return true;
  }

  Rational as_rational() const {
    internal_check(is_rational(), "cyclotomic value used where a rational is required");
    return coeffs_[0];
  }

  // reinterpret in Q(zeta_M) for m | M (same prime, or from order 1)
  Cyclotomic promoted(int new_order) const {
    if (new_order == order_) return *this;
    internal_check(new_order % order_ == 0, "cyclotomic promotion to a non-multiple order");
    Cyclotomic out = blank(new_order);
    internal_check(order_ == 1 || out.prime_ == prime_,
                   "cyclotomic promotion across different primes");
    const std::int64_t f = new_order / order_;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) out.accumulate_root(static_cast<std::int64_t>(i) * f, coeffs_[i]);
    return out;
  }

  Cyclotomic operator+(const Cyclotomic& o) const {
    auto [a, b] = common(*this, o);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
  }

  Cyclotomic operator-(const Cyclotomic& o) const {
    auto [a, b] = common(*this, o);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
    return a;
  }

  Cyclotomic operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  Cyclotomic operator*(const Cyclotomic& o) const {
    auto [a, b] = common(*this, o);
    Cyclotomic out = blank(a.order_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        out.accumulate_root(static_cast<std::int64_t>(i + j), a.coeffs_[i] * b.coeffs_[j]);
      }
    }
    return out;
  }

  Cyclotomic operator*(const Rational& r) const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c *= r;
    return out;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }

  // complex conjugate: zeta -> zeta^{-1}
  Cyclotomic conj() const {
    Cyclotomic out = blank(order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero())
        out.accumulate_root((order_ - static_cast<std::int64_t>(i)) % order_, coeffs_[i]);
    return out;
  }

  bool operator==(const Cyclotomic& o) const {
    auto [a, b] = common(*this, o);
    return a.coeffs_ == b.coeffs_;
  }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // total order used for canonical sorts; -1 / 0 / +1
  static int compare(const Cyclotomic& x, const Cyclotomic& y) {
    auto [a, b] = common(x, y);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] < b.coeffs_[i]) return -1;
      if (b.coeffs_[i] < a.coeffs_[i]) return 1;
    }
    return 0;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) s += ",";
      s += coeffs_[i].str();
    }
    return s + "]@" + std::to_string(order_);
  }

 private:
  static Cyclotomic blank(int order) {
    input_check(order >= 1, "cyclotomic order must be positive");
    Cyclotomic c;
    c.order_ = order;
    c.prime_ = detail::prime_of_prime_power(order);
    c.coeffs_.assign(detail::phi_prime_power(order, c.prime_), Rational(0));
    return c;
  }

  // add coeff * zeta^exponent, rewriting exponents outside the power basis
  void accumulate_root(std::int64_t exponent, const Rational& coeff) {
    std::int64_t e = exponent % order_;
    if (e < 0) e += order_;
    const int phi = static_cast<int>(coeffs_.size());
    if (e < phi) {
      coeffs_[static_cast<std::size_t>(e)] += coeff;
      return;
    }
    // e = (p-1) p^{a-1} + r with 0 <= r < p^{a-1}
    const int pa1 = order_ / prime_;
    const std::int64_t r = e - static_cast<std::int64_t>(prime_ - 1) * pa1;
    internal_check(r >= 0 && r < pa1, "cyclotomic exponent reduction out of range");
    for (int j = 0; j <= prime_ - 2; ++j)
      coeffs_[static_cast<std::size_t>(j) * pa1 + r] -= coeff;
  }

  static std::pair<Cyclotomic, Cyclotomic> common(const Cyclotomic& x, const Cyclotomic& y) {
    if (x.order_ == y.order_) return {x, y};
    if (x.order_ % y.order_ == 0) return {x, y.promoted(x.order_)};
    if (y.order_ % x.order_ == 0) return {x.promoted(y.order_), y};
    throw InternalError("cyclotomic values of incompatible orders " + std::to_string(x.order_) +
                        " and " + std::to_string(y.order_));
  }

  int order_;
  int prime_;
  std::vector<Rational> coeffs_;
};

}  // namespace fuselab
