#pragma once

// Exact arbitrary-precision rational arithmetic. Every point coordinate and
// map parameter in the library is a Rational; there is no floating-point mode.

#include <boost/multiprecision/cpp_int.hpp>

#include <iostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semiflow {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}

  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const { return Rational(-num_, den_, tag_canonical{}); }

  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return num_ * o.den_ < o.num_ * den_;
  }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  Rational abs() const {
    return num_ < 0 ? Rational(-num_, den_, tag_canonical{}) : *this;
  }

  // Largest integer <= num/den (denominator is always positive).
  BigInt floor() const {
    BigInt q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
  }

  // Fractional part in [0, 1); used to wrap circle angles.
  Rational frac() const { return *this - Rational(floor()); }

  // "a" when integral, "a/b" otherwise.
  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  // Accepts "a" or "a/b" with an optional leading sign.
  static Rational parse(std::string_view s) {
    auto bad = [&] {
      throw std::invalid_argument("Rational: cannot parse '" + std::string(s) +
                                  "'");
    };
    auto slash = s.find('/');
    std::string_view ns = s.substr(0, slash);
    if (!valid_int(ns)) bad();
    BigInt n{std::string(ns)};
    if (slash == std::string_view::npos) return Rational(std::move(n));
    std::string_view ds = s.substr(slash + 1);
    if (!valid_int(ds) || ds.front() == '-') bad();
    BigInt d{std::string(ds)};
    if (d == 0) bad();
    return Rational(std::move(n), std::move(d));
  }

 private:
  struct tag_canonical {};
  Rational(BigInt n, BigInt d, tag_canonical)
      : num_(std::move(n)), den_(std::move(d)) {}

  static bool valid_int(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  BigInt num_;
  BigInt den_;  // > 0
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace semiflow
