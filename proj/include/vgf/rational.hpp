#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <string>
#include <utility>

#include "vgf/errors.hpp"

namespace vgf {

using Int = boost::multiprecision::cpp_int;

/* Exact rational number.  Always stored reduced with positive denominator,
   so equality is plain field comparison and serialization is canonical. */
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long n) : num_(n), den_(1) {}  // NOLINT: implicit by design, Eigen needs Scalar(0)/Scalar(1)
  Rational(Int n) : num_(std::move(n)), den_(1) {}
  Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw DivisionByZeroError("rational with zero denominator");
    normalize();
  }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  /* Parses "a" or "a/b" in decimal.  Inverse of to_string on canonical text. */
  static Rational from_string(const std::string& text);
  std::string to_string() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DivisionByZeroError("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r(*this);
    r.num_ = -r.num_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  Rational inverse() const {
    if (num_ == 0) throw DivisionByZeroError("inverse of zero");
    return Rational(den_, num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  Int num_;
  Int den_;
};

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

inline Rational Rational::from_string(const std::string& text) {
  auto parse_int = [](const std::string& s) -> Int {
    if (s.empty()) throw ParseError("empty integer in rational literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ParseError("sign without digits in rational literal");
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw ParseError("invalid character in rational literal: '" + s + "'");
    return Int(s);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in rational literal: '" + text + "'");
  return Rational(std::move(num), std::move(den));
}

}  // namespace vgf
