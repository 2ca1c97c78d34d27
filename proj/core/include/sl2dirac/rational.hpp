#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace sl2dirac {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always reduced, denominator always positive,
/// arithmetic never rounds. Backed by an arbitrary-precision integer type so
/// that long elimination chains cannot overflow.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long long n) : value_(n) {}  // NOLINT: implicit by design
  Rational(const BigInt& n) : value_(n) {}
  Rational(long long num, long long den);
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "p" or "p/q" with optional sign; rejects zero denominators.
  static std::optional<Rational> parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const {
    return boost::multiprecision::denominator(value_);
  }

  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.value_ != b.value_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.value_ <= b.value_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.value_ > b.value_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.value_ >= b.value_;
  }

  /// "p" when integral, "p/q" otherwise.
  std::string str() const;

 private:
  boost::multiprecision::cpp_rational value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace sl2dirac
