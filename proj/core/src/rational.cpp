#include "sl2dirac/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "sl2dirac/errors.hpp"

namespace sl2dirac {

Rational::Rational(long long num, long long den)
    : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "rational with zero denominator");
  }
  value_ = boost::multiprecision::cpp_rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "division by zero");
  }
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) return false;
  BigInt v = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    v = v * 10 + (text[i] - '0');
  }
  out = negative ? BigInt(-v) : v;
  return true;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  BigInt num;
  BigInt den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) return std::nullopt;
  } else {
    if (!parse_integer(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_integer(text.substr(slash + 1), den)) return std::nullopt;
    if (den.is_zero()) return std::nullopt;
  }
  return Rational(num, den);
}

std::string Rational::str() const {
  std::ostringstream os;
  os << numerator();
  if (!is_integer()) os << '/' << denominator();
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace sl2dirac
