#include "permstat/rational.hpp"

#include <cctype>
#include <ostream>

#include "permstat/errors.hpp"

namespace permstat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) {
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  }
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return BigInt(digits, 10);
}

}  // namespace

Rational::Rational(long long value) : value_(BigInt(static_cast<long>(value))) {
  static_assert(sizeof(long) == sizeof(long long), "LP64 assumed for gmp conversions");
}

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(long long num, long long den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  BigInt num = parse_integer(s.substr(0, slash), text);
  BigInt den = parse_integer(s.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::pow(unsigned exponent) const {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(num, den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt factorial(long long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt falling_factorial(long long n, long long count) {
  BigInt out = 1;
  for (long long i = 0; i < count; ++i) out *= BigInt(static_cast<long>(n - i));
  return out;
}

}  // namespace permstat
