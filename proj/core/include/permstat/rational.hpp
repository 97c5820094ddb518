#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace permstat {

using BigInt = mpz_class;

/// Exact fraction in lowest terms with a positive denominator.
///
/// Every probability and moment in the library is a Rational; nothing in the
/// engine goes through floating point. The text form is "p/q", or just "p"
/// when the denominator is 1.
class Rational {
public:
  Rational() = default;
  Rational(long long value);  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value);
  /// Throws DomainError when `den` is zero.
  Rational(const BigInt& num, const BigInt& den);
  Rational(long long num, long long den);

  /// Accepts "p", "-p", "p/q" (surrounding whitespace allowed).
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Rational pow(unsigned exponent) const;
  Rational abs() const;

  std::string to_string() const;
  /// Approximate value; for display only.
  double to_double() const { return value_.get_d(); }

  const mpq_class& raw() const { return value_; }

private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n! as a big integer. Throws DomainError for negative n.
BigInt factorial(long long n);

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigInt binomial(long long n, long long k);

/// Falling factorial n (n-1) ... (n-count+1); one when count is zero.
BigInt falling_factorial(long long n, long long count);

}  // namespace permstat
