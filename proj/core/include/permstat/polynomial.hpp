#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "permstat/rational.hpp"

namespace permstat {

/// Dense univariate polynomial in n over the rationals.
///
/// coefficients()[i] is the coefficient of n^i. Trailing zero coefficients
/// are always trimmed, so the zero polynomial has no coefficients and
/// degree() == -1.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  /// The constant polynomial c.
  static Polynomial constant(const Rational& c);
  /// n - root
  static Polynomial linear_factor(const Rational& root);
  /// The monomial n.
  static Polynomial identity();

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(int power) const;
  Rational leading_coefficient() const;

  Rational operator()(long long n) const { return evaluate(Rational(n)); }
  Rational evaluate(const Rational& n) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form, highest power first: "1/16 n^4 - 1/72 n^3 - 49/360 n".
  std::string to_string() const;

private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Evaluates p at integer n exactly.
inline Rational poly_eval(const Polynomial& p, long long n) { return p(n); }

struct InterpolationNode {
  long long n;
  Rational value;
};

/// Unique polynomial of degree < points.size() through every node.
/// Throws DomainError on an empty node list or repeated nodes.
Polynomial lagrange_interpolate(std::span<const InterpolationNode> points);

}  // namespace permstat
