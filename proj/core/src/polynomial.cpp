#include "permstat/polynomial.hpp"

#include <set>
#include <sstream>

#include "permstat/errors.hpp"

namespace permstat {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::linear_factor(const Rational& root) { return Polynomial({-root, 1}); }

Polynomial Polynomial::identity() { return Polynomial({0, 1}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational Polynomial::leading_coefficient() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::evaluate(const Rational& n) const {
  // Horner
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= n;
    acc += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int power = degree(); power >= 0; --power) {
    const Rational& c = coeffs_[static_cast<std::size_t>(power)];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (power == 0) {
      os << mag;
    } else {
      if (!unit) os << mag << " ";
      os << "n";
      if (power > 1) os << "^" << power;
    }
  }
  return os.str();
}

Polynomial lagrange_interpolate(std::span<const InterpolationNode> points) {
  if (points.empty()) throw DomainError("interpolation needs at least one point");
  std::set<long long> seen;
  for (const auto& p : points) {
    if (!seen.insert(p.n).second) {
      throw DomainError("duplicate interpolation node n=" + std::to_string(p.n));
    }
  }

  Polynomial result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Polynomial basis = Polynomial::constant(1);
    Rational denom = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis *= Polynomial::linear_factor(Rational(points[j].n));
      denom *= Rational(points[i].n - points[j].n);
    }
    result += basis * (points[i].value / denom);
  }
  return result;
}

}  // namespace permstat
