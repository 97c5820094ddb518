#pragma once

#include <array>
#include <map>
#include <string_view>
#include <utility>

#include "permstat/partition.hpp"
#include "permstat/permutation.hpp"
#include "permstat/rational.hpp"
#include "permstat/statistics.hpp"

namespace permstat {

/// Which family of classes a first-moment formula covers.
enum class MeanRegime {
  general,      // any lambda = (1^{a1} 2^{a2} ...)
  large_parts,  // every part >= 3 (a1 = a2 = 0)
  ones_twos,    // lambda = (1^{a1} 2^{a2})
  twos,         // lambda = (2^{a2})
  whole_group,  // uniform on all of S_n
};

std::string_view regime_name(MeanRegime regime);

/// A first-moment formula for one statistic in one regime, as an exact
/// function of (n, a1, a2). Arguments outside the regime are not rejected
/// (regimes are compared on their overlaps), but the statistic's domain
/// guards on n are.
struct MeanFormula {
  StatisticId statistic;
  MeanRegime regime;

  /// Throws DomainError naming the guard when n is out of range, or when the
  /// statistic has no formula.
  Rational evaluate(long long n, long long a1, long long a2) const;
};

/// Statistics with a first-moment formula.
bool has_mean_formula(StatisticId id);

/// Exact E_lambda[X] from the general-lambda column.
Rational table1_mean(StatisticId id, const Partition& lambda);

/// Exact E_{S_n}[X].
Rational whole_group_mean(StatisticId id, long long n);

/// E_lambda[cdes] as the three-term sum
/// n/2 + (a2 - C(a1,2))/(n-1) + (a1-1)/(n-1).
Rational cdes_mean_three_term(long long n, long long a1, long long a2);
/// The same mean written over one denominator:
/// (n^2 - n + 2 a2 - a1^2 + 3 a1 - 2) / (2 (n - 1)).
Rational cdes_mean_single_fraction(long long n, long long a1, long long a2);

/// Probabilities of the five cells Omega_1..Omega_5 that split C_lambda by
/// how w(i), w(j) meet {i, j}:
///   1: w(i), w(j) both outside {i, j}      2: w(i) = j and w(j) = i
///   3: w(i) = i and w(j) = j               4: exactly one of w(i) = j, w(j) = i
///   5: exactly one of w(i) = i, w(j) = j
/// p[0] (Omega_1) is the complement of the other four.
struct OmegaProbabilities {
  std::array<Rational, 5> p;
  Rational sum() const;
};
OmegaProbabilities omega_partition_probs(const Partition& lambda, int i, int j);

/// Index 1..5 of the Omega cell containing w for the pair (i, j).
int omega_cell(const Permutation& w, int i, int j);

/// Pr[(i, j) is an inversion | w in Omega_k], k = 1..5. Requires n >= 3.
std::array<Rational, 5> conditional_inversion_probs(long long n, int i, int j);

/// Pr_lambda[w(i) > w(j)] from the closed form. Requires n >= 3, i < j.
Rational inversion_indicator_prob(const Partition& lambda, int i, int j);

/// Same probability assembled by total probability over the Omega cells;
/// an independent route used to cross-check the closed form.
Rational inversion_indicator_prob_by_cells(const Partition& lambda, int i, int j);

/// Rational weights wt(i, j) on position pairs 1 <= i < j <= n.
class WeightFunction {
public:
  explicit WeightFunction(int n) : n_(n) {}

  static WeightFunction des(int n);
  static WeightFunction maj(int n);
  static WeightFunction inv(int n);
  static WeightFunction baj(int n);

  int n() const { return n_; }
  /// Throws DomainError unless 1 <= i < j <= n. A zero weight erases the entry.
  void set(int i, int j, const Rational& weight);
  Rational at(int i, int j) const;
  const std::map<std::pair<int, int>, Rational>& entries() const { return weights_; }

  /// alpha = sum of wt(i, j)
  Rational alpha() const;
  /// beta = sum of (j - i - 1) wt(i, j)
  Rational beta() const;

  /// sum of wt(i, j) [w(i) > w(j)]
  Rational evaluate(const Permutation& w) const;

private:
  int n_;
  std::map<std::pair<int, int>, Rational> weights_;
};

/// E_lambda of the weighted inversion statistic defined by `wt`; depends on
/// lambda only through n, a1, a2. Requires n >= 3.
Rational weighted_inversion_mean(const Partition& lambda, const WeightFunction& wt);

struct SecondMoment {
  Rational second_moment;
  Rational variance;
};

/// E_lambda[exc^2] = (n-a1)(n-a1+1)/4 - E_lambda[cv]/2 and the variance
/// (n - a1 - 2 a2)/12.
SecondMoment exc_second_moment_and_variance(const Partition& lambda);

/// E_{S_n}[exc^2] = (3n^2 - 5n + 4)/12 and Var = (n+1)/12, the z-weighted
/// average of the class second moments. Requires n >= 2.
SecondMoment whole_group_exc_second_moment(long long n);

/// Sums over lambda |- n of z^{-1}, z^{-1} a1, z^{-1} a1^2, z^{-1} a2.
struct ZIdentitySums {
  Rational inverse_z;
  Rational a1;
  Rational a1_squared;
  Rational a2;
};
ZIdentitySums verify_z_identities(int n);

/// sum_{lambda |- n} z^{-1} table1_mean(id, lambda) - whole_group_mean(id, n).
Rational decomposition_residual(StatisticId id, int n);

}  // namespace permstat
