#include "permstat/closed_forms.hpp"

#include <string>

#include "permstat/errors.hpp"

namespace permstat {

namespace {

using Q = Rational;

void require_n_at_least(long long n, long long lo, StatisticId id, MeanRegime regime) {
  if (n < lo) {
    throw DomainError(std::string(statistic_name(id)) + " (" + std::string(regime_name(regime)) +
                      "): requires n >= " + std::to_string(lo) + ", got n = " + std::to_string(n));
  }
}

void require_pair(long long n, int i, int j) {
  if (!(1 <= i && i < j && j <= n)) {
    throw DomainError("requires 1 <= i < j <= n, got (i, j) = (" + std::to_string(i) + ", " +
                      std::to_string(j) + ") with n = " + std::to_string(n));
  }
}

bool is_descent_family(StatisticId id) {
  switch (id) {
    case StatisticId::des:
    case StatisticId::maj:
    case StatisticId::inv:
    case StatisticId::baj:
    case StatisticId::baj_minus_inv:
    case StatisticId::cdes: return true;
    default: return false;
  }
}

bool is_cyclic_family(StatisticId id) {
  switch (id) {
    case StatisticId::cda:
    case StatisticId::cdd:
    case StatisticId::cv:
    case StatisticId::cpk: return true;
    default: return false;
  }
}

// n^2 - n + 2 a2 - a1^2 + a1, the numerator shared by des, maj and baj.
Q descent_numerator(const Q& n, const Q& a1, const Q& a2) {
  return n * n - n + Q(2) * a2 - a1 * a1 + a1;
}

Q general_column(StatisticId id, const Q& n, const Q& a1, const Q& a2) {
  switch (id) {
    case StatisticId::des: return descent_numerator(n, a1, a2) / (Q(2) * n);
    case StatisticId::maj: return descent_numerator(n, a1, a2) / Q(4);
    case StatisticId::inv:
      return (Q(3) * n * n - n + Q(2) * a2 - a1 * a1 + a1 - Q(2) * n * a1) / Q(12);
    case StatisticId::baj: return (n + Q(1)) * descent_numerator(n, a1, a2) / Q(12);
    case StatisticId::cdes: {
      const Q m = n - Q(1);
      return n / Q(2) + (a2 - a1 * (a1 - Q(1)) / Q(2)) / m + (a1 - Q(1)) / m;
    }
    case StatisticId::weak_exc: return (n + a1) / Q(2);
    case StatisticId::exc:
    case StatisticId::aexc: return (n - a1) / Q(2);
    case StatisticId::cda:
    case StatisticId::cdd: return (n - a1 - Q(2) * a2) / Q(6);
    case StatisticId::cv:
    case StatisticId::cpk: return (n - a1 + a2) / Q(3);
    default: break;
  }
  throw DomainError("no closed-form mean for " + std::string(statistic_name(id)));
}

Q large_parts_column(StatisticId id, const Q& n) {
  switch (id) {
    case StatisticId::des: return (n - Q(1)) / Q(2);
    case StatisticId::maj: return n * (n - Q(1)) / Q(4);
    case StatisticId::inv: return n * (Q(3) * n - Q(1)) / Q(12);
    case StatisticId::baj: return n * (n * n - Q(1)) / Q(12);
    case StatisticId::cdes: return (n + Q(1)) * (n - Q(2)) / (Q(2) * (n - Q(1)));
    case StatisticId::weak_exc:
    case StatisticId::exc:
    case StatisticId::aexc: return n / Q(2);
    case StatisticId::cda:
    case StatisticId::cdd: return n / Q(6);
    case StatisticId::cv:
    case StatisticId::cpk: return n / Q(3);
    default: break;
  }
  throw DomainError("no closed-form mean for " + std::string(statistic_name(id)));
}

Q ones_twos_column(StatisticId id, const Q& n, const Q& a1, const Q& a2) {
  switch (id) {
    case StatisticId::des: return (n * n - a1 * a1) / (Q(2) * n);
    case StatisticId::maj: return (n * n - a1 * a1) / Q(4);
    case StatisticId::inv: return (Q(3) * n + a1) * (n - a1) / Q(12);
    case StatisticId::baj: return (n + Q(1)) * (n * n - a1 * a1) / Q(12);
    case StatisticId::cdes:
      return (n * n - a1 * a1 + Q(2) * a1 - Q(2)) / (Q(2) * (n - Q(1)));
    case StatisticId::weak_exc: return a1 + a2;
    case StatisticId::exc:
    case StatisticId::aexc: return a2;
    case StatisticId::cda:
    case StatisticId::cdd: return Q(0);
    case StatisticId::cv:
    case StatisticId::cpk: return a2;
    default: break;
  }
  throw DomainError("no closed-form mean for " + std::string(statistic_name(id)));
}

Q twos_column(StatisticId id, const Q& n, const Q& a2) {
  switch (id) {
    case StatisticId::des: return n / Q(2);
    case StatisticId::maj: return n * n / Q(4);
    case StatisticId::inv: return n * n / Q(4);
    case StatisticId::baj: return n * n * (n + Q(1)) / Q(12);
    case StatisticId::cdes: return (n * n - Q(2)) / (Q(2) * (n - Q(1)));
    case StatisticId::weak_exc:
    case StatisticId::exc:
    case StatisticId::aexc: return a2;
    case StatisticId::cda:
    case StatisticId::cdd: return Q(0);
    case StatisticId::cv:
    case StatisticId::cpk: return a2;
    default: break;
  }
  throw DomainError("no closed-form mean for " + std::string(statistic_name(id)));
}

Q whole_group_column(StatisticId id, const Q& n) {
  switch (id) {
    case StatisticId::des: return (n - Q(1)) / Q(2);
    case StatisticId::maj:
    case StatisticId::inv: return (n * n - n) / Q(4);
    case StatisticId::baj: return n * (n * n - Q(1)) / Q(12);
    case StatisticId::cdes: return n / Q(2);
    case StatisticId::weak_exc: return (n + Q(1)) / Q(2);
    case StatisticId::exc:
    case StatisticId::aexc: return (n - Q(1)) / Q(2);
    case StatisticId::cda:
    case StatisticId::cdd: return (n - Q(2)) / Q(6);
    case StatisticId::cv:
    case StatisticId::cpk: return (Q(2) * n - Q(1)) / Q(6);
    default: break;
  }
  throw DomainError("no closed-form mean for " + std::string(statistic_name(id)));
}

Q column(StatisticId id, MeanRegime regime, const Q& n, const Q& a1, const Q& a2) {
  switch (regime) {
    case MeanRegime::general: return general_column(id, n, a1, a2);
    case MeanRegime::large_parts: return large_parts_column(id, n);
    case MeanRegime::ones_twos: return ones_twos_column(id, n, a1, a2);
    case MeanRegime::twos: return twos_column(id, n, a2);
    case MeanRegime::whole_group: return whole_group_column(id, n);
  }
  throw DomainError("unknown regime");
}

// Pr[w(i) > w(j)] = base + (j - i - 1) * slope on any class.
Q inversion_base(const Q& n, const Q& a1, const Q& a2) {
  return Q(1, 2) + a2 / (n * (n - Q(1))) - a1 * (a1 - Q(1)) / (Q(2) * n * (n - Q(1)));
}

Q inversion_slope(const Q& n, const Q& a1, const Q& a2) {
  return (n - n * a1 - a1 + a1 * a1 - Q(2) * a2) / (n * (n - Q(1)) * (n - Q(2)));
}

}  // namespace

std::string_view regime_name(MeanRegime regime) {
  switch (regime) {
    case MeanRegime::general: return "general";
    case MeanRegime::large_parts: return "large_parts";
    case MeanRegime::ones_twos: return "ones_twos";
    case MeanRegime::twos: return "twos";
    case MeanRegime::whole_group: return "whole_group";
  }
  return "?";
}

bool has_mean_formula(StatisticId id) {
  return id != StatisticId::ile && id != StatisticId::den && id != StatisticId::fix;
}

Rational MeanFormula::evaluate(long long n, long long a1, long long a2) const {
  if (!has_mean_formula(statistic)) {
    throw DomainError("no closed-form mean for " + std::string(statistic_name(statistic)));
  }
  require_n_at_least(n, 1, statistic, regime);
  if (is_descent_family(statistic)) require_n_at_least(n, 2, statistic, regime);
  if (regime == MeanRegime::large_parts) require_n_at_least(n, 3, statistic, regime);
  if (regime == MeanRegime::whole_group && is_cyclic_family(statistic)) {
    require_n_at_least(n, 2, statistic, regime);
  }
  if (statistic == StatisticId::baj_minus_inv) {
    return MeanFormula{StatisticId::baj, regime}.evaluate(n, a1, a2) -
           MeanFormula{StatisticId::inv, regime}.evaluate(n, a1, a2);
  }
  return column(statistic, regime, Q(n), Q(a1), Q(a2));
}

Rational table1_mean(StatisticId id, const Partition& lambda) {
  return MeanFormula{id, MeanRegime::general}.evaluate(lambda.n(), lambda.part_count(1),
                                                       lambda.part_count(2));
}

Rational whole_group_mean(StatisticId id, long long n) {
  return MeanFormula{id, MeanRegime::whole_group}.evaluate(n, 0, 0);
}

Rational cdes_mean_three_term(long long n, long long a1, long long a2) {
  return MeanFormula{StatisticId::cdes, MeanRegime::general}.evaluate(n, a1, a2);
}

Rational cdes_mean_single_fraction(long long n, long long a1, long long a2) {
  require_n_at_least(n, 2, StatisticId::cdes, MeanRegime::general);
  const Q qn(n), q1(a1), q2(a2);
  return (qn * qn - qn + Q(2) * q2 - q1 * q1 + Q(3) * q1 - Q(2)) / (Q(2) * (qn - Q(1)));
}

Rational OmegaProbabilities::sum() const {
  Rational total;
  for (const auto& x : p) total += x;
  return total;
}

OmegaProbabilities omega_partition_probs(const Partition& lambda, int i, int j) {
  const long long n = lambda.n();
  if (n < 2) throw DomainError("omega_partition_probs: requires n >= 2");
  require_pair(n, i, j);
  const Q qn(n), a1(lambda.part_count(1)), a2(lambda.part_count(2));
  OmegaProbabilities out;
  out.p[1] = Q(2) * a2 / (qn * (qn - Q(1)));
  out.p[2] = a1 * (a1 - Q(1)) / (qn * (qn - Q(1)));
  out.p[3] = Q(2) / (qn - Q(1)) * (Q(1) - a1 / qn - Q(2) * a2 / qn);
  out.p[4] = Q(2) * a1 / qn * (Q(1) - (a1 - Q(1)) / (qn - Q(1)));
  out.p[0] = Q(1) - (out.p[1] + out.p[2] + out.p[3] + out.p[4]);
  return out;
}

int omega_cell(const Permutation& w, int i, int j) {
  require_pair(w.n(), i, j);
  const int wi = w(i);
  const int wj = w(j);
  if (wi == j && wj == i) return 2;
  if (wi == i && wj == j) return 3;
  if (wi == j || wj == i) return 4;
  if (wi == i || wj == j) return 5;
  return 1;
}

std::array<Rational, 5> conditional_inversion_probs(long long n, int i, int j) {
  if (n < 3) throw DomainError("conditional_inversion_probs: requires n >= 3 (divides by n - 2)");
  require_pair(n, i, j);
  const Q shift = Q(j - i - 1) / Q(2 * (n - 2));
  return {Q(1, 2), Q(1), Q(0), Q(1, 2) + shift, Q(1, 2) - shift};
}

Rational inversion_indicator_prob(const Partition& lambda, int i, int j) {
  const long long n = lambda.n();
  if (n < 3) throw DomainError("inversion_indicator_prob: requires n >= 3");
  require_pair(n, i, j);
  const Q qn(n), a1(lambda.part_count(1)), a2(lambda.part_count(2));
  return inversion_base(qn, a1, a2) + Q(j - i - 1) * inversion_slope(qn, a1, a2);
}

Rational inversion_indicator_prob_by_cells(const Partition& lambda, int i, int j) {
  const auto cells = omega_partition_probs(lambda, i, j);
  const auto cond = conditional_inversion_probs(lambda.n(), i, j);
  Rational total;
  for (std::size_t k = 0; k < 5; ++k) total += cells.p[k] * cond[k];
  return total;
}

WeightFunction WeightFunction::des(int n) {
  WeightFunction wt(n);
  for (int i = 1; i < n; ++i) wt.set(i, i + 1, 1);
  return wt;
}

WeightFunction WeightFunction::maj(int n) {
  WeightFunction wt(n);
  for (int i = 1; i < n; ++i) wt.set(i, i + 1, i);
  return wt;
}

WeightFunction WeightFunction::inv(int n) {
  WeightFunction wt(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) wt.set(i, j, 1);
  }
  return wt;
}

WeightFunction WeightFunction::baj(int n) {
  WeightFunction wt(n);
  for (int i = 1; i < n; ++i) wt.set(i, i + 1, static_cast<long long>(i) * (n - i));
  return wt;
}

void WeightFunction::set(int i, int j, const Rational& weight) {
  require_pair(n_, i, j);
  if (weight.is_zero()) {
    weights_.erase({i, j});
  } else {
    weights_[{i, j}] = weight;
  }
}

Rational WeightFunction::at(int i, int j) const {
  const auto it = weights_.find({i, j});
  return it == weights_.end() ? Rational() : it->second;
}

Rational WeightFunction::alpha() const {
  Rational total;
  for (const auto& [pair, weight] : weights_) total += weight;
  return total;
}

Rational WeightFunction::beta() const {
  Rational total;
  for (const auto& [pair, weight] : weights_) total += Rational(pair.second - pair.first - 1) * weight;
  return total;
}

Rational WeightFunction::evaluate(const Permutation& w) const {
  if (w.n() != n_) throw DomainError("weight function and permutation sizes differ");
  Rational total;
  for (const auto& [pair, weight] : weights_) {
    if (w(pair.first) > w(pair.second)) total += weight;
  }
  return total;
}

Rational weighted_inversion_mean(const Partition& lambda, const WeightFunction& wt) {
  const long long n = lambda.n();
  if (n < 3) throw DomainError("weighted_inversion_mean: requires n >= 3");
  if (wt.n() != n) throw DomainError("weight function and partition sizes differ");
  const Q qn(n), a1(lambda.part_count(1)), a2(lambda.part_count(2));
  return inversion_base(qn, a1, a2) * wt.alpha() + inversion_slope(qn, a1, a2) * wt.beta();
}

SecondMoment exc_second_moment_and_variance(const Partition& lambda) {
  const Q n(lambda.n()), a1(lambda.part_count(1)), a2(lambda.part_count(2));
  const Q cv_mean = (n - a1 + a2) / Q(3);
  return {(n - a1) * (n - a1 + Q(1)) / Q(4) - cv_mean / Q(2), (n - a1 - Q(2) * a2) / Q(12)};
}

SecondMoment whole_group_exc_second_moment(long long n) {
  if (n < 2) throw DomainError("whole_group_exc_second_moment: requires n >= 2");
  const Q qn(n);
  return {(Q(3) * qn * qn - Q(5) * qn + Q(4)) / Q(12), (qn + Q(1)) / Q(12)};
}

ZIdentitySums verify_z_identities(int n) {
  if (n < 2) throw DomainError("verify_z_identities: requires n >= 2");
  ZIdentitySums sums;
  for_each_partition(n, 1, [&](const Partition& lambda) {
    const Rational w(BigInt(1), z_lambda(lambda));
    const Rational a1(lambda.part_count(1));
    sums.inverse_z += w;
    sums.a1 += w * a1;
    sums.a1_squared += w * a1 * a1;
    sums.a2 += w * Rational(lambda.part_count(2));
  });
  return sums;
}

Rational decomposition_residual(StatisticId id, int n) {
  Rational total;
  for_each_partition(n, 1, [&](const Partition& lambda) {
    total += table1_mean(id, lambda) / Rational(z_lambda(lambda));
  });
  return total - whole_group_mean(id, n);
}

}  // namespace permstat
