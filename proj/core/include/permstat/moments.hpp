#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>

#include "permstat/partition.hpp"
#include "permstat/polynomial.hpp"
#include "permstat/rational.hpp"
#include "permstat/statistics.hpp"

namespace permstat {

/// Largest number of permutations an exhaustive scan may visit: the value of
/// PERMSTAT_ENUM_BUDGET when set to a positive integer, else 10^7.
std::uint64_t default_enumeration_budget();

struct EnumerationOptions {
  unsigned jobs = 1;
  std::uint64_t budget = default_enumeration_budget();
};

/// Throws BudgetExceeded (carrying the count) when `count` exceeds the budget.
void check_budget(const BigInt& count, std::uint64_t budget, std::string_view what);

/// value -> number of permutations; exact counts, no binning.
using Histogram = std::map<long long, std::uint64_t>;
using JointHistogram = std::map<std::pair<long long, long long>, std::uint64_t>;

Histogram distribution_class(StatisticId id, const Partition& lambda, const EnumerationOptions& options = {});
Histogram distribution_sn(StatisticId id, int n, const EnumerationOptions& options = {});

JointHistogram joint_distribution_class(StatisticId x, StatisticId y, const Partition& lambda,
                                        const EnumerationOptions& options = {});
JointHistogram joint_distribution_sn(StatisticId x, StatisticId y, int n,
                                     const EnumerationOptions& options = {});

/// (sum of count * value^k) / (sum of count).
Rational histogram_moment(const Histogram& hist, unsigned k);
/// E[X^2] - E[X]^2 of the histogram.
Rational histogram_variance(const Histogram& hist);

/// (1/|C_lambda|) sum over C_lambda of X(w)^k by enumeration.
Rational exact_moment_class(StatisticId id, const Partition& lambda, unsigned k,
                            const EnumerationOptions& options = {});
/// (1/n!) sum over S_n of X(w)^k by enumeration.
Rational exact_moment_sn(StatisticId id, int n, unsigned k, const EnumerationOptions& options = {});

enum class Method { enumeration, constraint_sum, closed_form, monte_carlo };
std::string_view method_name(Method m);
/// Accepts the names above plus the CLI spellings "enumerate" and "closed-form".
Method parse_method(std::string_view text);

struct MomentReport {
  StatisticId statistic = StatisticId::inv;
  /// Set for a class query; empty for the whole group S_n.
  std::optional<Partition> lambda;
  int n = 0;
  unsigned k = 1;
  Rational value;
  Method method = Method::enumeration;
  // Monte Carlo only.
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  /// Unbiased sample variance of X^k, exact.
  std::optional<Rational> sample_variance;
  /// sqrt(sample_variance / samples); approximate.
  std::optional<double> standard_error;

  friend bool operator==(const MomentReport&, const MomentReport&) = default;
};

/// Samples are drawn in fixed chunks of kMonteCarloChunk; chunk c uses an
/// engine seeded with derive_seed(seed, c). Chunk sums are exact integers,
/// so the report is identical for any number of workers.
inline constexpr std::uint64_t kMonteCarloChunk = 4096;

MomentReport monte_carlo_moment(StatisticId id, const Partition& lambda, unsigned k, std::uint64_t samples,
                                std::uint64_t seed, unsigned jobs = 1);

/// Whether `report.value` lies within `sigmas` standard errors of `target`,
/// decided exactly: (value - target)^2 <= sigmas^2 * variance / samples.
bool within_standard_errors(const MomentReport& report, const Rational& target, unsigned sigmas);

/// Degree <= m k polynomial through E_{(n)}[X^k] for the full-cycle classes
/// n = m k + 1, ..., 2 m k + 1, each computed by enumeration. When a node's
/// class exceeds the budget, throws BudgetExceeded naming the largest
/// feasible node.
Polynomial moment_polynomial_via_interpolation(StatisticId id, unsigned k, int m,
                                               const EnumerationOptions& options = {});

}  // namespace permstat
