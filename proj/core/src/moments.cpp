#include "permstat/moments.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "permstat/enumerate.hpp"
#include "permstat/errors.hpp"
#include "permstat/sampling.hpp"

namespace permstat {

namespace {

template <typename Hist, typename Tally>
Hist scan_class(const Partition& lambda, const EnumerationOptions& options, Tally tally) {
  check_budget(class_size(lambda), options.budget, "class " + lambda.to_string());
  const unsigned shards = std::max(1U, options.jobs);
  auto parts = run_shards<Hist>(options.jobs, shards, [&](Shard shard) {
    Hist h;
    for_each_in_class(lambda, [&](const Permutation& w) { tally(h, w); }, shard);
    return h;
  });
  Hist total;
  for (const auto& h : parts) {
    for (const auto& [v, c] : h) total[v] += c;
  }
  return total;
}

template <typename Hist, typename Tally>
Hist scan_group(int n, const EnumerationOptions& options, Tally tally) {
  if (n < 0) throw DomainError("n must be >= 0");
  check_budget(factorial(n), options.budget, "S_" + std::to_string(n));
  const unsigned shards = std::max(1U, options.jobs);
  auto parts = run_shards<Hist>(options.jobs, shards, [&](Shard shard) {
    Hist h;
    for_each_permutation(n, [&](const Permutation& w) { tally(h, w); }, shard);
    return h;
  });
  Hist total;
  for (const auto& h : parts) {
    for (const auto& [v, c] : h) total[v] += c;
  }
  return total;
}

BigInt to_big(std::uint64_t x) { return BigInt(std::to_string(x)); }

BigInt power(long long base, unsigned k) {
  BigInt out = 1;
  const BigInt b(std::to_string(base));
  for (unsigned r = 0; r < k; ++r) out *= b;
  return out;
}

}  // namespace

std::uint64_t default_enumeration_budget() {
  constexpr std::uint64_t fallback = 10'000'000;
  const char* env = std::getenv("PERMSTAT_ENUM_BUDGET");
  if (env == nullptr) return fallback;
  const std::string_view text(env);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) return fallback;
  return value;
}

void check_budget(const BigInt& count, std::uint64_t budget, std::string_view what) {
  if (count > to_big(budget)) {
    throw BudgetExceeded(std::string(what) + " has " + count.get_str() +
                             " elements, over the enumeration budget of " + std::to_string(budget) +
                             "; raise PERMSTAT_ENUM_BUDGET / --budget or use monte_carlo",
                         count.get_str());
  }
}

Histogram distribution_class(StatisticId id, const Partition& lambda, const EnumerationOptions& options) {
  return scan_class<Histogram>(lambda, options, [id](Histogram& h, const Permutation& w) { ++h[evaluate(id, w)]; });
}

Histogram distribution_sn(StatisticId id, int n, const EnumerationOptions& options) {
  return scan_group<Histogram>(n, options, [id](Histogram& h, const Permutation& w) { ++h[evaluate(id, w)]; });
}

JointHistogram joint_distribution_class(StatisticId x, StatisticId y, const Partition& lambda,
                                        const EnumerationOptions& options) {
  return scan_class<JointHistogram>(lambda, options, [x, y](JointHistogram& h, const Permutation& w) {
    ++h[{evaluate(x, w), evaluate(y, w)}];
  });
}

JointHistogram joint_distribution_sn(StatisticId x, StatisticId y, int n, const EnumerationOptions& options) {
  return scan_group<JointHistogram>(n, options, [x, y](JointHistogram& h, const Permutation& w) {
    ++h[{evaluate(x, w), evaluate(y, w)}];
  });
}

Rational histogram_moment(const Histogram& hist, unsigned k) {
  BigInt sum = 0;
  BigInt total = 0;
  for (const auto& [v, c] : hist) {
    sum += to_big(c) * power(v, k);
    total += to_big(c);
  }
  if (total == 0) throw DomainError("moment of an empty histogram");
  return Rational(sum, total);
}

Rational histogram_variance(const Histogram& hist) {
  const Rational mean = histogram_moment(hist, 1);
  return histogram_moment(hist, 2) - mean * mean;
}

Rational exact_moment_class(StatisticId id, const Partition& lambda, unsigned k, const EnumerationOptions& options) {
  return histogram_moment(distribution_class(id, lambda, options), k);
}

Rational exact_moment_sn(StatisticId id, int n, unsigned k, const EnumerationOptions& options) {
  return histogram_moment(distribution_sn(id, n, options), k);
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::enumeration: return "enumeration";
    case Method::constraint_sum: return "constraint_sum";
    case Method::closed_form: return "closed_form";
    case Method::monte_carlo: return "monte_carlo";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  if (text == "enumeration" || text == "enumerate") return Method::enumeration;
  if (text == "constraint_sum" || text == "constraint-sum" || text == "constraints") return Method::constraint_sum;
  if (text == "closed_form" || text == "closed-form") return Method::closed_form;
  if (text == "monte_carlo" || text == "monte-carlo") return Method::monte_carlo;
  throw ParseError("unknown method '" + std::string(text) + "'");
}

MomentReport monte_carlo_moment(StatisticId id, const Partition& lambda, unsigned k, std::uint64_t samples,
                                std::uint64_t seed, unsigned jobs) {
  if (samples == 0) throw DomainError("monte_carlo_moment: requires samples >= 1");
  const std::uint64_t chunks = (samples + kMonteCarloChunk - 1) / kMonteCarloChunk;
  struct Sums {
    BigInt sum = 0;
    BigInt sum_sq = 0;
  };
  const unsigned shard_count = std::max(1U, jobs);
  auto parts = run_shards<Sums>(jobs, shard_count, [&](Shard shard) {
    Sums s;
    for (std::uint64_t c = shard.index; c < chunks; c += shard.count) {
      Engine engine(derive_seed(seed, c));
      const std::uint64_t begin = c * kMonteCarloChunk;
      const std::uint64_t end = std::min(samples, begin + kMonteCarloChunk);
      for (std::uint64_t r = begin; r < end; ++r) {
        const BigInt x = power(evaluate(id, sample_class_uniform(lambda, engine)), k);
        s.sum += x;
        s.sum_sq += x * x;
      }
    }
    return s;
  });
  BigInt sum = 0;
  BigInt sum_sq = 0;
  for (const auto& p : parts) {
    sum += p.sum;
    sum_sq += p.sum_sq;
  }
  const BigInt big_n = to_big(samples);
  MomentReport report;
  report.statistic = id;
  report.lambda = lambda;
  report.n = lambda.n();
  report.k = k;
  report.method = Method::monte_carlo;
  report.value = Rational(sum, big_n);
  report.samples = samples;
  report.seed = seed;
  if (samples > 1) {
    report.sample_variance = Rational(sum_sq * big_n - sum * sum, big_n * (big_n - 1));
  } else {
    report.sample_variance = Rational(0);
  }
  report.standard_error = std::sqrt(report.sample_variance->to_double() / static_cast<double>(samples));
  return report;
}

bool within_standard_errors(const MomentReport& report, const Rational& target, unsigned sigmas) {
  if (!report.samples || !report.sample_variance) {
    throw DomainError("within_standard_errors: report carries no sampling information");
  }
  const Rational gap = report.value - target;
  const Rational bound = Rational(static_cast<long long>(sigmas) * sigmas) * *report.sample_variance /
                         Rational(to_big(*report.samples));
  return gap * gap <= bound;
}

Polynomial moment_polynomial_via_interpolation(StatisticId id, unsigned k, int m, const EnumerationOptions& options) {
  if (m < 1 || k < 1) throw DomainError("moment_polynomial_via_interpolation: requires k >= 1 and m >= 1");
  const int first = m * static_cast<int>(k) + 1;
  const int last = 2 * m * static_cast<int>(k) + 1;
  const BigInt limit = to_big(options.budget);
  for (int n = first; n <= last; ++n) {
    if (class_size(Partition::single(n)) > limit) {
      int feasible = n - 1;
      const std::string largest = feasible >= first ? std::to_string(feasible) : "none";
      throw BudgetExceeded("interpolation node n = " + std::to_string(n) + " has " +
                               class_size(Partition::single(n)).get_str() +
                               " full cycles, over the enumeration budget of " + std::to_string(options.budget) +
                               "; largest feasible node: " + largest,
                           class_size(Partition::single(n)).get_str());
    }
  }
  std::vector<InterpolationNode> nodes;
  for (int n = first; n <= last; ++n) {
    nodes.push_back({n, exact_moment_class(id, Partition::single(n), k, options)});
  }
  return lagrange_interpolate(nodes);
}

}  // namespace permstat
