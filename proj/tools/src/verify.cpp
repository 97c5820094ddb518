#include "permstat_cli/verify.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "permstat/closed_forms.hpp"
#include "permstat/constraints.hpp"
#include "permstat/enumerate.hpp"
#include "permstat/errors.hpp"
#include "permstat/moments.hpp"
#include "permstat/polynomial.hpp"
#include "permstat/serialize.hpp"

namespace permstat::cli {

namespace {

using Rows = std::vector<CheckRow>;

EnumerationOptions enum_options(const SuiteOptions& o) {
  EnumerationOptions e;
  e.jobs = o.jobs;
  if (o.budget != 0) e.budget = o.budget;
  return e;
}

std::string text_of(const Histogram& h) {
  std::string out;
  for (const auto& [v, c] : h) {
    if (!out.empty()) out += ';';
    out += std::to_string(v) + ':' + std::to_string(c);
  }
  return out;
}

std::string text_of(const JointHistogram& h) {
  std::string out;
  for (const auto& [xy, c] : h) {
    if (!out.empty()) out += ';';
    out += std::to_string(xy.first) + '/' + std::to_string(xy.second) + ':' + std::to_string(c);
  }
  return out;
}

CheckRow text_row(std::string suite, std::string check, std::string statistic, std::string partition,
                  std::string closed, std::string brute) {
  CheckRow r{std::move(suite), std::move(check), std::move(statistic), std::move(partition), closed, brute,
             closed == brute, std::nullopt, std::nullopt};
  return r;
}

std::string pair_text(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

bool only_parts(const Partition& lambda, std::initializer_list<int> allowed) {
  return std::all_of(lambda.parts().begin(), lambda.parts().end(), [&](int p) {
    return std::find(allowed.begin(), allowed.end(), p) != allowed.end();
  });
}

// ---------------------------------------------------------------- table1

Rows suite_table1(const SuiteOptions& o) {
  const int n_max = o.n_max.value_or(default_n_max("table1"));
  const auto eo = enum_options(o);
  Rows rows;
  const std::string suite = "table1";
  for (int n = 2; n <= n_max; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      const long long a1 = lambda.part_count(1);
      const long long a2 = lambda.part_count(2);
      std::map<StatisticId, Rational> brute;
      for (StatisticId id : kAllStatistics) {
        if (!has_mean_formula(id)) continue;
        brute[id] = exact_moment_class(id, lambda, 1, eo);
        const std::string name(statistic_name(id));
        rows.push_back(numeric_row(suite, "mean general", name, lambda.to_string(), table1_mean(id, lambda), brute[id]));
        // The other columns, wherever lambda lies in their domain.
        auto column = [&](MeanRegime regime, bool applies) {
          if (!applies) return;
          rows.push_back(numeric_row(suite, "mean " + std::string(regime_name(regime)), name, lambda.to_string(),
                                     MeanFormula{id, regime}.evaluate(n, a1, a2), brute[id]));
        };
        column(MeanRegime::large_parts, n >= 3 && lambda.min_part() >= 3);
        column(MeanRegime::ones_twos, only_parts(lambda, {1, 2}));
        column(MeanRegime::twos, only_parts(lambda, {2}));
      }
      rows.push_back(numeric_row(suite, "cdes single fraction", "cdes", lambda.to_string(),
                                 cdes_mean_single_fraction(n, a1, a2), brute[StatisticId::cdes]));
      rows.push_back(numeric_row(suite, "baj = (n+1)/3 maj", "baj", lambda.to_string(),
                                 Rational(n + 1, 3) * brute[StatisticId::maj], brute[StatisticId::baj]));
      if (n >= 3) {
        const WeightFunction weights[] = {WeightFunction::des(n), WeightFunction::maj(n), WeightFunction::inv(n),
                                          WeightFunction::baj(n)};
        const StatisticId ids[] = {StatisticId::des, StatisticId::maj, StatisticId::inv, StatisticId::baj};
        for (int r = 0; r < 4; ++r) {
          rows.push_back(numeric_row(suite, "weighted inversion mean", std::string(statistic_name(ids[r])),
                                     lambda.to_string(), weighted_inversion_mean(lambda, weights[r]), brute[ids[r]]));
        }
      }
    }
  }
  return rows;
}

// ---------------------------------------------------------------- pij

Rows suite_pij(const SuiteOptions& o) {
  const int n_max = o.n_max.value_or(default_n_max("pij"));
  Rows rows;
  const std::string suite = "pij";
  for (int n = 3; n <= n_max; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      check_budget(class_size(lambda), enum_options(o).budget, "class " + lambda.to_string());
      std::vector<std::vector<long long>> inversions(n + 1, std::vector<long long>(n + 1, 0));
      long long total = 0;
      for_each_in_class(lambda, [&](const Permutation& w) {
        ++total;
        for (int i = 1; i <= n; ++i) {
          for (int j = i + 1; j <= n; ++j) inversions[i][j] += w(i) > w(j);
        }
      });
      auto freq = [&](int i, int j) { return Rational(inversions[i][j], total); };
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          rows.push_back(numeric_row(suite, "P" + pair_text(i, j), "inv", lambda.to_string(),
                                     inversion_indicator_prob(lambda, i, j), freq(i, j)));
          rows.push_back(numeric_row(suite, "P" + pair_text(i, j) + " by cells", "inv", lambda.to_string(),
                                     inversion_indicator_prob_by_cells(lambda, i, j), freq(i, j)));
        }
      }
      for (int d = 1; d < n; ++d) {
        for (int i = 2; i + d <= n; ++i) {
          rows.push_back(numeric_row(suite, "shift " + pair_text(1, 1 + d) + "~" + pair_text(i, i + d), "inv",
                                     lambda.to_string(), freq(1, 1 + d), freq(i, i + d)));
        }
      }
    }
  }
  return rows;
}

// ---------------------------------------------------------------- omega

Rows suite_omega(const SuiteOptions& o) {
  const int n_max = o.n_max.value_or(default_n_max("omega"));
  Rows rows;
  const std::string suite = "omega";
  for (int n = 2; n <= n_max; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      check_budget(class_size(lambda), enum_options(o).budget, "class " + lambda.to_string());
      const auto members = enumerate_class(lambda);
      const auto total = static_cast<long long>(members.size());
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          std::array<long long, 5> in_cell{};
          std::array<long long, 5> inverted{};
          for (const auto& w : members) {
            const int c = omega_cell(w, i, j) - 1;
            ++in_cell[static_cast<std::size_t>(c)];
            inverted[static_cast<std::size_t>(c)] += w(i) > w(j);
          }
          const auto probs = omega_partition_probs(lambda, i, j);
          for (std::size_t c = 0; c < 5; ++c) {
            rows.push_back(numeric_row(suite, "p" + std::to_string(c + 1) + pair_text(i, j), "", lambda.to_string(),
                                       probs.p[c], Rational(in_cell[c], total)));
          }
          rows.push_back(numeric_row(suite, "sum p" + pair_text(i, j), "", lambda.to_string(), Rational(1), probs.sum()));
          if (n < 3) continue;
          const auto cond = conditional_inversion_probs(n, i, j);
          for (std::size_t c = 0; c < 5; ++c) {
            if (in_cell[c] == 0) continue;
            rows.push_back(numeric_row(suite, "c" + std::to_string(c + 1) + pair_text(i, j), "inv", lambda.to_string(),
                                       cond[c], Rational(inverted[c], in_cell[c])));
          }
        }
      }
    }
  }
  return rows;
}

// ---------------------------------------------------------------- z-identities

Rows suite_z(const SuiteOptions& o) {
  const int n_max = o.n_max.value_or(default_n_max("z-identities"));
  Rows rows;
  const std::string suite = "z-identities";
  for (int n = 2; n <= n_max; ++n) {
    const auto sums = verify_z_identities(n);
    const std::string scope = "n=" + std::to_string(n);
    rows.push_back(numeric_row(suite, "sum 1/z", "", scope, Rational(1), sums.inverse_z));
    rows.push_back(numeric_row(suite, "sum a1/z", "", scope, Rational(1), sums.a1));
    rows.push_back(numeric_row(suite, "sum a1^2/z", "", scope, Rational(2), sums.a1_squared));
    rows.push_back(numeric_row(suite, "sum a2/z", "", scope, Rational(1, 2), sums.a2));
  }
  return rows;
}

// ---------------------------------------------------------------- constraints

// Constraints on [6] x [6] are bitmasks over 36 pairs.
constexpr int kWindow = 6;

int pair_bit(int a, int b) { return (a - 1) * kWindow + (b - 1); }

std::vector<Constraint> window_constraints(int max_size) {
  std::vector<ConstraintPair> all;
  for (int a = 1; a <= kWindow; ++a) {
    for (int b = 1; b <= kWindow; ++b) all.emplace_back(a, b);
  }
  std::vector<Constraint> out;
  const auto count = static_cast<int>(all.size());
  for (int x = 0; x < count; ++x) {
    out.push_back(Constraint({all[x]}));
    if (max_size < 2) continue;
    for (int y = x + 1; y < count; ++y) {
      out.push_back(Constraint({all[x], all[y]}));
      if (max_size < 3) continue;
      for (int z = y + 1; z < count; ++z) out.push_back(Constraint({all[x], all[y], all[z]}));
    }
  }
  return out;
}

std::uint64_t mask_of(const Constraint& k) {
  std::uint64_t m = 0;
  for (const auto& [a, b] : k.pairs()) m |= std::uint64_t{1} << pair_bit(a, b);
  return m;
}

Rows probability_rows(const SuiteOptions& o) {
  const int n_max = o.n_max.value_or(default_n_max("constraints"));
  const auto constraints = window_constraints(3);
  Rows rows;
  const std::string suite = "constraints";
  for (int n = 2; n <= n_max; ++n) {
    for (const auto& lambda : enumerate_partitions(n, 2)) {
      check_budget(class_size(lambda), enum_options(o).budget, "class " + lambda.to_string());
      // Frequency of every sub-constraint of size <= 3 of each element's
      // graph restricted to the window.
      std::unordered_map<std::uint64_t, long long> hits;
      long long total = 0;
      for_each_in_class(lambda, [&](const Permutation& w) {
        ++total;
        std::vector<int> bits;
        for (int a = 1; a <= std::min(n, kWindow); ++a) {
          if (w(a) <= kWindow) bits.push_back(pair_bit(a, w(a)));
        }
        const auto b = static_cast<int>(bits.size());
        for (int x = 0; x < b; ++x) {
          const std::uint64_t mx = std::uint64_t{1} << bits[x];
          ++hits[mx];
          for (int y = x + 1; y < b; ++y) {
            const std::uint64_t my = mx | std::uint64_t{1} << bits[y];
            ++hits[my];
            for (int z = y + 1; z < b; ++z) ++hits[my | std::uint64_t{1} << bits[z]];
          }
        }
      });
      struct Group {
        long long count = 0;
        Rational expected;
        std::optional<Rational> mismatch;
      };
      std::map<std::pair<int, std::string>, Group> groups;
      for (const auto& k : constraints) {
        if (k.max_symbol() > n || lambda.min_part() < k.size() + 1) continue;
        const auto it = hits.find(mask_of(k));
        const Rational freq(it == hits.end() ? 0 : it->second, total);
        const Rational expected = prob_satisfies_class(k, lambda);
        const std::string kind(tuple_case_name(classify_tuple(std::span<const Constraint>(&k, 1)).kind));
        auto& g = groups[{k.size(), kind}];
        ++g.count;
        g.expected = expected;
        if (freq != expected && !g.mismatch) g.mismatch = freq;
      }
      for (const auto& [key, g] : groups) {
        const std::string check = "prob size=" + std::to_string(key.first) + " " + key.second + " x" + std::to_string(g.count);
        rows.push_back(numeric_row(suite, check, "", lambda.to_string(), g.expected, g.mismatch.value_or(g.expected)));
      }
    }
  }
  return rows;
}

Rows builtin_rows(const SuiteOptions& o) {
  const int n_top = std::min(6, o.n_max.value_or(default_n_max("constraints")));
  Rows rows;
  for (StatisticId id : kAllStatistics) {
    for (int n = 1; n <= n_top; ++n) {
      const auto set = builtin_constraint_set(id, n);
      long long mismatches = 0;
      for_each_permutation(n, [&](const Permutation& w) { mismatches += set.evaluate(w) != Rational(evaluate(id, w)); });
      rows.push_back(numeric_row("constraints", "builtin set agrees pointwise", std::string(statistic_name(id)),
                                 "S_" + std::to_string(n), Rational(0), Rational(mismatches)));
    }
  }
  return rows;
}

Rows polynomial_rows(const SuiteOptions& o) {
  const std::string suite = "constraints";
  Rows rows;
  const ScanOptions so{o.jobs};
  const auto inv = builtin_family(StatisticId::inv);
  const auto exc = builtin_family(StatisticId::exc);
  auto count_row = [&](unsigned k, int t, int s, long long expected) {
    rows.push_back(numeric_row(suite, "a_{" + std::to_string(t) + "," + std::to_string(s) + "} k=" + std::to_string(k),
                               "inv", "", Rational(expected), Rational(count_acyclic_tuples(inv, k, t, s, so))));
  };
  count_row(1, 2, 3, 4);
  count_row(1, 2, 4, 6);
  count_row(2, 4, 8, 2520);

  const Polynomial inv1({0, Rational(-1, 12), Rational(1, 4)});
  const Polynomial inv2({0, Rational(-49, 360), Rational(-1, 80), Rational(-1, 72), Rational(1, 16)});
  const Polynomial exc1({0, Rational(1, 2)});
  auto poly_row = [&](const std::string& check, const std::string& stat, const Polynomial& expected,
                      const Polynomial& got) {
    rows.push_back(text_row(suite, check, stat, "", expected.to_string(), got.to_string()));
  };
  const auto ats_inv2 = moment_polynomial_via_ats(inv, 2, so);
  poly_row("ats k=1", "inv", inv1, moment_polynomial_via_ats(inv, 1, so));
  poly_row("ats k=2", "inv", inv2, ats_inv2);
  poly_row("ats k=1", "exc", exc1, moment_polynomial_via_ats(exc, 1, so));
  rows.push_back(numeric_row(suite, "ats k=2 leading coefficient", "inv", "", Rational(1, 16), ats_inv2.leading_coefficient()));
  rows.push_back(numeric_row(suite, "ats k=2 degree", "inv", "", Rational(4), Rational(ats_inv2.degree())));

  const auto eo = enum_options(o);
  const Rational nodes[] = {Rational(109, 3), Rational(1151, 15), Rational(2156, 15), Rational(247), Rational(3977, 10)};
  for (int n = 5; n <= 9; ++n) {
    rows.push_back(numeric_row(suite, "interpolation node k=2", "inv", Partition::single(n).to_string(), nodes[n - 5],
                               exact_moment_class(StatisticId::inv, Partition::single(n), 2, eo)));
  }
  poly_row("interpolate k=2 m=2", "inv", inv2, moment_polynomial_via_interpolation(StatisticId::inv, 2, 2, eo));
  poly_row("interpolate k=1 m=2", "inv", inv1, moment_polynomial_via_interpolation(StatisticId::inv, 1, 2, eo));
  poly_row("interpolate k=1 m=1", "exc", exc1, moment_polynomial_via_interpolation(StatisticId::exc, 1, 1, eo));

  const auto set5 = builtin_constraint_set(StatisticId::inv, 5);
  rows.push_back(numeric_row(suite, "tuple sum k=2", "inv", "(5)", Rational(109, 3),
                             moment_via_constraints(set5, 2, Partition::single(5), so)));
  rows.push_back(numeric_row(suite, "tuple sum k=1", "inv", "(9)", Rational(39, 2),
                             moment_via_constraints(builtin_constraint_set(StatisticId::inv, 9), 1, Partition::single(9), so)));

  if (o.n_max.value_or(default_n_max("constraints")) >= 10) {
    const Rational at10 = inv2(10);
    for (const auto& lambda : {Partition::single(10), Partition({5, 5})}) {
      rows.push_back(numeric_row(suite, "independence k=2", "inv", lambda.to_string(), at10,
                                 exact_moment_class(StatisticId::inv, lambda, 2, eo)));
    }
  }
  return rows;
}

Rows suite_constraints(const SuiteOptions& o) {
  Rows rows = probability_rows(o);
  for (auto& r : builtin_rows(o)) rows.push_back(std::move(r));
  for (auto& r : polynomial_rows(o)) rows.push_back(std::move(r));
  return rows;
}

// ---------------------------------------------------------------- equidistribution

Rows suite_equidistribution(const SuiteOptions& o) {
  const int n_max = o.n_max.value_or(default_n_max("equidistribution"));
  const auto eo = enum_options(o);
  const std::string suite = "equidistribution";
  Rows rows;
  for (int n = 1; n <= n_max; ++n) {
    check_budget(factorial(n), eo.budget, "S_" + std::to_string(n));
    long long bad = 0;
    for_each_permutation(n, [&](const Permutation& w) {
      const auto e = exc_family(w);
      const auto c = cyclic_family(w);
      bad += e.exc != c.cv + c.cda;
    });
    const std::string group = "S_" + std::to_string(n);
    rows.push_back(numeric_row(suite, "exc = cv + cda pointwise", "exc", group, Rational(0), Rational(bad)));
    rows.push_back(text_row(suite, "maj ~ inv", "maj", group, text_of(distribution_sn(StatisticId::inv, n, eo)),
                            text_of(distribution_sn(StatisticId::maj, n, eo))));
    rows.push_back(text_row(suite, "(exc,den) ~ (des,maj)", "exc,den", group,
                            text_of(joint_distribution_sn(StatisticId::des, StatisticId::maj, n, eo)),
                            text_of(joint_distribution_sn(StatisticId::exc, StatisticId::den, n, eo))));
    const std::pair<StatisticId, StatisticId> pairs[] = {
        {StatisticId::exc, StatisticId::aexc}, {StatisticId::cv, StatisticId::cpk}, {StatisticId::cda, StatisticId::cdd}};
    for (const auto& lambda : enumerate_partitions(n)) {
      for (const auto& [x, y] : pairs) {
        rows.push_back(text_row(suite, std::string(statistic_name(x)) + " ~ " + std::string(statistic_name(y)),
                                std::string(statistic_name(y)), lambda.to_string(),
                                text_of(distribution_class(x, lambda, eo)), text_of(distribution_class(y, lambda, eo))));
      }
    }
  }
  return rows;
}

// ---------------------------------------------------------------- whole-group

Rows suite_whole_group(const SuiteOptions& o) {
  const int n_max = o.n_max.value_or(default_n_max("whole-group"));
  const auto eo = enum_options(o);
  const std::string suite = "whole-group";
  Rows rows;
  for (int n = 2; n <= n_max; ++n) {
    const std::string group = "S_" + std::to_string(n);
    const Rational qn(n);
    for (StatisticId id : kAllStatistics) {
      if (!has_mean_formula(id)) continue;
      const std::string name(statistic_name(id));
      rows.push_back(numeric_row(suite, "sum z^-1 E_lambda - E_Sn", name, group, Rational(0), decomposition_residual(id, n)));
      rows.push_back(numeric_row(suite, "mean", name, group, whole_group_mean(id, n), exact_moment_sn(id, n, 1, eo)));
    }
    const auto inv_hist = distribution_sn(StatisticId::inv, n, eo);
    const Rational feller_m2 = qn.pow(4) / Rational(16) - Rational(7, 72) * qn.pow(3) + Rational(5, 48) * qn.pow(2) -
                               Rational(5, 72) * qn;
    const Rational feller_var = (Rational(2) * qn.pow(3) + Rational(3) * qn.pow(2) - Rational(5) * qn) / Rational(72);
    rows.push_back(numeric_row(suite, "E[inv^2]", "inv", group, feller_m2, histogram_moment(inv_hist, 2)));
    rows.push_back(numeric_row(suite, "Var[inv]", "inv", group, feller_var, histogram_variance(inv_hist)));
    const auto exc_hist = distribution_sn(StatisticId::exc, n, eo);
    const auto exc_sn = whole_group_exc_second_moment(n);
    rows.push_back(numeric_row(suite, "E[exc^2]", "exc", group, exc_sn.second_moment, histogram_moment(exc_hist, 2)));
    rows.push_back(numeric_row(suite, "Var[exc]", "exc", group, exc_sn.variance, histogram_variance(exc_hist)));
  }
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      const auto hist = distribution_class(StatisticId::exc, lambda, eo);
      const auto expected = exc_second_moment_and_variance(lambda);
      rows.push_back(numeric_row(suite, "E_lambda[exc^2]", "exc", lambda.to_string(), expected.second_moment,
                                 histogram_moment(hist, 2)));
      rows.push_back(numeric_row(suite, "Var_lambda[exc]", "exc", lambda.to_string(), expected.variance,
                                 histogram_variance(hist)));
    }
  }
  return rows;
}

// ---------------------------------------------------------------- monte-carlo

Rows suite_monte_carlo(const SuiteOptions& o) {
  const int n = o.n_max.value_or(default_n_max("monte-carlo"));
  const Partition lambda = Partition::single(n);
  const std::string suite = "monte-carlo";
  const auto report = monte_carlo_moment(StatisticId::inv, lambda, 1, o.samples, o.seed, o.jobs);
  const Rational target = table1_mean(StatisticId::inv, lambda);
  CheckRow row = numeric_row(suite, "mean within 5 standard errors", "inv", lambda.to_string(), target, report.value);
  row.equal = within_standard_errors(report, target, 5);
  Rows rows{row};
  const auto again = monte_carlo_moment(StatisticId::inv, lambda, 1, o.samples, o.seed, std::max(1U, o.jobs) + 1);
  rows.push_back(text_row(suite, "same seed reproduces the report", "inv", lambda.to_string(), to_json(report), to_json(again)));
  return rows;
}

}  // namespace

CheckRow numeric_row(std::string suite, std::string check, std::string statistic, std::string partition,
                     const Rational& closed, const Rational& brute) {
  return CheckRow{std::move(suite), std::move(check), std::move(statistic), std::move(partition), closed.to_string(),
                  brute.to_string(), closed == brute, closed, brute};
}

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names = {"table1", "pij", "omega", "z-identities", "constraints",
                                                      "equidistribution", "whole-group", "monte-carlo"};
  return names;
}

int default_n_max(std::string_view suite) {
  if (suite == "z-identities") return 12;
  if (suite == "pij" || suite == "omega" || suite == "equidistribution") return 7;
  if (suite == "monte-carlo") return 20;
  return 8;
}

std::vector<CheckRow> run_suite(std::string_view suite, const SuiteOptions& options) {
  if (suite == "all") {
    Rows rows;
    for (auto name : suite_names()) {
      for (auto& r : run_suite(name, options)) rows.push_back(std::move(r));
    }
    return rows;
  }
  if (suite == "table1") return suite_table1(options);
  if (suite == "pij") return suite_pij(options);
  if (suite == "omega") return suite_omega(options);
  if (suite == "z-identities") return suite_z(options);
  if (suite == "constraints") return suite_constraints(options);
  if (suite == "equidistribution") return suite_equidistribution(options);
  if (suite == "whole-group") return suite_whole_group(options);
  if (suite == "monte-carlo") return suite_monte_carlo(options);
  throw ParseError("unknown verify suite '" + std::string(suite) + "'");
}

void write_rows_csv(std::ostream& out, const std::vector<CheckRow>& rows, bool decimal) {
  out << "suite,check,statistic,partition,closed_form,brute_force,equal";
  if (decimal) out << ",closed_form_decimal,brute_force_decimal";
  out << '\n';
  for (const auto& r : rows) {
    out << csv_field(r.suite) << ',' << csv_field(r.check) << ',' << csv_field(r.statistic) << ','
        << csv_field(r.partition) << ',' << csv_field(r.closed_form) << ',' << csv_field(r.brute_force) << ','
        << (r.equal ? "true" : "false");
    if (decimal) {
      std::ostringstream a;
      std::ostringstream b;
      a.precision(17);
      b.precision(17);
      if (r.closed_value) a << r.closed_value->to_double();
      if (r.brute_value) b << r.brute_value->to_double();
      out << ',' << a.str() << ',' << b.str();
    }
    out << '\n';
  }
}

}  // namespace permstat::cli
