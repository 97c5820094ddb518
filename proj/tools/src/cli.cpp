#include "permstat_cli/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "permstat/closed_forms.hpp"
#include "permstat/constraints.hpp"
#include "permstat/errors.hpp"
#include "permstat/moments.hpp"
#include "permstat/sampling.hpp"
#include "permstat/serialize.hpp"
#include "permstat_cli/verify.hpp"

namespace permstat::cli {

namespace {

struct Common {
  unsigned jobs = 1;
  std::string out_path;
  bool decimal = false;
  std::uint64_t budget = 0;

  EnumerationOptions enumeration() const {
    EnumerationOptions e;
    e.jobs = jobs;
    if (budget != 0) e.budget = budget;
    return e;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("-j,--jobs", c.jobs, "Worker threads; output does not depend on it")->check(CLI::PositiveNumber);
  cmd->add_option("-o,--out", c.out_path, "Write the result to this file instead of stdout");
  cmd->add_flag("--decimal", c.decimal, "Add approximate decimal values next to exact ones");
  cmd->add_option("--budget", c.budget, "Enumeration budget (overrides PERMSTAT_ENUM_BUDGET)");
}

// Writes `text` to --out when given, else to `out`.
void emit(const Common& c, std::ostream& out, const std::string& text) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  if (!file) throw DomainError("cannot open output file '" + c.out_path + "'");
  file << text;
}

std::string with_decimal(const std::string& json_text, const char* key, const Rational& value) {
  auto doc = nlohmann::json::parse(json_text);
  doc[key] = value.to_double();
  return doc.dump(2);
}

// ---------------------------------------------------------------- moment

struct MomentArgs {
  std::string stat;
  std::string lambda;
  int group = -1;
  unsigned k = 1;
  std::string method = "enumerate";
  std::uint64_t seed = 1;
  std::uint64_t samples = 100000;
};

MomentReport closed_form_report(StatisticId id, const std::optional<Partition>& lambda, int n, unsigned k) {
  MomentReport r;
  r.statistic = id;
  r.lambda = lambda;
  r.n = n;
  r.k = k;
  r.method = Method::closed_form;
  if (k == 0) {
    r.value = Rational(1);
  } else if (k == 1) {
    r.value = lambda ? table1_mean(id, *lambda) : whole_group_mean(id, n);
  } else if (k == 2 && id == StatisticId::exc) {
    r.value = lambda ? exc_second_moment_and_variance(*lambda).second_moment
                     : whole_group_exc_second_moment(n).second_moment;
  } else if (k == 2 && id == StatisticId::inv && !lambda) {
    const Rational q(n);
    r.value = q.pow(4) / Rational(16) - Rational(7, 72) * q.pow(3) + Rational(5, 48) * q.pow(2) - Rational(5, 72) * q;
  } else if (k == 2 && id == StatisticId::inv && lambda->min_part() >= 5) {
    const Rational q(n);
    r.value = q.pow(4) / Rational(16) - Rational(1, 72) * q.pow(3) - Rational(1, 80) * q.pow(2) - Rational(49, 360) * q;
  } else {
    throw DomainError("no closed form for E[" + std::string(statistic_name(id)) + "^" + std::to_string(k) +
                      "] on this scope; use --method enumerate, constraints or monte-carlo");
  }
  return r;
}

int cmd_moment(const MomentArgs& a, const Common& c, std::ostream& out, std::ostream&) {
  const StatisticId id = parse_statistic(a.stat);
  const Method method = parse_method(a.method);
  std::optional<Partition> lambda;
  if (!a.lambda.empty()) lambda = Partition::parse(a.lambda);
  if (lambda.has_value() == (a.group >= 0)) throw ParseError("give exactly one of --class or --group");
  const int n = lambda ? lambda->n() : a.group;

  MomentReport report;
  report.statistic = id;
  report.lambda = lambda;
  report.n = n;
  report.k = a.k;
  report.method = method;
  switch (method) {
    case Method::enumeration:
      report.value = lambda ? exact_moment_class(id, *lambda, a.k, c.enumeration())
                            : exact_moment_sn(id, n, a.k, c.enumeration());
      break;
    case Method::closed_form: report = closed_form_report(id, lambda, n, a.k); break;
    case Method::constraint_sum:
      if (!lambda) throw DomainError("--method constraints needs --class");
      report.value = moment_via_constraints(builtin_constraint_set(id, n), a.k, *lambda, ScanOptions{c.jobs});
      break;
    case Method::monte_carlo:
      if (!lambda) throw DomainError("--method monte-carlo needs --class");
      report = monte_carlo_moment(id, *lambda, a.k, a.samples, a.seed, c.jobs);
      break;
  }
  std::string text = to_json(report);
  if (c.decimal) text = with_decimal(text, "value_decimal", report.value);
  emit(c, out, text + "\n");
  if (!c.out_path.empty()) out << report.value.to_string() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& suite, std::optional<int> n_max, std::uint64_t seed, std::uint64_t samples,
               const Common& c, std::ostream& out, std::ostream& err) {
  SuiteOptions o;
  o.n_max = n_max;
  o.jobs = c.jobs;
  o.budget = c.budget;
  o.seed = seed;
  o.samples = samples;
  const auto rows = run_suite(suite, o);
  std::ostringstream csv;
  write_rows_csv(csv, rows, c.decimal);
  emit(c, out, csv.str());
  const auto failed = std::count_if(rows.begin(), rows.end(), [](const CheckRow& r) { return !r.equal; });
  err << "# " << rows.size() << " checks, " << failed << " failed\n";
  return failed == 0 ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------- polynomial

struct PolynomialArgs {
  std::string stat;
  unsigned k = 1;
  int m = 0;
  std::string method = "ats";
  std::string constraints_file;
  int n0 = 0;
};

int cmd_polynomial(const PolynomialArgs& a, const Common& c, std::ostream& out, std::ostream&) {
  if (a.k < 1) throw DomainError("--k must be >= 1");
  Polynomial p;
  std::optional<AtsTable> table;
  std::string name;
  int m = a.m;
  if (!a.constraints_file.empty()) {
    if (a.method != "ats") throw DomainError("--constraints works with --method ats only");
    if (a.n0 < 1) throw DomainError("--constraints needs --n0, the size of the base set's ground set");
    std::ifstream in(a.constraints_file);
    if (!in) throw DomainError("cannot open '" + a.constraints_file + "'");
    const ConstraintSet base = parse_constraint_set(in);
    if (base.max_symbol() > a.n0) throw DomainError("base set is not supported in [n0]");
    name = a.constraints_file;
    const auto family = extension_family(name, base, a.n0);
    if (family.at(2 * family.size * static_cast<int>(a.k)).weighted()) {
      throw DomainError("moment_polynomial_via_ats: weighted sets are not supported");
    }
    m = family.size;
    table = ats_table(family, a.k, ScanOptions{c.jobs});
    p = polynomial_from_ats(*table);
  } else {
    const StatisticId id = parse_statistic(a.stat);
    name = a.stat;
    if (m == 0) m = builtin_constraint_size(id);
    if (a.method == "ats") {
      const auto family = builtin_family(id);
      m = family.size;
      p = moment_polynomial_via_ats(family, a.k, ScanOptions{c.jobs});
      table = ats_table(family, a.k, ScanOptions{c.jobs});
    } else if (a.method == "interpolate" || a.method == "interpolation") {
      p = moment_polynomial_via_interpolation(id, a.k, m, c.enumeration());
    } else {
      throw ParseError("unknown polynomial method '" + a.method + "' (ats or interpolate)");
    }
  }
  auto doc = nlohmann::json::parse(to_json(p));
  doc["statistic"] = name;
  doc["k"] = a.k;
  doc["m"] = m;
  doc["method"] = a.method;
  doc["valid_for"] = "classes whose parts are all >= " + std::to_string(m * static_cast<int>(a.k) + 1);
  if (table) doc["ats"] = nlohmann::json::parse(ats_table_to_json(*table, name, a.k))["entries"];
  if (c.decimal) {
    auto dec = nlohmann::json::array();
    for (const auto& q : p.coefficients()) dec.push_back(q.to_double());
    doc["coefficients_decimal"] = dec;
  }
  emit(c, out, doc.dump(2) + "\n");
  if (!c.out_path.empty()) {
    out << "E[" << name << "^" << a.k << "] = " << p.to_string() << "  (" << doc["valid_for"].get<std::string>()
        << ")\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- distribution

int cmd_distribution(const std::string& stat, const std::string& lambda_text, int group, const Common& c,
                     std::ostream& out, std::ostream&) {
  const StatisticId id = parse_statistic(stat);
  if (lambda_text.empty() == (group < 0)) throw ParseError("give exactly one of --class or --group");
  const Histogram hist = lambda_text.empty() ? distribution_sn(id, group, c.enumeration())
                                             : distribution_class(id, Partition::parse(lambda_text), c.enumeration());
  std::ostringstream csv;
  if (c.decimal) {
    std::uint64_t total = 0;
    for (const auto& [v, n] : hist) total += n;
    csv << "value,count,frequency_decimal\n";
    for (const auto& [v, n] : hist) {
      csv << v << ',' << n << ',' << std::setprecision(17) << static_cast<double>(n) / static_cast<double>(total)
          << '\n';
    }
  } else {
    write_histogram_csv(csv, hist);
  }
  emit(c, out, csv.str());
  return kExitOk;
}

// ---------------------------------------------------------------- sample

int cmd_sample(const std::string& lambda_text, std::uint64_t seed, std::uint64_t count,
               const std::vector<std::string>& stats, const Common& c, std::ostream& out, std::ostream&) {
  const Partition lambda = Partition::parse(lambda_text);
  std::vector<StatisticId> ids;
  for (const auto& s : stats) ids.push_back(parse_statistic(s));
  std::ostringstream csv;
  csv << "index,permutation";
  for (auto id : ids) csv << ',' << statistic_name(id);
  csv << '\n';
  for (std::uint64_t r = 0; r < count; ++r) {
    const Permutation w = sample_class_uniform(lambda, derive_seed(seed, r));
    csv << r << ',' << csv_field(w.to_string());
    for (auto id : ids) csv << ',' << evaluate(id, w);
    csv << '\n';
  }
  emit(c, out, csv.str());
  return kExitOk;
}

std::string join(const std::vector<std::string>& args) {
  std::string out = "permstat";
  for (const auto& a : args) {
    out += ' ';
    if (a.find_first_of(" \t'\"") == std::string::npos && !a.empty()) {
      out += a;
    } else {
      out += '\'';
      for (char ch : a) out += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
      out += '\'';
    }
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact moments of permutation statistics on conjugacy classes of S_n", "permstat"};
  app.require_subcommand(1);

  Common common;

  MomentArgs ma;
  auto* moment = app.add_subcommand("moment", "E[X^k] on a class or on S_n");
  moment->add_option("--stat", ma.stat, "Statistic name")->required();
  moment->add_option("--class", ma.lambda, "Cycle type, e.g. 5,4 or 1^2,3");
  moment->add_option("--group", ma.group, "Use all of S_n")->check(CLI::NonNegativeNumber);
  moment->add_option("--k", ma.k, "Moment order");
  moment->add_option("--method", ma.method, "enumerate | closed-form | constraints | monte-carlo");
  moment->add_option("--seed", ma.seed, "Monte Carlo seed");
  moment->add_option("--samples", ma.samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
  add_common(moment, common);

  std::string suite;
  std::optional<int> n_max;
  std::uint64_t verify_seed = 1;
  std::uint64_t verify_samples = 100000;
  auto* verify = app.add_subcommand("verify", "Closed forms against enumeration; exit 1 on any mismatch");
  verify->add_option("suite", suite,
                     "table1 | pij | omega | z-identities | constraints | equidistribution | whole-group | "
                     "monte-carlo | all")
      ->required();
  verify->add_option("--n-max", n_max, "Largest n swept (suite default when omitted)");
  verify->add_option("--seed", verify_seed, "Seed for the monte-carlo suite");
  verify->add_option("--samples", verify_samples, "Samples for the monte-carlo suite")->check(CLI::PositiveNumber);
  add_common(verify, common);

  PolynomialArgs pa;
  auto* polynomial = app.add_subcommand("polynomial", "Moment polynomial p_X(n) for classes with large parts");
  polynomial->add_option("--stat", pa.stat, "Statistic name");
  polynomial->add_option("--k", pa.k, "Moment order");
  polynomial->add_option("--m", pa.m, "Constraint size (default: the built-in realization's size)");
  polynomial->add_option("--method", pa.method, "ats | interpolate");
  polynomial->add_option("--constraints", pa.constraints_file, "Symmetric base constraint set file")
      ->check(CLI::ExistingFile);
  polynomial->add_option("--n0", pa.n0, "Ground set size of the base constraint set");
  add_common(polynomial, common);

  std::string dist_stat;
  std::string dist_class;
  int dist_group = -1;
  auto* distribution = app.add_subcommand("distribution", "Exact histogram as CSV");
  distribution->add_option("--stat", dist_stat, "Statistic name")->required();
  distribution->add_option("--class", dist_class, "Cycle type");
  distribution->add_option("--group", dist_group, "Use all of S_n")->check(CLI::NonNegativeNumber);
  add_common(distribution, common);

  std::string sample_class;
  std::uint64_t sample_seed = 1;
  std::uint64_t sample_count = 1;
  std::vector<std::string> sample_stats;
  auto* sample = app.add_subcommand("sample", "Uniform elements of a class; element r uses derive_seed(seed, r)");
  sample->add_option("--class", sample_class, "Cycle type")->required();
  sample->add_option("--seed", sample_seed, "Root seed");
  sample->add_option("--count", sample_count, "Number of samples");
  sample->add_option("--stat", sample_stats, "Statistics to evaluate on each sample");
  add_common(sample, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  err << "# " << join(args) << "\n";
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    if (moment->parsed()) {
      code = cmd_moment(ma, common, out, err);
    } else if (verify->parsed()) {
      code = cmd_verify(suite, n_max, verify_seed, verify_samples, common, out, err);
    } else if (polynomial->parsed()) {
      if (pa.stat.empty() && pa.constraints_file.empty()) throw ParseError("give --stat or --constraints");
      code = cmd_polynomial(pa, common, out, err);
    } else if (distribution->parsed()) {
      code = cmd_distribution(dist_stat, dist_class, dist_group, common, out, err);
    } else if (sample->parsed()) {
      code = cmd_sample(sample_class, sample_seed, sample_count, sample_stats, common, out, err);
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  err << "# elapsed " << std::fixed << std::setprecision(3) << elapsed.count() << " s\n";
  return code;
}

}  // namespace permstat::cli
