#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/rational.hpp"

namespace permstat::cli {

/// One verification row: a closed form (or expected value) against what
/// enumeration produced. Non-numeric sides carry text only.
struct CheckRow {
  std::string suite;
  std::string check;
  std::string statistic;
  std::string partition;
  std::string closed_form;
  std::string brute_force;
  bool equal = false;
  std::optional<Rational> closed_value;
  std::optional<Rational> brute_value;
};

CheckRow numeric_row(std::string suite, std::string check, std::string statistic, std::string partition,
                     const Rational& closed, const Rational& brute);

struct SuiteOptions {
  std::optional<int> n_max;  // suite default when empty
  unsigned jobs = 1;
  std::uint64_t budget = 0;  // 0: library default
  std::uint64_t seed = 1;
  std::uint64_t samples = 100000;
};

/// table1, pij, omega, z-identities, constraints, equidistribution,
/// whole-group, monte-carlo.
const std::vector<std::string_view>& suite_names();
int default_n_max(std::string_view suite);

/// Throws ParseError on an unknown suite; "all" runs every suite.
std::vector<CheckRow> run_suite(std::string_view suite, const SuiteOptions& options);

/// Header plus one CSV record per row; `decimal` appends approximate columns.
void write_rows_csv(std::ostream& out, const std::vector<CheckRow>& rows, bool decimal);

}  // namespace permstat::cli
