#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/constraints.hpp"
#include "permstat/moments.hpp"
#include "permstat/polynomial.hpp"

namespace permstat {

// JSON documents are returned as text; every Rational is written as a
// "p/q" string (or "p" for integers) so nothing is rounded.

std::string to_json(const Polynomial& p);
Polynomial polynomial_from_json(std::string_view text);

std::string to_json(const MomentReport& report);
MomentReport moment_report_from_json(std::string_view text);

std::string to_json(const TupleClassification& c);

std::string ats_table_to_json(const AtsTable& table, std::string_view family, unsigned k);
AtsTable ats_table_from_json(std::string_view text);

/// Quotes a CSV field when it contains a comma, quote or line break.
std::string csv_field(std::string_view text);
/// Splits one CSV record, honoring quoted fields.
std::vector<std::string> split_csv_record(std::string_view line);

/// "value,count" header then one row per value, ascending.
void write_histogram_csv(std::ostream& out, const Histogram& hist);
Histogram read_histogram_csv(std::istream& in);

/// "x,y,count" header then one row per pair.
void write_joint_histogram_csv(std::ostream& out, const JointHistogram& hist, std::string_view x_name,
                               std::string_view y_name);

}  // namespace permstat
