#include "permstat/serialize.hpp"

#include <istream>
#include <ostream>

#include <json.hpp>

#include "permstat/errors.hpp"

namespace permstat {

namespace {

using nlohmann::json;

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

template <typename T>
T field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing JSON field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad JSON field '") + key + "': " + e.what());
  }
}

json coefficients_json(const Polynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.to_string());
  return arr;
}

}  // namespace

std::string to_json(const Polynomial& p) {
  json doc;
  doc["coefficients"] = coefficients_json(p);
  doc["degree"] = p.degree();
  doc["text"] = p.to_string();
  return doc.dump(2);
}

Polynomial polynomial_from_json(std::string_view text) {
  const json doc = parse_document(text);
  std::vector<Rational> coeffs;
  for (const auto& c : field<std::vector<std::string>>(doc, "coefficients")) coeffs.push_back(Rational::parse(c));
  return Polynomial(std::move(coeffs));
}

std::string to_json(const MomentReport& report) {
  json doc;
  doc["statistic"] = std::string(statistic_name(report.statistic));
  if (report.lambda) {
    doc["scope"] = "class";
    doc["partition"] = report.lambda->to_string();
  } else {
    doc["scope"] = "group";
  }
  doc["n"] = report.n;
  doc["k"] = report.k;
  doc["value"] = report.value.to_string();
  doc["method"] = std::string(method_name(report.method));
  if (report.samples) doc["samples"] = *report.samples;
  if (report.seed) doc["seed"] = *report.seed;
  if (report.sample_variance) doc["sample_variance"] = report.sample_variance->to_string();
  if (report.standard_error) doc["standard_error"] = *report.standard_error;
  return doc.dump(2);
}

MomentReport moment_report_from_json(std::string_view text) {
  const json doc = parse_document(text);
  MomentReport r;
  r.statistic = parse_statistic(field<std::string>(doc, "statistic"));
  if (field<std::string>(doc, "scope") == "class") r.lambda = Partition::parse(field<std::string>(doc, "partition"));
  r.n = field<int>(doc, "n");
  r.k = field<unsigned>(doc, "k");
  r.value = Rational::parse(field<std::string>(doc, "value"));
  r.method = parse_method(field<std::string>(doc, "method"));
  if (doc.contains("samples")) r.samples = field<std::uint64_t>(doc, "samples");
  if (doc.contains("seed")) r.seed = field<std::uint64_t>(doc, "seed");
  if (doc.contains("sample_variance")) r.sample_variance = Rational::parse(field<std::string>(doc, "sample_variance"));
  if (doc.contains("standard_error")) r.standard_error = field<double>(doc, "standard_error");
  return r;
}

std::string to_json(const TupleClassification& c) {
  json doc;
  doc["case"] = std::string(tuple_case_name(c.kind));
  doc["merged"] = c.merged.to_string();
  doc["t"] = c.t;
  doc["s"] = c.s;
  return doc.dump(2);
}

std::string ats_table_to_json(const AtsTable& table, std::string_view family, unsigned k) {
  json doc;
  doc["family"] = std::string(family);
  doc["k"] = k;
  json rows = json::array();
  for (const auto& [ts, count] : table) {
    rows.push_back({{"t", ts.first}, {"s", ts.second}, {"count", count.get_str()}});
  }
  doc["entries"] = rows;
  return doc.dump(2);
}

AtsTable ats_table_from_json(std::string_view text) {
  const json doc = parse_document(text);
  AtsTable table;
  if (!doc.contains("entries") || !doc["entries"].is_array()) throw ParseError("missing JSON field 'entries'");
  for (const auto& row : doc["entries"]) {
    table[{field<int>(row, "t"), field<int>(row, "s")}] = BigInt(field<std::string>(row, "count"));
  }
  return table;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::vector<std::string> split_csv_record(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  if (quoted) throw ParseError("unterminated quoted CSV field");
  return fields;
}

void write_histogram_csv(std::ostream& out, const Histogram& hist) {
  out << "value,count\n";
  for (const auto& [v, c] : hist) out << v << ',' << c << '\n';
}

Histogram read_histogram_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || split_csv_record(line) != std::vector<std::string>{"value", "count"}) {
    throw ParseError("histogram CSV must start with the header 'value,count'");
  }
  Histogram hist;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_record(line);
    if (f.size() != 2) throw ParseError("histogram CSV row needs 2 fields: " + line);
    try {
      hist[std::stoll(f[0])] = std::stoull(f[1]);
    } catch (const std::logic_error&) {
      throw ParseError("bad histogram CSV row: " + line);
    }
  }
  return hist;
}

void write_joint_histogram_csv(std::ostream& out, const JointHistogram& hist, std::string_view x_name,
                               std::string_view y_name) {
  out << csv_field(x_name) << ',' << csv_field(y_name) << ",count\n";
  for (const auto& [xy, c] : hist) out << xy.first << ',' << xy.second << ',' << c << '\n';
}

}  // namespace permstat
