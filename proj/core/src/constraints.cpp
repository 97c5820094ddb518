#include "permstat/constraints.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>

#include "permstat/enumerate.hpp"
#include "permstat/errors.hpp"

namespace permstat {

namespace {

std::string trim(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

// Partial union of constraints with O(1) conflict checks and undo.
class MergeState {
public:
  enum class Status { ok, not_well_defined, cyclic };

  explicit MergeState(int max_symbol)
      : out_(static_cast<std::size_t>(max_symbol) + 1, 0),
        in_(static_cast<std::size_t>(max_symbol) + 1, 0),
        uses_(static_cast<std::size_t>(max_symbol) + 1, 0) {}

  std::size_t mark() const { return log_.size(); }
  int pairs() const { return static_cast<int>(log_.size()); }
  int support() const { return support_; }

  Status add(const Constraint& k) {
    for (const auto& [a, b] : k.pairs()) {
      if (out_[a] == b) continue;
      if (out_[a] != 0 || in_[b] != 0) return Status::not_well_defined;
      int x = b;
      while (x != a && out_[x] != 0) x = out_[x];
      if (x == a) return Status::cyclic;
      out_[a] = b;
      in_[b] = a;
      touch(a, +1);
      touch(b, +1);
      log_.emplace_back(a, b);
    }
    return Status::ok;
  }

  void undo(std::size_t mark) {
    while (log_.size() > mark) {
      const auto [a, b] = log_.back();
      log_.pop_back();
      out_[a] = 0;
      in_[b] = 0;
      touch(a, -1);
      touch(b, -1);
    }
  }

private:
  void touch(int x, int delta) {
    auto& u = uses_[static_cast<std::size_t>(x)];
    if (u == 0 && delta > 0) ++support_;
    u += delta;
    if (u == 0 && delta < 0) --support_;
  }

  std::vector<int> out_;
  std::vector<int> in_;
  std::vector<int> uses_;
  std::vector<ConstraintPair> log_;
  int support_ = 0;
};

struct Item {
  Constraint constraint;
  Rational weight;
};

std::vector<Item> items_of(const ConstraintSet& set) {
  std::vector<Item> items;
  items.reserve(set.count());
  for (const auto& [k, w] : set.entries()) items.push_back({k, w});
  return items;
}

// Walks every ordered k-tuple over `items` whose running union stays
// well-defined and acyclic; `leaf(state, weight)` sees each surviving tuple.
// `keep(state, depth)` may prune a partial tuple. Shards split on the first
// component.
template <typename Leaf, typename Keep>
void walk_tuples(const std::vector<Item>& items, unsigned k, int max_symbol, bool weighted,
                 Shard shard, Keep keep, Leaf leaf) {
  MergeState state(max_symbol);
  std::vector<Rational> weight_stack(k + 1, Rational(1));

  std::function<void(unsigned)> recurse = [&](unsigned depth) {
    if (depth == k) {
      leaf(state, weight_stack[depth]);
      return;
    }
    for (std::size_t idx = 0; idx < items.size(); ++idx) {
      if (depth == 0 && !shard.owns(idx)) continue;
      const std::size_t mark = state.mark();
      if (state.add(items[idx].constraint) == MergeState::Status::ok && keep(state, depth + 1)) {
        if (weighted) weight_stack[depth + 1] = weight_stack[depth] * items[idx].weight;
        recurse(depth + 1);
      }
      state.undo(mark);
    }
  };

  if (k == 0) {
    if (shard.index == 0) leaf(state, weight_stack[0]);
    return;
  }
  recurse(0);
}

unsigned shard_count_for(const ScanOptions& options) { return std::max(1U, options.jobs); }

std::vector<std::uint64_t> count_by_pairs(const ConstraintSet& set, unsigned k, int s,
                                          int max_pairs_per_constraint, const ScanOptions& options) {
  const auto items = items_of(set);
  const int max_symbol = std::max(s, set.max_symbol());
  const int pair_cap = max_pairs_per_constraint * static_cast<int>(k);
  auto shards = run_shards<std::vector<std::uint64_t>>(
      options.jobs, shard_count_for(options), [&](Shard shard) {
        std::vector<std::uint64_t> counts(static_cast<std::size_t>(pair_cap) + 1, 0);
        walk_tuples(
            items, k, max_symbol, false, shard,
            [&](const MergeState& st, unsigned depth) {
              // Each later constraint adds at most 2 m new symbols.
              const int reachable = st.support() + 2 * max_pairs_per_constraint * static_cast<int>(k - depth);
              return reachable >= s;
            },
            [&](const MergeState& st, const Rational&) {
              if (st.support() == s) ++counts[static_cast<std::size_t>(st.pairs())];
            });
        return counts;
      });
  std::vector<std::uint64_t> total(static_cast<std::size_t>(pair_cap) + 1, 0);
  for (const auto& part : shards) {
    for (std::size_t t = 0; t < part.size(); ++t) total[t] += part[t];
  }
  return total;
}

void add_pair_constraints(ConstraintSet& set, int i, int j, int n) {
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b < a; ++b) set.insert(Constraint({{i, a}, {j, b}}));
  }
}

}  // namespace

Constraint::Constraint(std::vector<ConstraintPair> pairs) : pairs_(std::move(pairs)) {
  for (const auto& [a, b] : pairs_) {
    if (a < 1 || b < 1) throw DomainError("constraint symbols must be >= 1");
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

Constraint Constraint::parse(std::string_view text) {
  const std::string s = trim(text);
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad constraint '" + std::string(text) + "': " + why);
  };
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') throw fail("expected {(a,b),...}");
  std::vector<ConstraintPair> pairs;
  std::size_t pos = 1;
  const std::size_t end = s.size() - 1;
  auto skip_space = [&] {
    while (pos < end && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto read_int = [&]() -> int {
    skip_space();
    std::size_t start = pos;
    while (pos < end && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw fail("expected a positive integer");
    if (pos - start > 9) throw fail("symbol too large");
    return std::stoi(s.substr(start, pos - start));
  };
  auto expect = [&](char c) {
    skip_space();
    if (pos >= end || s[pos] != c) throw fail(std::string("expected '") + c + "'");
    ++pos;
  };
  skip_space();
  while (pos < end) {
    expect('(');
    const int a = read_int();
    expect(',');
    const int b = read_int();
    expect(')');
    if (a < 1 || b < 1) throw fail("symbols must be >= 1");
    pairs.emplace_back(a, b);
    skip_space();
    if (pos < end) expect(',');
    skip_space();
  }
  return Constraint(std::move(pairs));
}

std::vector<int> Constraint::support() const {
  std::vector<int> out;
  for (const auto& [a, b] : pairs_) {
    out.push_back(a);
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int Constraint::max_symbol() const {
  int m = 0;
  for (const auto& [a, b] : pairs_) m = std::max({m, a, b});
  return m;
}

Constraint Constraint::relabel(std::span<const int> map) const {
  std::vector<ConstraintPair> out;
  out.reserve(pairs_.size());
  for (const auto& [a, b] : pairs_) {
    if (static_cast<std::size_t>(std::max(a, b)) > map.size()) {
      throw DomainError("relabel map does not cover the constraint support");
    }
    out.emplace_back(map[static_cast<std::size_t>(a - 1)], map[static_cast<std::size_t>(b - 1)]);
  }
  return Constraint(std::move(out));
}

Constraint Constraint::standardize() const {
  const auto sup = support();
  std::vector<int> map(static_cast<std::size_t>(max_symbol()), 0);
  for (std::size_t r = 0; r < sup.size(); ++r) map[static_cast<std::size_t>(sup[r] - 1)] = static_cast<int>(r) + 1;
  return relabel(map);
}

std::string Constraint::to_string() const {
  std::string out = "{";
  for (std::size_t r = 0; r < pairs_.size(); ++r) {
    if (r) out += ',';
    out += '(' + std::to_string(pairs_[r].first) + ',' + std::to_string(pairs_[r].second) + ')';
  }
  return out + '}';
}

bool is_well_defined(const Constraint& k) {
  std::vector<int> inputs;
  std::vector<int> outputs;
  for (const auto& [a, b] : k.pairs()) {
    inputs.push_back(a);
    outputs.push_back(b);
  }
  std::sort(inputs.begin(), inputs.end());
  std::sort(outputs.begin(), outputs.end());
  return std::adjacent_find(inputs.begin(), inputs.end()) == inputs.end() &&
         std::adjacent_find(outputs.begin(), outputs.end()) == outputs.end();
}

bool is_acyclic(const Constraint& k) {
  if (!is_well_defined(k)) return false;
  std::map<int, int> next;
  for (const auto& [a, b] : k.pairs()) next[a] = b;
  // Out-degree is at most one, so a cycle is found by walking at most
  // size() steps from each start.
  for (const auto& [start, unused] : next) {
    int x = start;
    for (int steps = 0; steps < k.size(); ++steps) {
      const auto it = next.find(x);
      if (it == next.end()) break;
      x = it->second;
      if (x == start) return false;
    }
  }
  return true;
}

bool satisfies(const Permutation& w, const Constraint& k) {
  if (k.max_symbol() > w.n()) {
    throw DomainError("constraint " + k.to_string() + " is not supported in [" + std::to_string(w.n()) + "]");
  }
  for (const auto& [a, b] : k.pairs()) {
    if (w(a) != b) return false;
  }
  return true;
}

Rational prob_satisfies_sn(const Constraint& k, int n) {
  if (k.max_symbol() > n) {
    throw DomainError("constraint " + k.to_string() + " is not supported in [" + std::to_string(n) + "]");
  }
  if (!is_well_defined(k)) return Rational(0);
  return Rational(BigInt(1), falling_factorial(n, k.size()));
}

Rational prob_satisfies_class(const Constraint& k, const Partition& lambda) {
  const int n = lambda.n();
  if (k.max_symbol() > n) {
    throw DomainError("constraint " + k.to_string() + " is not supported in [" + std::to_string(n) + "]");
  }
  if (lambda.min_part() < k.size() + 1) {
    throw DomainError("prob_satisfies_class: every part of " + lambda.to_string() + " must be >= " +
                      std::to_string(k.size() + 1) + "; enumerate the class instead");
  }
  if (!is_acyclic(k)) return Rational(0);
  return Rational(BigInt(1), falling_factorial(n - 1, k.size()));
}

std::string_view tuple_case_name(TupleCase c) {
  switch (c) {
    case TupleCase::not_well_defined: return "not_well_defined";
    case TupleCase::cyclic: return "cyclic";
    case TupleCase::acyclic: return "acyclic";
  }
  return "?";
}

TupleClassification classify_tuple(std::span<const Constraint> tuple) {
  std::vector<ConstraintPair> all;
  for (const auto& k : tuple) all.insert(all.end(), k.pairs().begin(), k.pairs().end());
  TupleClassification out;
  out.merged = Constraint(std::move(all));
  out.t = out.merged.size();
  out.s = static_cast<int>(out.merged.support().size());
  if (!is_well_defined(out.merged)) {
    out.kind = TupleCase::not_well_defined;
  } else if (!is_acyclic(out.merged)) {
    out.kind = TupleCase::cyclic;
  } else {
    out.kind = TupleCase::acyclic;
  }
  return out;
}

void ConstraintSet::insert(const Constraint& k) { entries_.try_emplace(k, Rational(1)); }

void ConstraintSet::add_weighted(const Constraint& k, const Rational& weight) {
  weighted_ = true;
  auto [it, inserted] = entries_.try_emplace(k, weight);
  if (!inserted) it->second += weight;
  if (it->second.is_zero()) entries_.erase(it);
}

int ConstraintSet::size() const {
  int m = 0;
  for (const auto& [k, w] : entries_) m = std::max(m, k.size());
  return m;
}

int ConstraintSet::max_symbol() const {
  int m = 0;
  for (const auto& [k, w] : entries_) m = std::max(m, k.max_symbol());
  return m;
}

Rational ConstraintSet::weight(const Constraint& k) const {
  const auto it = entries_.find(k);
  return it == entries_.end() ? Rational(0) : it->second;
}

Rational ConstraintSet::evaluate(const Permutation& w) const {
  Rational total;
  for (const auto& [k, weight] : entries_) {
    if (satisfies(w, k)) total += weight;
  }
  return total;
}

ConstraintSet parse_constraint_set(std::istream& in) {
  ConstraintSet set;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    try {
      const auto bar = body.find('|');
      if (bar == std::string::npos) {
        set.insert(Constraint::parse(body));
      } else {
        const auto weight = Rational::parse(trim(std::string_view(body).substr(bar + 1)));
        if (weight.is_zero()) throw ParseError("zero weight");
        set.add_weighted(Constraint::parse(body.substr(0, bar)), weight);
      }
    } catch (const std::exception& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return set;
}

std::string format_constraint_set(const ConstraintSet& set) {
  std::ostringstream out;
  for (const auto& [k, w] : set.entries()) {
    out << k.to_string();
    if (set.weighted()) out << " | " << w.to_string();
    out << '\n';
  }
  return out.str();
}

bool has_builtin_constraint_set(StatisticId) { return true; }

int builtin_constraint_size(StatisticId id) {
  switch (id) {
    case StatisticId::exc:
    case StatisticId::weak_exc:
    case StatisticId::aexc:
    case StatisticId::fix: return 1;
    case StatisticId::ile: return 3;
    default: return 2;
  }
}

ConstraintSet builtin_constraint_set(StatisticId id, int n) {
  if (n < 1) throw DomainError("builtin_constraint_set: requires n >= 1");
  ConstraintSet set;
  auto descents = [&](auto weight_of) {
    for (int i = 1; i < n; ++i) {
      for (int a = 1; a <= n; ++a) {
        for (int b = 1; b < a; ++b) set.add_weighted(Constraint({{i, a}, {i + 1, b}}), weight_of(i));
      }
    }
  };
  switch (id) {
    case StatisticId::inv:
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) add_pair_constraints(set, i, j, n);
      }
      break;
    case StatisticId::des:
      for (int i = 1; i < n; ++i) add_pair_constraints(set, i, i + 1, n);
      break;
    case StatisticId::maj: descents([](int i) { return Rational(i); }); break;
    case StatisticId::baj:
      descents([n](int i) { return Rational(static_cast<long long>(i) * (n - i)); });
      break;
    case StatisticId::baj_minus_inv:
      descents([n](int i) { return Rational(static_cast<long long>(i) * (n - i)); });
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          for (int a = 1; a <= n; ++a) {
            for (int b = 1; b < a; ++b) set.add_weighted(Constraint({{i, a}, {j, b}}), Rational(-1));
          }
        }
      }
      break;
    case StatisticId::cdes:
      for (int i = 1; i < n; ++i) add_pair_constraints(set, i, i + 1, n);
      for (int a = 1; a <= n; ++a) {
        for (int b = 1; b < a; ++b) {
          if (n > 1) set.insert(Constraint({{n, a}, {1, b}}));
        }
      }
      break;
    case StatisticId::exc:
    case StatisticId::weak_exc:
    case StatisticId::aexc:
    case StatisticId::fix:
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          const bool keep = (id == StatisticId::exc && j > i) || (id == StatisticId::weak_exc && j >= i) ||
                            (id == StatisticId::aexc && j < i) || (id == StatisticId::fix && j == i);
          if (keep) set.insert(Constraint({{i, j}}));
        }
      }
      break;
    case StatisticId::cda:
    case StatisticId::cdd:
    case StatisticId::cv:
    case StatisticId::cpk:
      // {(a, i), (i, b)}: w^{-1}(i) = a and w(i) = b.
      for (int i = 1; i <= n; ++i) {
        for (int a = 1; a <= n; ++a) {
          for (int b = 1; b <= n; ++b) {
            if (a == i || b == i) continue;
            const bool keep = (id == StatisticId::cda && a < i && i < b) ||
                              (id == StatisticId::cdd && a > i && i > b) ||
                              (id == StatisticId::cv && a > i && i < b) ||
                              (id == StatisticId::cpk && a < i && i > b);
            if (keep) set.insert(Constraint({{a, i}, {i, b}}));
          }
        }
      }
      break;
    case StatisticId::ile:
      // w(i) = a, w(j) = b, w(k) = j with i < j < b < a and k < j.
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          for (int b = j + 1; b <= n; ++b) {
            for (int a = b + 1; a <= n; ++a) {
              for (int k = 1; k < j; ++k) set.insert(Constraint({{i, a}, {j, b}, {k, j}}));
            }
          }
        }
      }
      break;
    case StatisticId::den:
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          for (int a = 1; a <= n; ++a) {
            for (int b = 1; b <= n; ++b) {
              const bool keep = (b < a && a <= j) || (a <= j && j < b) || (j < b && b < a);
              if (keep) set.insert(Constraint({{i, a}, {j, b}}));
            }
          }
        }
      }
      break;
  }
  return set;
}

ConstraintFamily builtin_family(StatisticId id) {
  return {std::string(statistic_name(id)), builtin_constraint_size(id),
          [id](int n) { return builtin_constraint_set(id, n); }};
}

ConstraintFamily extension_family(std::string name, ConstraintSet base, int n0) {
  const int size = base.size();
  if (!is_symmetric(base, n0)) throw DomainError("extension_family: base set is not symmetric on [" + std::to_string(n0) + "]");
  return {std::move(name), size,
          [base = std::move(base), n0](int n) { return symmetric_extension(base, n0, n); }};
}

bool is_symmetric(const ConstraintSet& set, int n) {
  if (set.max_symbol() > n) {
    throw DomainError("is_symmetric: set is not supported in [" + std::to_string(n) + "]");
  }
  std::map<std::pair<Constraint, Rational>, BigInt> pattern_counts;
  for (const auto& [k, w] : set.entries()) ++pattern_counts[{k.standardize(), w}];
  // A pattern on [s] has exactly C(n, s) order-preserving images, and
  // distinct images of one pattern are distinct constraints; closure means
  // all of them occur. Equal weights are required per pattern, so a
  // pattern split across two weights fails the count.
  for (const auto& [key, count] : pattern_counts) {
    const auto s = static_cast<long long>(key.first.support().size());
    if (count != binomial(n, s)) return false;
  }
  return true;
}

ConstraintSet symmetric_extension(const ConstraintSet& base, int n0, int n) {
  if (!is_symmetric(base, n0)) {
    throw DomainError("symmetric_extension: base set is not symmetric on [" + std::to_string(n0) + "]");
  }
  ConstraintSet out;
  auto put = [&](const Constraint& k, const Rational& w) {
    if (out.contains(k)) return;
    if (base.weighted()) {
      out.add_weighted(k, w);
    } else {
      out.insert(k);
    }
  };
  if (n <= n0) {
    for (const auto& [k, w] : base.entries()) {
      if (k.max_symbol() <= n) put(k, w);
    }
    return out;
  }
  // Order-preserving maps [n0] -> [n] are the n0-subsets of [n] in order.
  std::vector<int> image(static_cast<std::size_t>(n0));
  for (int r = 0; r < n0; ++r) image[static_cast<std::size_t>(r)] = r + 1;
  while (true) {
    for (const auto& [k, w] : base.entries()) put(k.relabel(image), w);
    int r = n0 - 1;
    while (r >= 0 && image[static_cast<std::size_t>(r)] == n - n0 + r + 1) --r;
    if (r < 0) break;
    ++image[static_cast<std::size_t>(r)];
    for (int q = r + 1; q < n0; ++q) image[static_cast<std::size_t>(q)] = image[static_cast<std::size_t>(q - 1)] + 1;
  }
  return out;
}

Rational moment_via_constraints(const ConstraintSet& set, unsigned k, const Partition& lambda,
                                const ScanOptions& options) {
  const int n = lambda.n();
  const int need = set.size() * static_cast<int>(k) + 1;
  if (lambda.min_part() < need) {
    throw DomainError("moment_via_constraints: every part of " + lambda.to_string() + " must be >= " +
                      std::to_string(need) + " (size " + std::to_string(set.size()) + ", k = " +
                      std::to_string(k) + ")");
  }
  if (set.max_symbol() > n) {
    throw DomainError("moment_via_constraints: set is not supported in [" + std::to_string(n) + "]");
  }
  const auto items = items_of(set);
  const int pair_cap = set.size() * static_cast<int>(k);
  const bool weighted = set.weighted();
  // Per union size t: tuple count (unweighted) or weight sum (weighted).
  struct Partial {
    std::vector<std::uint64_t> counts;
    std::vector<Rational> weights;
  };
  auto shards = run_shards<Partial>(options.jobs, shard_count_for(options), [&](Shard shard) {
    Partial p{std::vector<std::uint64_t>(static_cast<std::size_t>(pair_cap) + 1, 0),
              std::vector<Rational>(static_cast<std::size_t>(pair_cap) + 1)};
    walk_tuples(
        items, k, n, weighted, shard, [](const MergeState&, unsigned) { return true; },
        [&](const MergeState& st, const Rational& w) {
          const auto t = static_cast<std::size_t>(st.pairs());
          if (weighted) {
            p.weights[t] += w;
          } else {
            ++p.counts[t];
          }
        });
    return p;
  });
  Rational total;
  for (int t = 0; t <= pair_cap; ++t) {
    Rational mass;
    for (const auto& p : shards) {
      mass += weighted ? p.weights[static_cast<std::size_t>(t)]
                       : Rational(BigInt(std::to_string(p.counts[static_cast<std::size_t>(t)])));
    }
    if (!mass.is_zero()) total += mass / Rational(falling_factorial(n - 1, t));
  }
  return total;
}

BigInt count_acyclic_tuples(const ConstraintFamily& family, unsigned k, int t, int s,
                            const ScanOptions& options) {
  if (s < 1 || t < 0) return 0;
  const auto counts = count_by_pairs(family.at(s), k, s, family.size, options);
  if (static_cast<std::size_t>(t) >= counts.size()) return 0;
  return BigInt(std::to_string(counts[static_cast<std::size_t>(t)]));
}

AtsTable ats_table(const ConstraintFamily& family, unsigned k, const ScanOptions& options) {
  if (k == 0) throw DomainError("ats_table: requires k >= 1");
  AtsTable table;
  const int s_max = 2 * family.size * static_cast<int>(k);
  for (int s = 1; s <= s_max; ++s) {
    const auto counts = count_by_pairs(family.at(s), k, s, family.size, options);
    for (std::size_t t = 0; t < counts.size(); ++t) {
      if (counts[t] != 0) table[{static_cast<int>(t), s}] = BigInt(std::to_string(counts[t]));
    }
  }
  return table;
}

Polynomial polynomial_from_ats(const AtsTable& table) {
  Polynomial total;
  for (const auto& [ts, count] : table) {
    const auto [t, s] = ts;
    Polynomial term = Polynomial::identity();
    for (int r = t + 1; r <= s - 1; ++r) term *= Polynomial::linear_factor(Rational(r));
    total += term * Rational(count, factorial(s));
  }
  return total;
}

Polynomial moment_polynomial_via_ats(const ConstraintFamily& family, unsigned k,
                                     const ScanOptions& options) {
  const int s_max = 2 * family.size * static_cast<int>(k);
  const auto top = family.at(s_max);
  if (top.weighted()) {
    throw DomainError("moment_polynomial_via_ats: " + family.name + " is weighted; use the tuple sum or interpolation");
  }
  if (!is_symmetric(top, s_max)) {
    throw DomainError("moment_polynomial_via_ats: " + family.name + " is not symmetric; use the tuple sum or interpolation");
  }
  return polynomial_from_ats(ats_table(family, k, options));
}

}  // namespace permstat
