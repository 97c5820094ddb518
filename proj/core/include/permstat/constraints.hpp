#pragma once

#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permstat/partition.hpp"
#include "permstat/permutation.hpp"
#include "permstat/polynomial.hpp"
#include "permstat/rational.hpp"
#include "permstat/statistics.hpp"

namespace permstat {

/// (input, output): a permutation w meets the pair when w(input) == output.
using ConstraintPair = std::pair<int, int>;

/// A finite set of (input, output) pairs, kept sorted and deduplicated.
class Constraint {
public:
  Constraint() = default;
  /// Throws DomainError on a symbol < 1.
  explicit Constraint(std::vector<ConstraintPair> pairs);

  /// Accepts "{(1,2),(2,3)}"; "{}" is the empty constraint.
  static Constraint parse(std::string_view text);

  const std::vector<ConstraintPair>& pairs() const { return pairs_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  /// Distinct symbols appearing as an input or an output, ascending.
  std::vector<int> support() const;
  /// Largest symbol in the support; 0 when empty.
  int max_symbol() const;

  /// Image of the constraint under a symbol map; `map[x - 1]` replaces x.
  Constraint relabel(std::span<const int> map) const;
  /// Relabels the support order-preservingly onto [s], s = |support|.
  Constraint standardize() const;

  std::string to_string() const;

  friend bool operator==(const Constraint&, const Constraint&) = default;
  friend auto operator<=>(const Constraint&, const Constraint&) = default;

private:
  std::vector<ConstraintPair> pairs_;
};

/// Inputs pairwise distinct and outputs pairwise distinct.
bool is_well_defined(const Constraint& k);

/// Well-defined and the directed graph input -> output has no cycle; a
/// fixed-point pair (i, i) is a loop and counts as a cycle.
bool is_acyclic(const Constraint& k);

/// w(i) == j for every pair. Throws DomainError when the support exceeds n.
bool satisfies(const Permutation& w, const Constraint& k);

/// Probability that a uniform element of S_n satisfies k: (n-m)!/n! for a
/// well-defined k of size m, 0 otherwise.
Rational prob_satisfies_sn(const Constraint& k, int n);

/// Probability over C_lambda. Requires every part of lambda >= size(k) + 1;
/// otherwise DomainError (enumerate the class instead). Acyclic k gives
/// 1/((n-1)(n-2)...(n-m)); cyclic or ill-defined k gives 0.
Rational prob_satisfies_class(const Constraint& k, const Partition& lambda);

enum class TupleCase { not_well_defined, cyclic, acyclic };
std::string_view tuple_case_name(TupleCase c);

/// A k-tuple of constraints reduced to its union.
struct TupleClassification {
  TupleCase kind = TupleCase::acyclic;
  Constraint merged;
  int t = 0;  // pairs in the union
  int s = 0;  // symbols in its support
};

TupleClassification classify_tuple(std::span<const Constraint> tuple);

/// A set of constraints with optional rational weights. The induced
/// statistic is X(w) = sum of wt(K) [w satisfies K]; unweighted sets use
/// weight 1 throughout.
class ConstraintSet {
public:
  /// Set semantics: a constraint already present is left as it is.
  void insert(const Constraint& k);
  /// Marks the set weighted and adds `weight` to K's weight; a constraint
  /// whose weight reaches zero is removed.
  void add_weighted(const Constraint& k, const Rational& weight);

  bool weighted() const { return weighted_; }
  /// Number of constraints.
  std::size_t count() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  /// Largest constraint size; 0 for the empty set.
  int size() const;
  int max_symbol() const;
  bool contains(const Constraint& k) const { return entries_.count(k) != 0; }
  Rational weight(const Constraint& k) const;

  const std::map<Constraint, Rational>& entries() const { return entries_; }

  /// The induced statistic.
  Rational evaluate(const Permutation& w) const;

  friend bool operator==(const ConstraintSet&, const ConstraintSet&) = default;

private:
  std::map<Constraint, Rational> entries_;
  bool weighted_ = false;
};

/// One constraint per line, optionally followed by "| weight"; blank lines
/// and lines starting with '#' are skipped. Any weight makes the set
/// weighted. Throws ParseError with the offending line number.
ConstraintSet parse_constraint_set(std::istream& in);
std::string format_constraint_set(const ConstraintSet& set);

/// Statistics that come with a constraint set realizing them.
bool has_builtin_constraint_set(StatisticId id);

/// Constraint set whose induced statistic equals the evaluator for `id` on
/// every permutation of [n]. maj, baj and baj_minus_inv are weighted.
ConstraintSet builtin_constraint_set(StatisticId id, int n);

/// Size of the built-in realization for large n.
int builtin_constraint_size(StatisticId id);

/// A constraint set for every n, e.g. C_inv(n).
struct ConstraintFamily {
  std::string name;
  int size = 0;
  std::function<ConstraintSet(int)> at;
};

ConstraintFamily builtin_family(StatisticId id);

/// Family generated from `base` on [n0] by symmetric_extension.
ConstraintFamily extension_family(std::string name, ConstraintSet base, int n0);

/// Closed under every order-preserving relabeling of each constraint's
/// support into [n]: for each standardized pattern P on [s], all C(n, s)
/// relabelings are present (and, when weighted, share one weight).
bool is_symmetric(const ConstraintSet& set, int n);

/// For n <= n0, the constraints of `base` supported in [n]; for n > n0, the
/// images of `base` under every order-preserving map [n0] -> [n]. Throws
/// DomainError when `base` is not symmetric on [n0].
ConstraintSet symmetric_extension(const ConstraintSet& base, int n0, int n);

/// Enumeration controls shared by the exhaustive tuple and class scans.
struct ScanOptions {
  unsigned jobs = 1;
};

/// E_lambda[X^k] for the statistic induced by `set`, summed over ordered
/// k-tuples of constraints: sum of prod wt(K_r) / ((n-1)...(n-t)) over
/// tuples whose union is acyclic with t pairs. Requires every part of
/// lambda >= size(set) * k + 1 and the set supported in [n].
Rational moment_via_constraints(const ConstraintSet& set, unsigned k, const Partition& lambda,
                                const ScanOptions& options = {});

/// a_{t,s}: ordered k-tuples over family.at(s) whose union is acyclic, has
/// t pairs and support exactly [s].
BigInt count_acyclic_tuples(const ConstraintFamily& family, unsigned k, int t, int s,
                            const ScanOptions& options = {});

/// Every nonzero a_{t,s} for s <= 2 m k, keyed by (t, s).
using AtsTable = std::map<std::pair<int, int>, BigInt>;
AtsTable ats_table(const ConstraintFamily& family, unsigned k, const ScanOptions& options = {});

/// sum over (t, s) of a_{t,s}/s! * n (n-t-1)(n-t-2)...(n-s+1). Valid for
/// every class whose parts are all >= m k + 1. Throws DomainError when the
/// family is weighted or not symmetric.
Polynomial moment_polynomial_via_ats(const ConstraintFamily& family, unsigned k,
                                     const ScanOptions& options = {});
Polynomial polynomial_from_ats(const AtsTable& table);

}  // namespace permstat
