#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/rational.hpp"

namespace permstat {

/// Integer partition of n, parts stored weakly decreasing.
///
/// Indexes the conjugacy class C_lambda of S_n. part_count(i) is a_i, the
/// number of parts equal to i.
class Partition {
public:
  Partition() = default;
  /// Parts in any order; they are sorted. Throws DomainError on a part < 1.
  explicit Partition(std::vector<int> parts);

  /// (1^n): the identity class.
  static Partition ones(int n);
  /// (n): the class of n-cycles.
  static Partition single(int n);

  /// Accepts "5,4", "1^2,3", "2^2", optionally wrapped in parentheses.
  static Partition parse(std::string_view text);

  int n() const { return n_; }
  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int part_count(int size) const;
  /// Smallest part; 0 for the empty partition.
  int min_part() const { return parts_.empty() ? 0 : parts_.back(); }

  /// "(5,4)", "(3,1,1)", "()" for the empty partition.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Order of the centralizer of any permutation of cycle type lambda:
/// prod_i i^{a_i} a_i!.
BigInt z_lambda(const Partition& lambda);

/// |C_lambda| = n! / z_lambda.
BigInt class_size(const Partition& lambda);

/// Every partition of n whose parts are all >= min_part, each exactly once,
/// in reverse lexicographic order ((n) first).
std::vector<Partition> enumerate_partitions(int n, int min_part = 1);

void for_each_partition(int n, int min_part, const std::function<void(const Partition&)>& visit);

}  // namespace permstat
