#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>
#include <vector>

#include "permstat/partition.hpp"
#include "permstat/permutation.hpp"

namespace permstat {

/// Deterministic slice of an enumeration: branch b belongs to the shard iff
/// b % count == index. The union of all `count` shards is the full stream.
struct Shard {
  unsigned index = 0;
  unsigned count = 1;

  bool owns(unsigned long long branch) const { return branch % count == index; }
};

using PermutationVisitor = std::function<void(const Permutation&)>;

/// Visits every element of C_lambda exactly once.
///
/// Elements are built directly from cycle templates: the smallest unused
/// symbol always leads the next cycle, followed by an ordered choice of the
/// remaining cycle members. Branches are the (cycle length, successor of 1)
/// choices for the cycle containing 1. The visited Permutation is a reused
/// buffer; copy it to keep it.
void for_each_in_class(const Partition& lambda, const PermutationVisitor& visit, Shard shard = {});

/// Materialized C_lambda in enumeration order.
std::vector<Permutation> enumerate_class(const Partition& lambda);

/// Visits every element of S_n; branches are the values of w(1).
void for_each_permutation(int n, const PermutationVisitor& visit, Shard shard = {});

/// Runs `work(shard)` for shards 0..shard_count-1 across `jobs` threads and
/// returns the per-shard results in shard order, so merging them is
/// independent of the worker count.
template <typename Result, typename Work>
std::vector<Result> run_shards(unsigned jobs, unsigned shard_count, Work work) {
  std::vector<Result> results(shard_count);
  jobs = std::max(1U, std::min(jobs, shard_count));
  if (jobs == 1) {
    for (unsigned s = 0; s < shard_count; ++s) results[s] = work(Shard{s, shard_count});
    return results;
  }
  std::atomic<unsigned> next{0};
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned t = 0; t < jobs; ++t) {
    workers.emplace_back([&, t] {
      try {
        for (unsigned s = next++; s < shard_count; s = next++) results[s] = work(Shard{s, shard_count});
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace permstat
