#pragma once

#include <cstdint>
#include <random>

#include "permstat/partition.hpp"
#include "permstat/permutation.hpp"

namespace permstat {

/// Random source for every seeded computation: std::mt19937_64, whose output
/// sequence for a given seed is fixed by the C++ standard. Bounded draws use
/// rejection sampling on the raw 64-bit output (never a std:: distribution,
/// whose algorithms are implementation-defined), so a seed reproduces the same
/// draws on every platform.
using Engine = std::mt19937_64;

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of stream `stream` derived from `root`:
/// splitmix64(root + (stream + 1) * 0x9E3779B97F4A7C15).
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream);

/// Uniform integer in [0, bound). bound must be positive.
std::uint64_t uniform_below(Engine& engine, std::uint64_t bound);

/// Uniform element of C_lambda: [n] is shuffled (Fisher-Yates) and poured
/// into the fixed template whose cycles are consecutive runs of lengths
/// lambda_1, lambda_2, ...; every class element arises from exactly z_lambda
/// shuffles.
Permutation sample_class_uniform(const Partition& lambda, Engine& engine);
Permutation sample_class_uniform(const Partition& lambda, std::uint64_t seed);

/// Uniform element of S_n.
Permutation sample_uniform(int n, Engine& engine);

}  // namespace permstat
