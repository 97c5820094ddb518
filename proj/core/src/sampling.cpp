#include "permstat/sampling.hpp"

#include <limits>
#include <numeric>

#include "permstat/errors.hpp"

namespace permstat {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
  return splitmix64(root + (stream + 1) * 0x9E3779B97F4A7C15ULL);
}

std::uint64_t uniform_below(Engine& engine, std::uint64_t bound) {
  if (bound == 0) throw DomainError("uniform_below with zero bound");
  // Largest multiple of bound that fits; draws above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine();
  while (x >= limit) x = engine();
  return x % bound;
}

namespace {

std::vector<int> shuffled(int n, Engine& engine) {
  std::vector<int> symbols(static_cast<std::size_t>(n));
  std::iota(symbols.begin(), symbols.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    const auto j = uniform_below(engine, static_cast<std::uint64_t>(i) + 1);
    std::swap(symbols[static_cast<std::size_t>(i)], symbols[j]);
  }
  return symbols;
}

}  // namespace

Permutation sample_class_uniform(const Partition& lambda, Engine& engine) {
  const int n = lambda.n();
  const auto symbols = shuffled(n, engine);
  PermutationBuilder out(n);
  std::size_t pos = 0;
  for (int len : lambda.parts()) {
    for (int k = 0; k < len; ++k) {
      const int from = symbols[pos + static_cast<std::size_t>(k)];
      const int to = symbols[pos + static_cast<std::size_t>((k + 1) % len)];
      out.set(from, to);
    }
    pos += static_cast<std::size_t>(len);
  }
  return out.view();
}

Permutation sample_class_uniform(const Partition& lambda, std::uint64_t seed) {
  Engine engine(seed);
  return sample_class_uniform(lambda, engine);
}

Permutation sample_uniform(int n, Engine& engine) { return Permutation(shuffled(n, engine)); }

}  // namespace permstat
