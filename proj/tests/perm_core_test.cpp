#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "permstat/enumerate.hpp"
#include "permstat/errors.hpp"
#include "permstat/partition.hpp"
#include "permstat/permutation.hpp"
#include "permstat/sampling.hpp"

using namespace permstat;

TEST(Permutation, ParseAndValidate) {
  EXPECT_EQ(Permutation::parse("[2,3,1]").to_string(), "[2,3,1]");
  EXPECT_EQ(Permutation::parse(" 2, 1 "), Permutation({2, 1}));
  EXPECT_EQ(Permutation::parse("[]").n(), 0);
  EXPECT_THROW(Permutation::parse("[1,1]"), ParseError);
  EXPECT_THROW(Permutation::parse("[1,x]"), ParseError);
  EXPECT_THROW(Permutation({1, 3}), DomainError);
}

TEST(Permutation, InverseAndCompose) {
  const auto w = Permutation::parse("[2,3,4,1]");
  EXPECT_EQ(w.inverse(), Permutation({4, 1, 2, 3}));
  EXPECT_EQ(w.compose(w.inverse()), Permutation::identity(4));
  EXPECT_EQ(Permutation::reversal(3), Permutation({3, 2, 1}));
  EXPECT_EQ(Permutation::transposition(4, 2, 4), Permutation({1, 4, 3, 2}));
}

TEST(CycleType, Examples) {
  EXPECT_EQ(cycle_type(Permutation::identity(4)), Partition({1, 1, 1, 1}));
  EXPECT_EQ(cycle_type(Permutation({2, 3, 4, 1})), Partition({4}));
  EXPECT_EQ(cycle_type(Permutation({2, 1, 3})), Partition({2, 1}));
}

TEST(Partition, ParseForms) {
  EXPECT_EQ(Partition::parse("5,4"), Partition({5, 4}));
  EXPECT_EQ(Partition::parse("1^2,3"), Partition({3, 1, 1}));
  EXPECT_EQ(Partition::parse("(2^2)"), Partition({2, 2}));
  EXPECT_EQ(Partition::parse("4,5").to_string(), "(5,4)");
  for (const char* bad : {"", "0", "a", "2^", "^2", "1,,2", "-1"}) EXPECT_THROW(Partition::parse(bad), ParseError) << bad;
}

TEST(Partition, Accessors) {
  const auto p = Partition::parse("1^3,2^2,5");
  EXPECT_EQ(p.n(), 12);
  EXPECT_EQ(p.part_count(1), 3);
  EXPECT_EQ(p.part_count(2), 2);
  EXPECT_EQ(p.part_count(3), 0);
  EXPECT_EQ(p.min_part(), 1);
}

TEST(Centralizer, Examples) {
  EXPECT_EQ(z_lambda(Partition({1, 1, 1})), 6);
  EXPECT_EQ(z_lambda(Partition({3})), 3);
  EXPECT_EQ(z_lambda(Partition({2, 1})), 2);
  EXPECT_EQ(class_size(Partition::ones(6)), 1);
  EXPECT_EQ(class_size(Partition::single(6)), 120);
  EXPECT_EQ(class_size(Partition({2, 1})), 3);
}

TEST(Centralizer, ClassEquation) {
  for (int n = 0; n <= 10; ++n) {
    BigInt total = 0;
    for (const auto& lambda : enumerate_partitions(n)) total += class_size(lambda);
    EXPECT_EQ(total, factorial(n)) << n;
  }
}

TEST(Partitions, Enumeration) {
  EXPECT_EQ(enumerate_partitions(4).size(), 5U);
  EXPECT_EQ(enumerate_partitions(10, 5), (std::vector<Partition>{Partition({10}), Partition({5, 5})}));
  EXPECT_EQ(enumerate_partitions(9, 3),
            (std::vector<Partition>{Partition({9}), Partition({6, 3}), Partition({5, 4}), Partition({3, 3, 3})}));
  EXPECT_EQ(enumerate_partitions(0).size(), 1U);
  EXPECT_THROW(enumerate_partitions(-1), DomainError);
  EXPECT_THROW(enumerate_partitions(3, 0), DomainError);
  for (int n = 1; n <= 12; ++n) {
    for (int lo = 1; lo <= 4; ++lo) {
      std::vector<Partition> expected;
      for (auto& parts : oracle::partitions(n, lo)) expected.emplace_back(parts);
      EXPECT_EQ(enumerate_partitions(n, lo), expected);
    }
  }
}

TEST(ClassEnumeration, Examples) {
  const auto three = enumerate_class(Partition({3}));
  EXPECT_EQ(std::set<Permutation>(three.begin(), three.end()),
            (std::set<Permutation>{Permutation({2, 3, 1}), Permutation({3, 1, 2})}));
  EXPECT_EQ(enumerate_class(Partition({1, 1})), std::vector<Permutation>{Permutation::identity(2)});
  EXPECT_EQ(enumerate_class(Partition({2, 2})).size(), 3U);
  EXPECT_EQ(enumerate_class(Partition()).size(), 1U);
}

TEST(ClassEnumeration, MatchesFilterOracle) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      const auto direct = enumerate_class(lambda);
      std::set<Permutation> unique(direct.begin(), direct.end());
      EXPECT_EQ(unique.size(), direct.size()) << lambda.to_string();
      EXPECT_EQ(BigInt(static_cast<long>(direct.size())), class_size(lambda));
      const auto filtered = oracle::class_by_filter(lambda.parts());
      EXPECT_EQ(unique, std::set<Permutation>(filtered.begin(), filtered.end())) << lambda.to_string();
    }
  }
}

TEST(ClassEnumeration, ShardsPartitionTheStream) {
  for (const auto& lambda : {Partition({4, 3}), Partition({2, 2, 2}), Partition({5, 1, 1})}) {
    for (unsigned count : {1U, 2U, 3U, 5U}) {
      std::multiset<Permutation> seen;
      for (unsigned s = 0; s < count; ++s) {
        for_each_in_class(lambda, [&](const Permutation& w) { seen.insert(w); }, Shard{s, count});
      }
      const auto all = enumerate_class(lambda);
      EXPECT_EQ(seen, std::multiset<Permutation>(all.begin(), all.end()));
    }
  }
}

TEST(GroupEnumeration, ShardsCoverSn) {
  for (unsigned count : {1U, 2U, 4U, 7U}) {
    std::set<Permutation> seen;
    long long visits = 0;
    for (unsigned s = 0; s < count; ++s) {
      for_each_permutation(6, [&](const Permutation& w) { seen.insert(w); ++visits; }, Shard{s, count});
    }
    EXPECT_EQ(visits, 720);
    EXPECT_EQ(seen.size(), 720U);
  }
}

TEST(Conjugation, Examples) {
  const auto w = Permutation({2, 3, 1, 5, 4});
  EXPECT_EQ(conjugate(w, Permutation::identity(5)), w);
  EXPECT_EQ(conjugate(Permutation({2, 1, 3}), Permutation({2, 1, 3})), Permutation({2, 1, 3}));
  EXPECT_THROW(conjugate(w, Permutation::identity(4)), DomainError);
}

TEST(Conjugation, PreservesCycleTypeOnRandomPairs) {
  Engine engine(3);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(engine, 12));
    const auto w = sample_uniform(n, engine);
    const auto sigma = sample_uniform(n, engine);
    const auto c = conjugate(w, sigma);
    EXPECT_EQ(cycle_type(c), cycle_type(w));
    // sigma w sigma^{-1} sends sigma(i) to sigma(w(i)).
    for (int i = 1; i <= n; ++i) EXPECT_EQ(c(sigma(i)), sigma(w(i)));
  }
}

TEST(Conjugation, TauIsAnInvolutionOnEveryClass) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      for_each_in_class(lambda, [&](const Permutation& w) {
        for (int i = 1; i <= n; ++i) {
          for (int j = i + 1; j <= n; ++j) {
            const auto t = tau(w, i, j);
            ASSERT_EQ(cycle_type(t), lambda);
            ASSERT_EQ(tau(t, i, j), w);
          }
        }
      });
    }
  }
}

TEST(Sampling, DeterministicAndTyped) {
  const Partition lambda({4, 3, 1});
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
    const auto w = sample_class_uniform(lambda, seed);
    EXPECT_EQ(cycle_type(w), lambda);
    EXPECT_EQ(w, sample_class_uniform(lambda, seed));
  }
  EXPECT_EQ(sample_class_uniform(Partition::ones(5), 12345), Permutation::identity(5));
}

TEST(Sampling, KnownStreamIsStable) {
  // mt19937_64's sequence is fixed by the standard, so these are portable.
  Engine engine(5489);
  EXPECT_EQ(engine(), 14514284786278117030ULL);
  EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFULL);
}

TEST(Sampling, UniformOverThreeCycles) {
  Engine engine(2024);
  const Partition lambda({3});
  long long first = 0;
  const long long draws = 60000;
  for (long long r = 0; r < draws; ++r) first += sample_class_uniform(lambda, engine) == Permutation({2, 3, 1});
  // Binomial(60000, 1/2): sd = sqrt(15000) ~ 122.5; 5 sd = 612.
  EXPECT_LE(std::llabs(first - draws / 2), 612);
}

TEST(Sampling, UniformOverSmallClass) {
  Engine engine(77);
  const Partition lambda({2, 2});
  std::map<Permutation, long long> counts;
  const long long draws = 30000;
  for (long long r = 0; r < draws; ++r) ++counts[sample_class_uniform(lambda, engine)];
  ASSERT_EQ(counts.size(), 3U);
  // Binomial(30000, 1/3): sd ~ 81.6; 5 sd ~ 408.
  for (const auto& [w, c] : counts) EXPECT_LE(std::llabs(c - draws / 3), 408) << w.to_string();
}
