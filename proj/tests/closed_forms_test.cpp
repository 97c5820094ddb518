#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "permstat/closed_forms.hpp"
#include "permstat/enumerate.hpp"
#include "permstat/errors.hpp"
#include "permstat/moments.hpp"

using namespace permstat;

namespace {

std::vector<StatisticId> formula_statistics() {
  std::vector<StatisticId> out;
  for (StatisticId id : kAllStatistics) {
    if (has_mean_formula(id)) out.push_back(id);
  }
  return out;
}

}  // namespace

TEST(ClassMeans, Examples) {
  EXPECT_EQ(table1_mean(StatisticId::des, Partition({3})), Rational(1));
  EXPECT_EQ(table1_mean(StatisticId::inv, Partition({9})), Rational(39, 2));
  EXPECT_EQ(table1_mean(StatisticId::cdes, Partition({2, 2})), Rational(7, 3));
  EXPECT_EQ(whole_group_mean(StatisticId::inv, 7), Rational(21, 2));
  EXPECT_EQ(whole_group_mean(StatisticId::exc, 3), Rational(1));
  EXPECT_EQ(whole_group_mean(StatisticId::cv, 4), Rational(7, 6));
}

TEST(ClassMeans, GuardsNameTheViolatedBound) {
  try {
    table1_mean(StatisticId::des, Partition({1}));
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("n >= 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(whole_group_mean(StatisticId::cda, 1), DomainError);
  EXPECT_THROW((MeanFormula{StatisticId::inv, MeanRegime::large_parts}.evaluate(2, 0, 0)), DomainError);
  EXPECT_THROW(table1_mean(StatisticId::den, Partition({3})), DomainError);
  EXPECT_EQ(table1_mean(StatisticId::exc, Partition({1})), Rational(0));
}

TEST(ClassMeans, MatchesFilterOracleEveryClass) {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& parts : oracle::partitions(n)) {
      const Partition lambda(parts);
      const auto members = oracle::class_by_filter(parts);
      for (StatisticId id : formula_statistics()) {
        const auto expected = oracle::mean_of(members, [id](const Permutation& w) { return evaluate(id, w); });
        EXPECT_EQ(table1_mean(id, lambda), expected) << statistic_name(id) << " " << lambda.to_string();
      }
    }
  }
}

TEST(ClassMeans, RegimesAgreeOnOverlaps) {
  for (StatisticId id : formula_statistics()) {
    for (long long n = 3; n <= 30; ++n) {
      const MeanFormula general{id, MeanRegime::general};
      EXPECT_EQ(general.evaluate(n, 0, 0), (MeanFormula{id, MeanRegime::large_parts}.evaluate(n, 0, 0)));
      for (long long a2 = 0; 2 * a2 <= n; ++a2) {
        const long long a1 = n - 2 * a2;
        EXPECT_EQ(general.evaluate(n, a1, a2), (MeanFormula{id, MeanRegime::ones_twos}.evaluate(n, a1, a2)))
            << statistic_name(id) << " n=" << n << " a2=" << a2;
      }
      if (n % 2 == 0) {
        EXPECT_EQ(general.evaluate(n, 0, n / 2), (MeanFormula{id, MeanRegime::twos}.evaluate(n, 0, n / 2)));
      }
    }
  }
}

TEST(ClassMeans, CdesFormsAgree) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const long long n = 2 + static_cast<long long>(rng() % 60);
    const long long a1 = static_cast<long long>(rng() % (n + 1));
    const long long a2 = static_cast<long long>(rng() % ((n - a1) / 2 + 1));
    EXPECT_EQ(cdes_mean_three_term(n, a1, a2), cdes_mean_single_fraction(n, a1, a2));
  }
}

TEST(ClassMeans, BajIsScaledMaj) {
  for (int n = 2; n <= 12; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      EXPECT_EQ(table1_mean(StatisticId::baj, lambda), Rational(n + 1, 3) * table1_mean(StatisticId::maj, lambda));
    }
  }
}

TEST(ClassMeans, DesDependsOnA2) {
  std::set<Rational> values;
  for (const auto& lambda : enumerate_partitions(6)) values.insert(table1_mean(StatisticId::des, lambda));
  EXPECT_GE(values.size(), 2U);
}

TEST(Omega, Examples) {
  const auto three = omega_partition_probs(Partition({3}), 1, 2);
  EXPECT_EQ(three.p, (std::array<Rational, 5>{0, 0, 0, 1, 0}));
  for (int n = 2; n <= 6; ++n) {
    const auto id = omega_partition_probs(Partition::ones(n), 1, n);
    EXPECT_EQ(id.p, (std::array<Rational, 5>{0, 0, 1, 0, 0}));
  }
  EXPECT_EQ(omega_partition_probs(Partition({2, 1}), 1, 2).p[1], Rational(1, 3));
  EXPECT_THROW(omega_partition_probs(Partition({3}), 2, 2), DomainError);
}

TEST(Omega, MatchesEnumeration) {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& parts : oracle::partitions(n)) {
      const Partition lambda(parts);
      const auto members = oracle::class_by_filter(parts);
      const auto total = static_cast<long long>(members.size());
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          std::array<long long, 5> cell{};
          std::array<long long, 5> inverted{};
          for (const auto& w : members) {
            // Cell membership from the definitions, independent of omega_cell.
            const bool swap = w(i) == j && w(j) == i;
            const bool both_fixed = w(i) == i && w(j) == j;
            const bool one_cross = (w(i) == j) != (w(j) == i);
            const bool one_fixed = (w(i) == i) != (w(j) == j);
            const int c = swap ? 1 : both_fixed ? 2 : one_cross ? 3 : one_fixed ? 4 : 0;
            EXPECT_EQ(omega_cell(w, i, j), c + 1);
            ++cell[c];
            inverted[c] += w(i) > w(j);
          }
          const auto probs = omega_partition_probs(lambda, i, j);
          EXPECT_EQ(probs.sum(), Rational(1));
          for (int c = 0; c < 5; ++c) EXPECT_EQ(probs.p[c], Rational(cell[c], total)) << lambda.to_string();
          if (n < 3) continue;
          const auto cond = conditional_inversion_probs(n, i, j);
          for (int c = 0; c < 5; ++c) {
            if (cell[c] > 0) {
              EXPECT_EQ(cond[c], Rational(inverted[c], cell[c])) << lambda.to_string() << " c" << c + 1;
            }
          }
        }
      }
    }
  }
}

TEST(Omega, Conditionals) {
  EXPECT_EQ(conditional_inversion_probs(3, 1, 3)[3], Rational(1));
  for (int n = 3; n <= 9; ++n) {
    for (int i = 1; i < n; ++i) {
      const auto adj = conditional_inversion_probs(n, i, i + 1);
      EXPECT_EQ(adj[3], Rational(1, 2));
      EXPECT_EQ(adj[4], Rational(1, 2));
      for (int j = i + 1; j <= n; ++j) {
        const auto c = conditional_inversion_probs(n, i, j);
        EXPECT_EQ(c[3] + c[4], Rational(1));
      }
    }
  }
  EXPECT_THROW(conditional_inversion_probs(2, 1, 2), DomainError);
}

TEST(Pij, Examples) {
  EXPECT_EQ(inversion_indicator_prob(Partition({3}), 1, 2), Rational(1, 2));
  EXPECT_EQ(inversion_indicator_prob(Partition({3}), 1, 3), Rational(1));
  EXPECT_EQ(inversion_indicator_prob(Partition::ones(5), 2, 4), Rational(0));
  EXPECT_THROW(inversion_indicator_prob(Partition({2}), 1, 2), DomainError);
}

TEST(Pij, MatchesEnumerationAndCells) {
  for (int n = 3; n <= 7; ++n) {
    for (const auto& parts : oracle::partitions(n)) {
      const Partition lambda(parts);
      const auto members = oracle::class_by_filter(parts);
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          const auto freq = oracle::mean_of(members, [i, j](const Permutation& w) { return w(i) > w(j) ? 1 : 0; });
          EXPECT_EQ(inversion_indicator_prob(lambda, i, j), freq) << lambda.to_string() << " " << i << "," << j;
          EXPECT_EQ(inversion_indicator_prob_by_cells(lambda, i, j), freq);
          if (j + 1 <= n) {
            EXPECT_EQ(inversion_indicator_prob(lambda, i, j), inversion_indicator_prob(lambda, i + 1, j + 1));
          }
        }
      }
    }
  }
}

TEST(WeightedInversion, Examples) {
  EXPECT_EQ(weighted_inversion_mean(Partition({3}), WeightFunction::maj(3)), Rational(3, 2));
  EXPECT_EQ(weighted_inversion_mean(Partition({4, 2, 1}), WeightFunction(7)), Rational(0));
  for (int n = 3; n <= 10; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      const Rational a1(lambda.part_count(1)), a2(lambda.part_count(2)), q(n);
      EXPECT_EQ(weighted_inversion_mean(lambda, WeightFunction::des(n)),
                (q * q - q + Rational(2) * a2 - a1 * a1 + a1) / (Rational(2) * q));
    }
  }
  EXPECT_THROW(weighted_inversion_mean(Partition({2}), WeightFunction::inv(2)), DomainError);
  EXPECT_THROW(WeightFunction(4).set(3, 2, 1), DomainError);
}

TEST(WeightedInversion, RandomWeightsMatchEnumeration) {
  std::mt19937_64 rng(9);
  for (int n = 3; n <= 6; ++n) {
    for (const auto& parts : oracle::partitions(n)) {
      const auto members = oracle::class_by_filter(parts);
      WeightFunction wt(n);
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          wt.set(i, j, Rational(static_cast<long long>(rng() % 21) - 10, 1 + static_cast<long long>(rng() % 7)));
        }
      }
      Rational total;
      for (const auto& w : members) total += wt.evaluate(w);
      EXPECT_EQ(weighted_inversion_mean(Partition(parts), wt), total / Rational(static_cast<long long>(members.size())));
    }
  }
}

TEST(ExcMoments, ClassFormulasMatchEnumeration) {
  EXPECT_EQ(exc_second_moment_and_variance(Partition::ones(4)).second_moment, Rational(0));
  EXPECT_EQ(exc_second_moment_and_variance(Partition::ones(4)).variance, Rational(0));
  EXPECT_EQ(exc_second_moment_and_variance(Partition({2, 2, 2})).variance, Rational(0));
  EXPECT_EQ(exc_second_moment_and_variance(Partition({5})).variance, Rational(5, 12));
  for (int n = 1; n <= 8; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      const auto hist = distribution_class(StatisticId::exc, lambda);
      const auto m = exc_second_moment_and_variance(lambda);
      EXPECT_EQ(m.second_moment, histogram_moment(hist, 2)) << lambda.to_string();
      EXPECT_EQ(m.variance, histogram_variance(hist)) << lambda.to_string();
    }
  }
}

TEST(ExcMoments, WholeGroupIsTheZWeightedAverage) {
  for (int n = 2; n <= 8; ++n) {
    Rational averaged;
    for (const auto& lambda : enumerate_partitions(n)) {
      averaged += exc_second_moment_and_variance(lambda).second_moment / Rational(z_lambda(lambda));
    }
    const auto sn = whole_group_exc_second_moment(n);
    EXPECT_EQ(sn.second_moment, averaged);
    const auto hist = distribution_sn(StatisticId::exc, n);
    EXPECT_EQ(sn.second_moment, histogram_moment(hist, 2));
    EXPECT_EQ(sn.variance, histogram_variance(hist));
  }
}

TEST(ZIdentities, FourSums) {
  for (int n = 2; n <= 12; ++n) {
    const auto s = verify_z_identities(n);
    EXPECT_EQ(s.inverse_z, Rational(1));
    EXPECT_EQ(s.a1, Rational(1));
    EXPECT_EQ(s.a1_squared, Rational(2));
    EXPECT_EQ(s.a2, Rational(1, 2));
  }
  EXPECT_THROW(verify_z_identities(1), DomainError);
}

TEST(Decomposition, ResidualVanishes) {
  EXPECT_EQ(decomposition_residual(StatisticId::des, 5), Rational(0));
  EXPECT_EQ(decomposition_residual(StatisticId::baj, 6), Rational(0));
  EXPECT_EQ(decomposition_residual(StatisticId::cda, 7), Rational(0));
  for (StatisticId id : formula_statistics()) {
    for (int n = 2; n <= 12; ++n) EXPECT_EQ(decomposition_residual(id, n), Rational(0)) << statistic_name(id) << n;
  }
}

TEST(WholeGroup, MeansMatchEnumeration) {
  for (StatisticId id : formula_statistics()) {
    for (int n = 2; n <= 7; ++n) {
      EXPECT_EQ(whole_group_mean(id, n), exact_moment_sn(id, n, 1)) << statistic_name(id) << " n=" << n;
    }
  }
}
