#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permstat/enumerate.hpp"
#include "permstat/errors.hpp"
#include "permstat/moments.hpp"
#include "permstat/statistics.hpp"

using namespace permstat;

namespace {

Permutation P(std::initializer_list<int> images) { return Permutation(std::vector<int>(images)); }

}  // namespace

TEST(Statistics, DescentFamily) {
  EXPECT_EQ(des(Permutation::identity(5)), 0);
  EXPECT_EQ(maj(Permutation::identity(5)), 0);
  EXPECT_EQ(inv(Permutation::identity(5)), 0);
  EXPECT_EQ(des(P({2, 3, 4, 1})), 1);
  EXPECT_EQ(maj(P({2, 3, 4, 1})), 3);
  EXPECT_EQ(inv(P({2, 3, 4, 1})), 3);
  EXPECT_EQ(des(P({2, 1})), 1);
  EXPECT_EQ(maj(P({2, 1})), 1);
  EXPECT_EQ(inv(P({2, 1})), 1);
}

TEST(Statistics, Baj) {
  EXPECT_EQ(baj(Permutation::identity(4)), 0);
  EXPECT_EQ(baj(P({2, 3, 1})), 2);
  EXPECT_EQ(baj(P({3, 1, 2})), 2);
}

TEST(Statistics, CyclicDescents) {
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(cdes(Permutation::identity(n)), 1);
  EXPECT_EQ(cdes(Permutation::identity(1)), 0);
  EXPECT_EQ(cdes(P({2, 3, 1})), 1);
  EXPECT_EQ(cdes(P({2, 1})), 1);
}

TEST(Statistics, ExcedanceFamily) {
  const auto e = exc_family(Permutation::identity(4));
  EXPECT_EQ(e.exc, 0);
  EXPECT_EQ(e.weak_exc, 4);
  EXPECT_EQ(e.aexc, 0);
  const auto f = exc_family(P({2, 3, 4, 1}));
  EXPECT_EQ(f.exc, 3);
  EXPECT_EQ(f.weak_exc, 3);
  EXPECT_EQ(f.aexc, 1);
  const auto g = exc_family(P({2, 1}));
  EXPECT_EQ(g.exc, 1);
  EXPECT_EQ(g.weak_exc, 1);
  EXPECT_EQ(g.aexc, 1);
}

TEST(Statistics, CyclicFamily) {
  const auto c = cyclic_family(P({2, 3, 4, 1}));
  EXPECT_EQ(c.cv, 1);
  EXPECT_EQ(c.cpk, 1);
  EXPECT_EQ(c.cda, 2);
  EXPECT_EQ(c.cdd, 0);
  const auto id = cyclic_family(Permutation::identity(5));
  EXPECT_EQ(id.cv + id.cpk + id.cda + id.cdd, 0);
  const auto t = cyclic_family(P({2, 1}));
  EXPECT_EQ(t.cv, 1);
  EXPECT_EQ(t.cpk, 1);
  EXPECT_EQ(t.cda, 0);
  EXPECT_EQ(t.cdd, 0);
}

TEST(Statistics, IleAndDen) {
  EXPECT_EQ(ile(Permutation::identity(5)), 0);
  for (int n = 0; n <= 2; ++n) {
    oracle::for_each_permutation(n, [](const std::vector<int>& p) { EXPECT_EQ(ile(Permutation(p)), 0); });
  }
  // Only (i, j) = (1, 3): 3 < 4 < 5 and w^{-1}(3) = 2.
  EXPECT_EQ(ile(P({5, 3, 4, 1, 2})), 1);
  EXPECT_EQ(den(Permutation::identity(4)), 0);
  EXPECT_EQ(den(P({2, 1})), 1);
}

TEST(Statistics, EvaluateDispatch) {
  EXPECT_EQ(evaluate(StatisticId::inv, P({2, 3, 1})), 2);
  EXPECT_EQ(evaluate(StatisticId::fix, Permutation::identity(5)), 5);
  EXPECT_EQ(evaluate(StatisticId::des, P({3, 1, 2})), 1);
  EXPECT_EQ(evaluate(StatisticId::baj_minus_inv, P({3, 1, 2})), 2 - 2);
}

TEST(Statistics, Names) {
  for (StatisticId id : kAllStatistics) EXPECT_EQ(parse_statistic(statistic_name(id)), id);
  EXPECT_THROW(parse_statistic("bogus"), ParseError);
  EXPECT_THROW(parse_statistic("INV"), ParseError);
}

TEST(Statistics, PointwiseIdentities) {
  for (int n = 1; n <= 8; ++n) {
    const auto rho = Permutation::reversal(n);
    for_each_permutation(n, [&](const Permutation& w) {
      const auto e = exc_family(w);
      const auto c = cyclic_family(w);
      ASSERT_EQ(e.exc, c.cv + c.cda);
      ASSERT_EQ(e.exc + e.aexc + fix(w), n);
      ASSERT_EQ(e.exc, exc_family(w.inverse()).aexc);
      const auto flipped = cyclic_family(conjugate(w, rho));
      ASSERT_EQ(c.cv, flipped.cpk);
      ASSERT_EQ(c.cda, flipped.cdd);
      const bool wrap = n >= 2 && w(n) > w(1);
      ASSERT_EQ(cdes(w), des(w) + (wrap ? 1 : 0));
    });
  }
}

TEST(Statistics, MajAndInvEquidistributed) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(distribution_sn(StatisticId::maj, n), distribution_sn(StatisticId::inv, n)) << n;
  }
}

TEST(Statistics, EulerMahonianPair) {
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(joint_distribution_sn(StatisticId::exc, StatisticId::den, n),
              joint_distribution_sn(StatisticId::des, StatisticId::maj, n))
        << n;
  }
}

TEST(Statistics, EquidistributedOnEachClass) {
  const std::pair<StatisticId, StatisticId> pairs[] = {
      {StatisticId::exc, StatisticId::aexc}, {StatisticId::cv, StatisticId::cpk}, {StatisticId::cda, StatisticId::cdd}};
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      for (const auto& [x, y] : pairs) {
        EXPECT_EQ(distribution_class(x, lambda), distribution_class(y, lambda)) << lambda.to_string();
      }
    }
  }
}
