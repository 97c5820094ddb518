#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "permstat/constraints.hpp"
#include "permstat/enumerate.hpp"
#include "permstat/errors.hpp"
#include "permstat/moments.hpp"

using namespace permstat;

namespace {

Constraint K(std::string_view text) { return Constraint::parse(text); }

ConstraintSet set_of(std::initializer_list<const char*> texts) {
  ConstraintSet out;
  for (const char* t : texts) out.insert(K(t));
  return out;
}

const Polynomial kInvSquare({0, Rational(-49, 360), Rational(-1, 80), Rational(-1, 72), Rational(1, 16)});

}  // namespace

TEST(Constraint, ParseAndFormat) {
  EXPECT_EQ(K("{(2,3),(1,2)}").to_string(), "{(1,2),(2,3)}");
  EXPECT_EQ(K("{}").size(), 0);
  EXPECT_EQ(K(" { (1, 2) , (1,2) } ").size(), 1);
  EXPECT_EQ(K("{(3,1),(5,2)}").support(), (std::vector<int>{1, 2, 3, 5}));
  EXPECT_EQ(K("{(3,1),(5,2)}").standardize(), K("{(3,1),(4,2)}"));
  for (const char* bad : {"", "(1,2)", "{(1,2)", "{(0,1)}", "{(1,a)}", "{(1,2,3)}"}) {
    EXPECT_ANY_THROW(K(bad)) << bad;
  }
}

TEST(Constraint, WellDefinedAndAcyclic) {
  EXPECT_TRUE(is_acyclic(K("{(1,2),(2,3),(3,4)}")));
  EXPECT_FALSE(is_acyclic(K("{(1,2),(2,1)}")));
  EXPECT_FALSE(is_acyclic(K("{(1,1)}")));
  EXPECT_TRUE(is_well_defined(K("{(1,2),(2,1)}")));
  EXPECT_FALSE(is_well_defined(K("{(1,2),(1,3)}")));
  EXPECT_FALSE(is_well_defined(K("{(1,3),(2,3)}")));
  EXPECT_FALSE(is_acyclic(K("{(1,2),(1,3)}")));
}

TEST(Constraint, Satisfies) {
  const auto w = Permutation({2, 3, 4, 1});
  EXPECT_TRUE(satisfies(w, K("{(1,2),(2,3)}")));
  EXPECT_TRUE(satisfies(w, K("{(1,2),(2,3),(3,4)}")));
  EXPECT_FALSE(satisfies(Permutation::identity(3), K("{(1,2)}")));
  EXPECT_THROW(satisfies(Permutation::identity(3), K("{(1,4)}")), DomainError);
}

TEST(Constraint, ProbabilitiesOverSn) {
  EXPECT_EQ(prob_satisfies_sn(K("{(1,2)}"), 3), Rational(1, 3));
  EXPECT_EQ(prob_satisfies_sn(K("{(1,2),(2,3)}"), 4), Rational(1, 12));
  EXPECT_EQ(prob_satisfies_sn(K("{(1,2),(1,3)}"), 4), Rational(0));
  EXPECT_THROW(prob_satisfies_sn(K("{(1,5)}"), 4), DomainError);
}

TEST(Constraint, ProbabilitiesOverClass) {
  EXPECT_EQ(prob_satisfies_class(K("{(1,2)}"), Partition({3})), Rational(1, 2));
  EXPECT_EQ(prob_satisfies_class(K("{(1,2),(2,1)}"), Partition({3})), Rational(0));
  EXPECT_EQ(prob_satisfies_class(K("{(1,2),(2,3)}"), Partition({5})), Rational(1, 12));
  EXPECT_THROW(prob_satisfies_class(K("{(1,2),(2,3)}"), Partition({2, 2})), DomainError);
}

TEST(Constraint, ClassProbabilityMatchesEnumeration) {
  // All constraints of size <= 2 on [5] x [5], every class of n <= 7 allowed
  // by the part bound.
  std::vector<ConstraintPair> cells;
  for (int i = 1; i <= 5; ++i) {
    for (int j = 1; j <= 5; ++j) cells.emplace_back(i, j);
  }
  std::vector<Constraint> all;
  for (std::size_t a = 0; a < cells.size(); ++a) {
    all.emplace_back(std::vector<ConstraintPair>{cells[a]});
    for (std::size_t b = a + 1; b < cells.size(); ++b) all.emplace_back(std::vector<ConstraintPair>{cells[a], cells[b]});
  }
  for (int n = 5; n <= 7; ++n) {
    for (const auto& parts : oracle::partitions(n, 2)) {
      const Partition lambda(parts);
      const auto members = oracle::class_by_filter(parts);
      for (const auto& k : all) {
        if (lambda.min_part() < k.size() + 1) continue;
        long long hits = 0;
        for (const auto& w : members) {
          bool ok = true;
          for (const auto& [i, j] : k.pairs()) ok = ok && w(i) == j;
          hits += ok;
        }
        const Rational freq(hits, static_cast<long long>(members.size()));
        ASSERT_EQ(prob_satisfies_class(k, lambda), freq) << k.to_string() << " " << lambda.to_string();
        if (!is_acyclic(k)) {
          ASSERT_EQ(freq, Rational(0));
        }
      }
    }
  }
}

TEST(Tuples, Classification) {
  const Constraint same[] = {K("{(1,2)}"), K("{(1,2)}")};
  const auto a = classify_tuple(same);
  EXPECT_EQ(a.kind, TupleCase::acyclic);
  EXPECT_EQ(a.t, 1);
  EXPECT_EQ(a.s, 2);
  const Constraint clash[] = {K("{(1,2)}"), K("{(1,3)}")};
  EXPECT_EQ(classify_tuple(clash).kind, TupleCase::not_well_defined);
  const Constraint loop[] = {K("{(1,2)}"), K("{(2,1)}")};
  EXPECT_EQ(classify_tuple(loop).kind, TupleCase::cyclic);
  EXPECT_EQ(tuple_case_name(TupleCase::cyclic), "cyclic");
}

TEST(ConstraintSet, WeightsAndFileFormat) {
  ConstraintSet s;
  s.add_weighted(K("{(1,2)}"), Rational(3, 2));
  s.add_weighted(K("{(1,2)}"), Rational(-3, 2));
  EXPECT_TRUE(s.empty());
  EXPECT_TRUE(s.weighted());

  std::istringstream in("# comment\n{(1,2)} | 2/3\n\n{(2,1),(1,2)}\n");
  const auto parsed = parse_constraint_set(in);
  EXPECT_TRUE(parsed.weighted());
  EXPECT_EQ(parsed.count(), 2U);
  EXPECT_EQ(parsed.weight(K("{(1,2)}")), Rational(2, 3));
  EXPECT_EQ(parsed.weight(K("{(1,2),(2,1)}")), Rational(1));
  std::istringstream again(format_constraint_set(parsed));
  EXPECT_EQ(parse_constraint_set(again), parsed);

  std::istringstream bad("{(1,2)}\n{(1,\n");
  try {
    parse_constraint_set(bad);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find('2'), std::string::npos) << e.what();
  }
}

TEST(Builtins, Sizes) {
  const auto inv3 = builtin_constraint_set(StatisticId::inv, 3);
  EXPECT_EQ(inv3.count(), 9U);
  Rational total;
  for (const auto& [k, wt] : inv3.entries()) total += wt * prob_satisfies_sn(k, 3);
  EXPECT_EQ(total, Rational(3, 2));
  EXPECT_EQ(builtin_constraint_set(StatisticId::des, 3).count(), 6U);
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(BigInt(static_cast<long>(builtin_constraint_set(StatisticId::exc, n).count())), binomial(n, 2));
  }
  EXPECT_TRUE(builtin_constraint_set(StatisticId::maj, 4).weighted());
  EXPECT_FALSE(builtin_constraint_set(StatisticId::inv, 4).weighted());
  EXPECT_EQ(builtin_constraint_size(StatisticId::ile), 3);
  EXPECT_EQ(builtin_constraint_size(StatisticId::exc), 1);
}

TEST(Builtins, AgreeWithEvaluatorsPointwise) {
  for (StatisticId id : kAllStatistics) {
    ASSERT_TRUE(has_builtin_constraint_set(id));
    for (int n = 1; n <= 6; ++n) {
      const auto set = builtin_constraint_set(id, n);
      oracle::for_each_permutation(n, [&](const std::vector<int>& images) {
        const Permutation w(images);
        ASSERT_EQ(set.evaluate(w), Rational(evaluate(id, w))) << statistic_name(id) << " " << w.to_string();
      });
    }
  }
}

TEST(Symmetry, Examples) {
  EXPECT_TRUE(is_symmetric(builtin_constraint_set(StatisticId::inv, 4), 4));
  EXPECT_FALSE(is_symmetric(builtin_constraint_set(StatisticId::des, 4), 4));
  EXPECT_TRUE(is_symmetric(builtin_constraint_set(StatisticId::exc, 4), 4));
  EXPECT_FALSE(is_symmetric(builtin_constraint_set(StatisticId::cdes, 5), 5));
}

TEST(Symmetry, Extension) {
  EXPECT_EQ(symmetric_extension(set_of({"{(1,2)}"}), 2, 4), builtin_constraint_set(StatisticId::exc, 4));
  const auto transpositions = symmetric_extension(set_of({"{(1,2),(2,1)}"}), 2, 3);
  EXPECT_EQ(transpositions, set_of({"{(1,2),(2,1)}", "{(1,3),(3,1)}", "{(2,3),(3,2)}"}));
  EXPECT_EQ(symmetric_extension(builtin_constraint_set(StatisticId::inv, 4), 4, 6),
            builtin_constraint_set(StatisticId::inv, 6));
  EXPECT_EQ(symmetric_extension(set_of({"{(1,2)}", "{(2,3)}", "{(1,3)}"}), 3, 2), set_of({"{(1,2)}"}));
  EXPECT_THROW(symmetric_extension(builtin_constraint_set(StatisticId::des, 4), 4, 6), DomainError);
  for (const auto& base : {set_of({"{(1,2)}"}), set_of({"{(2,1)}"}), set_of({"{(1,2),(2,1)}"}),
                           builtin_constraint_set(StatisticId::inv, 4), builtin_constraint_set(StatisticId::exc, 3)}) {
    const int n0 = base.max_symbol() < 2 ? 2 : base.max_symbol();
    for (int n = 1; n <= 8; ++n) EXPECT_TRUE(is_symmetric(symmetric_extension(base, n0, n), n)) << n;
  }
}

TEST(ConstraintMoments, Examples) {
  EXPECT_EQ(moment_via_constraints(builtin_constraint_set(StatisticId::inv, 9), 1, Partition({9})), Rational(39, 2));
  EXPECT_EQ(moment_via_constraints(builtin_constraint_set(StatisticId::exc, 5), 1, Partition({5})), Rational(5, 2));
  EXPECT_EQ(moment_via_constraints(builtin_constraint_set(StatisticId::inv, 5), 2, Partition({5})), Rational(109, 3));
  EXPECT_THROW(moment_via_constraints(builtin_constraint_set(StatisticId::inv, 4), 2, Partition({4})), DomainError);
}

TEST(ConstraintMoments, MatchEnumerationWhereDefined) {
  for (StatisticId id : {StatisticId::inv, StatisticId::des, StatisticId::maj, StatisticId::exc, StatisticId::cdes,
                         StatisticId::den, StatisticId::cv}) {
    for (int n = 3; n <= 8; ++n) {
      const auto set = builtin_constraint_set(id, n);
      for (const auto& lambda : enumerate_partitions(n, set.size() + 1)) {
        EXPECT_EQ(moment_via_constraints(set, 1, lambda), exact_moment_class(id, lambda, 1))
            << statistic_name(id) << " " << lambda.to_string();
      }
    }
  }
  for (const auto& lambda : {Partition({5}), Partition({6}), Partition({7})}) {
    EXPECT_EQ(moment_via_constraints(builtin_constraint_set(StatisticId::des, lambda.n()), 2, lambda),
              exact_moment_class(StatisticId::des, lambda, 2));
    EXPECT_EQ(moment_via_constraints(builtin_constraint_set(StatisticId::maj, lambda.n()), 2, lambda),
              exact_moment_class(StatisticId::maj, lambda, 2));
  }
}

TEST(ConstraintMoments, IndependentOfClass) {
  const auto set = builtin_constraint_set(StatisticId::inv, 10);
  const auto one = moment_via_constraints(set, 2, Partition({10}));
  EXPECT_EQ(one, moment_via_constraints(set, 2, Partition({5, 5})));
  EXPECT_EQ(one, Rational(1217, 2));
  EXPECT_EQ(one, kInvSquare(10));
}

TEST(ConstraintMoments, JobsDoNotChangeTheResult) {
  const auto set = builtin_constraint_set(StatisticId::maj, 7);
  const auto base = moment_via_constraints(set, 2, Partition({7}));
  for (unsigned jobs : {2U, 3U, 8U}) EXPECT_EQ(moment_via_constraints(set, 2, Partition({7}), {jobs}), base);
}

TEST(Ats, Counts) {
  const auto inv = builtin_family(StatisticId::inv);
  EXPECT_EQ(count_acyclic_tuples(inv, 1, 2, 3), 4);
  EXPECT_EQ(count_acyclic_tuples(inv, 1, 2, 4), 6);
  EXPECT_EQ(count_acyclic_tuples(inv, 2, 4, 8), 2520);
  EXPECT_EQ(count_acyclic_tuples(inv, 2, 4, 8, {3}), 2520);
}

TEST(Ats, Polynomials) {
  const auto inv = builtin_family(StatisticId::inv);
  EXPECT_EQ(moment_polynomial_via_ats(inv, 1), Polynomial({0, Rational(-1, 12), Rational(1, 4)}));
  const auto quartic = moment_polynomial_via_ats(inv, 2);
  EXPECT_EQ(quartic.degree(), 4);
  EXPECT_EQ(quartic.leading_coefficient(), Rational(1, 16));
  EXPECT_EQ(quartic, kInvSquare);
  EXPECT_EQ(moment_polynomial_via_ats(builtin_family(StatisticId::exc), 1), Polynomial({0, Rational(1, 2)}));
  EXPECT_EQ(polynomial_from_ats(ats_table(inv, 1)), moment_polynomial_via_ats(inv, 1));
  EXPECT_THROW(moment_polynomial_via_ats(builtin_family(StatisticId::des), 1), DomainError);
  EXPECT_THROW(moment_polynomial_via_ats(builtin_family(StatisticId::maj), 1), DomainError);
}

TEST(Ats, ExtensionFamilyMatchesBuiltin) {
  const auto ext = extension_family("inv-ext", builtin_constraint_set(StatisticId::inv, 4), 4);
  EXPECT_EQ(moment_polynomial_via_ats(ext, 1), moment_polynomial_via_ats(builtin_family(StatisticId::inv), 1));
  // A 2-cycle constraint is cyclic, so it never holds on classes with parts >= 3.
  const auto trans = extension_family("transpositions", set_of({"{(1,2),(2,1)}"}), 2);
  EXPECT_EQ(moment_polynomial_via_ats(trans, 1), Polynomial());
}

TEST(Ats, AgreesWithInterpolation) {
  const auto inv = builtin_family(StatisticId::inv);
  const auto exc = builtin_family(StatisticId::exc);
  EXPECT_EQ(moment_polynomial_via_interpolation(StatisticId::inv, 1, 2), moment_polynomial_via_ats(inv, 1));
  EXPECT_EQ(moment_polynomial_via_interpolation(StatisticId::inv, 2, 2), moment_polynomial_via_ats(inv, 2));
  EXPECT_EQ(moment_polynomial_via_interpolation(StatisticId::exc, 1, 1), moment_polynomial_via_ats(exc, 1));
}

TEST(Symmetry, BuiltinSets) {
  const std::set<StatisticId> asymmetric = {StatisticId::des, StatisticId::maj, StatisticId::baj,
                                            StatisticId::baj_minus_inv, StatisticId::cdes};
  for (StatisticId id : kAllStatistics) {
    for (int n = 4; n <= 7; ++n) {
      const auto set = builtin_constraint_set(id, n);
      EXPECT_EQ(is_symmetric(set, n), asymmetric.count(id) == 0) << statistic_name(id) << " n=" << n;
    }
  }
}
