#include "oracles.hpp"

#include <boolspec/fourier.hpp>
#include <boolspec/ltf.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace boolspec;

TEST(Materialize, Examples) {
  EXPECT_EQ(materialize(LtfSpec{{1}}), BooleanFunction::dictator(1, 1));
  EXPECT_EQ(materialize(LtfSpec{{1, 1, 1}}), majority(3));
  const auto f = materialize(counterexample_spec());
  EXPECT_EQ(f.evaluate(encode_input(std::vector<int>{+1, +1, -1, -1, -1})), Sign::plus);
  EXPECT_EQ(f.evaluate(encode_input(std::vector<int>{-1, -1, +1, +1, +1})), Sign::minus);
  EXPECT_EQ(f, oracle::naive_ltf({2, 2, 1, 1, 1}));
}

TEST(Materialize, TieIsRejectedWithWitness) {
  try {
    materialize(LtfSpec{{1, 1, 1, 1, 2}});
    FAIL() << "expected TieEncountered";
  } catch (const TieEncountered& tie) {
    const auto x = tie.witness_point();
    const std::vector<std::int64_t> w{1, 1, 1, 1, 2};
    std::int64_t s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * x[i];
    EXPECT_EQ(s, 0);
  }
}

TEST(Materialize, TieMapsToMinusOne) {
  const auto g = materialize(LtfSpec{{1, 1}, 0, TiePolicy::map_to_minus_one});
  // +1 only when both coordinates are +1: AND.
  EXPECT_EQ(g.to_hex(), "08");
}

TEST(Materialize, ThresholdShiftsTheCut) {
  // x1 + x2 + x3 > 2 only at (+1,+1,+1).
  const auto g = materialize(LtfSpec{{1, 1, 1}, 2, TiePolicy::reject});
  EXPECT_EQ(g.popcount(), 1U);
  EXPECT_TRUE(g.positive_at(7));
  EXPECT_FALSE(is_unbiased(g));
  EXPECT_EQ(g, oracle::naive_ltf({1, 1, 1}, 2));
}

TEST(Materialize, MatchesPointwiseSignForRandomSpecs) {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<std::int64_t> w(-7, 7);
  for (int t = 0; t < 80; ++t) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 10);
    LtfSpec spec;
    for (unsigned i = 0; i < n; ++i) spec.weights.push_back(w(rng));
    spec.threshold = w(rng);
    spec.tie_policy = TiePolicy::map_to_minus_one;
    const auto f = materialize(spec);
    for (InputIndex j = 0; j < f.size(); ++j) {
      std::int64_t s = -spec.threshold;
      for (unsigned i = 1; i <= n; ++i) s += spec.weights[i - 1] * coordinate_value(j, i);
      ASSERT_EQ(f.positive_at(j), s > 0);
    }
  }
}

TEST(Majority, Examples) {
  EXPECT_EQ(majority(1), BooleanFunction::dictator(1, 1));
  EXPECT_EQ(influence(majority(5), 1), Rational(3, 8));
  EXPECT_EQ(degree_weight(wht(majority(3)), 1), Rational(3, 4));
  EXPECT_THROW(majority(4), std::invalid_argument);
  EXPECT_THROW(majority(25), std::invalid_argument);
  for (unsigned n = 1; n <= 11; n += 2) EXPECT_EQ(majority(n), oracle::naive_ltf(std::vector<std::int64_t>(n, 1)));
}

TEST(Predicates, Examples) {
  const auto f = materialize(counterexample_spec());
  const auto m5 = majority(5);
  EXPECT_TRUE(is_unbiased(f));
  EXPECT_EQ(f.popcount(), 16U);
  EXPECT_TRUE(is_unbiased(m5));
  EXPECT_FALSE(is_unbiased(BooleanFunction::from_predicate(3, [](InputIndex) { return true; })));

  EXPECT_TRUE(is_odd(m5));
  EXPECT_TRUE(is_odd(f));
  EXPECT_FALSE(is_odd(BooleanFunction::parity(2, 0b11)));

  EXPECT_TRUE(is_monotone(f));
  EXPECT_TRUE(is_monotone(m5));
  EXPECT_FALSE(is_monotone(materialize(LtfSpec{{-1}})));
}

TEST(Predicates, PositiveTieFreeSpecsAreMonotoneAndOdd) {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 100; ++t) {
    const unsigned n = 1 + 2 * static_cast<unsigned>(rng() % 5);
    const auto f = materialize(oracle::random_tie_free_positive_spec(n, rng));
    ASSERT_TRUE(is_monotone(f));
    ASSERT_TRUE(is_odd(f));
    ASSERT_TRUE(is_unbiased(f));
  }
}

TEST(Predicates, MonotoneMatchesBruteForceOrder) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 40; ++t) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 4);
    const auto f = (t % 2) ? oracle::random_monotone_function(n, rng) : oracle::random_function(n, rng);
    bool brute = true;
    for (InputIndex a = 0; a < f.size(); ++a)
      for (InputIndex b = 0; b < f.size(); ++b)
        if ((a & b) == a && f.value(a) > f.value(b)) brute = false;
    ASSERT_EQ(is_monotone(f), brute);
  }
}

TEST(PermuteSpec, CommutesWithPermuteCoordinates) {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 40; ++t) {
    const unsigned n = 1 + 2 * static_cast<unsigned>(rng() % 4);
    const auto spec = oracle::random_tie_free_positive_spec(n, rng);
    const auto pi = oracle::random_permutation(n, rng);
    EXPECT_EQ(materialize(permute_spec(spec, pi)), permute_coordinates(materialize(spec), pi));
  }
}

TEST(SpecText, ParseAndFormat) {
  EXPECT_EQ(parse_spec("2,2,1,1,1"), counterexample_spec());
  EXPECT_EQ(parse_spec("2,2,1,1,1@0"), counterexample_spec());
  const auto s = parse_spec("3,-1, 2@-4");
  EXPECT_EQ(s.weights, (std::vector<std::int64_t>{3, -1, 2}));
  EXPECT_EQ(s.threshold, -4);
  EXPECT_EQ(format_spec(s), "3,-1,2@-4");
  EXPECT_EQ(format_spec(counterexample_spec()), "2,2,1,1,1");
  for (const char* bad : {"", "1,,2", "a", "1@", "@3", "1,2@x", "1.5"})
    EXPECT_THROW(parse_spec(bad), std::invalid_argument) << bad;
}
