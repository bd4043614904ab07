#include <gtest/gtest.h>

#include "naco/analysis/correlation.hpp"
#include "naco/analysis/disagreement.hpp"
#include "naco/analysis/groups.hpp"
#include "naco/analysis/normalize.hpp"
#include "naco/analysis/ratings.hpp"
#include "naco/core/errors.hpp"
#include "test_support.hpp"

using namespace naco;
using namespace naco::analysis;
using baselines::RowKey;
using baselines::ScoreTable;

using Vec = std::vector<double>;

TEST(Pearson, HandCases) {
    EXPECT_NEAR(pearson(Vec{1, 2, 3}, Vec{2, 4, 6}), 1.0, 1e-15);
    EXPECT_NEAR(pearson(Vec{1, 2, 3}, Vec{3, 2, 1}), -1.0, 1e-15);
    EXPECT_NEAR(pearson(Vec{1, 2, 3, 4}, Vec{1, 3, 2, 4}), 0.8, 1e-15);
}

TEST(Spearman, HandCases) {
    EXPECT_NEAR(spearman(Vec{1, 2, 3, 4}, Vec{10, 20, 30, 400}), 1.0, 1e-15);
    EXPECT_NEAR(spearman(Vec{1, 2, 3, 4}, Vec{1, 3, 2, 4}), 0.8, 1e-15);
    EXPECT_NEAR(spearman(Vec{1, 2, 3, 4}, Vec{9, 5, 2, 1}), -1.0, 1e-15);
}

TEST(Kendall, HandCases) {
    EXPECT_NEAR(kendall_tau(Vec{1, 2, 3, 4}, Vec{5, 6, 7, 8}), 1.0, 1e-15);
    EXPECT_NEAR(kendall_tau(Vec{1, 2, 3, 4}, Vec{1, 3, 2, 4}), 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(kendall_tau(Vec{1, 2, 3, 4}, Vec{4, 3, 2, 1}), -1.0, 1e-15);
}

TEST(FractionalRanks, TiesShareAverageRank) {
    EXPECT_EQ(fractional_ranks(Vec{10, 20, 10, 30, 20, 20}), (Vec{1.5, 4, 1.5, 6, 4, 4}));
}

TEST(Correlation, DegenerateInputs) {
    for (auto fn : {&pearson, &spearman, &kendall_tau}) {
        EXPECT_THROW(fn(Vec{1}, Vec{2}), DegenerateInput);
        EXPECT_THROW(fn(Vec{1, 2}, Vec{2, 3, 4}), DegenerateInput);
        EXPECT_THROW(fn(Vec{1, 1, 1}, Vec{1, 2, 3}), DegenerateInput);
        EXPECT_THROW(fn(Vec{1, 2, 3}, Vec{4, 4, 4}), DegenerateInput);
    }
}

TEST(Correlation, MatchesDefinitionalOracles) {
    std::mt19937_64 rng(1234);
    int checked = 0;
    while (checked < 300) {
        const std::size_t n = 2 + rng() % 9;
        const auto x = naco::test::random_tied_vector(rng, n);
        const auto y = naco::test::random_tied_vector(rng, n);
        if (std::adjacent_find(x.begin(), x.end(), std::not_equal_to<>()) == x.end() ||
            std::adjacent_find(y.begin(), y.end(), std::not_equal_to<>()) == y.end()) {
            EXPECT_THROW(pearson(x, y), DegenerateInput);
            continue;
        }
        EXPECT_NEAR(pearson(x, y), naco::test::oracle_pearson(x, y), 1e-12);
        EXPECT_NEAR(spearman(x, y), naco::test::oracle_spearman(x, y), 1e-12);
        EXPECT_NEAR(kendall_tau(x, y), naco::test::oracle_kendall(x, y), 1e-12);
        ++checked;
    }
}

TEST(Correlation, LargeInputAgreesWithOracle) {
    std::mt19937_64 rng(77);
    const auto x = naco::test::random_tied_vector(rng, 400);
    Vec y(x.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = x[i] + static_cast<double>(rng() % 3);
    EXPECT_NEAR(kendall_tau(x, y), naco::test::oracle_kendall(x, y), 1e-12);
}

TEST(Correlation, InvarianceProperties) {
    std::mt19937_64 rng(4321);
    for (int i = 0; i < 100; ++i) {
        const auto x = naco::test::random_tied_vector(rng, 8);
        const auto y = naco::test::random_tied_vector(rng, 8);
        double r;
        try {
            r = pearson(x, y);
        } catch (const DegenerateInput&) {
            continue;
        }
        Vec affine, negated, cubed;
        for (double v : x) {
            affine.push_back(2.5 * v + 7.0);
            negated.push_back(-v);
            cubed.push_back(v * v * v + 3.0 * v);
        }
        EXPECT_NEAR(pearson(affine, y), r, 1e-12);
        EXPECT_NEAR(pearson(negated, y), -r, 1e-12);
        EXPECT_NEAR(spearman(cubed, y), spearman(x, y), 1e-12);
        EXPECT_NEAR(kendall_tau(cubed, y), kendall_tau(x, y), 1e-12);
    }
}

TEST(Correlation, ReportCarriesLabels) {
    const auto r = correlate("naco", "overall", Vec{1, 2, 3, 4}, Vec{1, 3, 2, 4});
    EXPECT_EQ(r.metric, "naco");
    EXPECT_EQ(r.target, "overall");
    EXPECT_EQ(r.n, 4u);
    EXPECT_NEAR(r.kendall_tau, 2.0 / 3.0, 1e-15);
}

TEST(MinMax, Cases) {
    EXPECT_EQ(min_max_normalize(Vec{0, 5, 10}), (Vec{0, 0.5, 1}));
    EXPECT_EQ(min_max_normalize(Vec{7, 7, 7}), (Vec{0.5, 0.5, 0.5}));
    EXPECT_EQ(min_max_normalize(Vec{-1, 0}), (Vec{0, 1}));
    EXPECT_THROW(min_max_normalize(Vec{}), EmptyList);
}

TEST(MinMax, PreservesArgExtremes) {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> d(-5, 5);
    for (int i = 0; i < 100; ++i) {
        Vec v(1 + rng() % 10);
        for (auto& x : v) x = d(rng);
        const auto n = min_max_normalize(v);
        EXPECT_EQ(std::max_element(n.begin(), n.end()) - n.begin(), std::max_element(v.begin(), v.end()) - v.begin());
        EXPECT_EQ(std::min_element(n.begin(), n.end()) - n.begin(), std::min_element(v.begin(), v.end()) - v.begin());
        for (double x : n) {
            EXPECT_GE(x, 0.0);
            EXPECT_LE(x, 1.0);
        }
    }
}

TEST(MinMax, TableColumnsKeepEmptyCells) {
    ScoreTable t;
    t.set({"e1", "s"}, "m", 2.0);
    t.set({"e2", "s"}, "m", 4.0);
    t.set({"e3", "s"}, "other", 1.0);
    const auto n = normalize_columns(t);
    EXPECT_EQ(n.get({"e1", "s"}, "m"), 0.0);
    EXPECT_EQ(n.get({"e2", "s"}, "m"), 1.0);
    EXPECT_EQ(n.get({"e3", "s"}, "m"), std::nullopt);
    EXPECT_EQ(n.get({"e3", "s"}, "other"), 0.5);
}

TEST(Groups, TwoGroups) {
    ScoreTable t;
    t.set({"e1", "a"}, "naco", 1.0);
    t.set({"e2", "a"}, "naco", 1.0);
    t.set({"e1", "b"}, "naco", 0.0);
    t.set({"e2", "b"}, "naco", 0.0);
    const auto s = group_summary(t, {{"a", "G1"}, {"b", "G2"}});
    EXPECT_EQ(s.groups, (std::vector<std::string>{"G1", "G2"}));
    EXPECT_EQ(s.mean("G1", "naco"), 1.0);
    EXPECT_EQ(s.mean("G2", "naco"), 0.0);
    ASSERT_EQ(s.gaps.size(), 1u);
    EXPECT_EQ(s.gaps[0].gap, 1.0);
}

TEST(Groups, SingleGroupHasNoGaps) {
    ScoreTable t;
    t.set({"e1", "a"}, "naco", 0.25);
    t.set({"e2", "a"}, "naco", 0.75);
    const auto s = group_summary(t);
    EXPECT_EQ(s.mean("a", "naco"), 0.5);
    EXPECT_TRUE(s.gaps.empty());
}

TEST(Groups, TagErrors) {
    ScoreTable t;
    t.set({"e1", "a"}, "naco", 0.25);
    EXPECT_THROW(group_summary(t, {{"b", "G2"}}), PreconditionError);
    EXPECT_THROW(group_summary(t, {{"a", "G1"}, {"b", "G2"}}), EmptyGroup);
}

TEST(Groups, MeansArePermutationInvariant) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::pair<RowKey, double>> rows;
        for (int i = 0; i < 12; ++i) {
            // Dyadic values keep every partial sum exact.
            rows.push_back({{"e" + std::to_string(i), i % 2 ? "a" : "b"}, static_cast<double>(rng() % 64) / 64.0});
        }
        ScoreTable first;
        for (const auto& [k, v] : rows) first.set(k, "m", v);
        std::shuffle(rows.begin(), rows.end(), rng);
        ScoreTable second;
        for (const auto& [k, v] : rows) second.set(k, "m", v);
        const auto s1 = group_summary(first);
        const auto s2 = group_summary(second);
        EXPECT_EQ(s1.mean("a", "m"), s2.mean("a", "m"));
        EXPECT_EQ(s1.mean("b", "m"), s2.mean("b", "m"));
    }
}

TEST(Ratings, Aggregation) {
    const std::vector<HumanRating> r = {{"e1", "s", "r1", 2, 2, 2}, {"e1", "s", "r2", 1, 2, 2}, {"e1", "s", "r3", 2, 2, 1}};
    const auto agg = aggregate_human_ratings(r);
    ASSERT_EQ(agg.size(), 1u);
    EXPECT_NEAR(agg[0].mean_naturalness, 5.0 / 3.0, 1e-15);
    EXPECT_EQ(agg[0].mean_answerability, 2.0);
    EXPECT_NEAR(agg[0].mean_complexity, 5.0 / 3.0, 1e-15);
    EXPECT_EQ(agg[0].mean_total, 16.0 / 3.0);
    EXPECT_EQ(agg[0].n_raters, 3);
}

TEST(Ratings, SingleAndErrors) {
    const std::vector<HumanRating> one = {{"e1", "s", "r1", 2, 1, 0}};
    const auto agg = aggregate_human_ratings(one);
    EXPECT_EQ(agg[0].mean_total, 3.0);
    EXPECT_THROW(aggregate_human_ratings({}), EmptyRatings);
    const std::vector<HumanRating> bad = {{"e1", "s", "r1", 3, 1, 0}};
    EXPECT_THROW(aggregate_human_ratings(bad), OutOfRange);
}

TEST(Ratings, TotalIsExactForIntegerSums) {
    // Criterion sums (0, 1, 4): 0/3 + 1/3 + 4/3 rounds differently from 5/3.
    const std::vector<HumanRating> r = {{"e1", "s", "r1", 0, 1, 2}, {"e1", "s", "r2", 0, 0, 1}, {"e1", "s", "r3", 0, 0, 1}};
    EXPECT_EQ(aggregate_human_ratings(r)[0].mean_total, 5.0 / 3.0);
}

TEST(Disagreement, SinglePair) {
    ScoreTable t;
    t.set({"e1", "s"}, "a", 1.0);
    t.set({"e1", "s"}, "b", 0.0);
    t.set({"e2", "s"}, "a", 0.0);
    t.set({"e2", "s"}, "b", 1.0);
    const auto s = sample_disagreement_pairs(t, "a", "b", 1, 0);
    ASSERT_EQ(s.pairs.size(), 1u);
    EXPECT_FALSE(s.not_enough);
    EXPECT_EQ(s.available, 1u);
}

TEST(Disagreement, IdenticalMetricsYieldNothing) {
    ScoreTable t;
    for (int i = 0; i < 5; ++i) {
        t.set({"e" + std::to_string(i), "s"}, "a", i * 0.1);
        t.set({"e" + std::to_string(i), "s"}, "b", i * 0.1);
    }
    const auto s = sample_disagreement_pairs(t, "a", "b", 3, 9);
    EXPECT_TRUE(s.pairs.empty());
    EXPECT_TRUE(s.not_enough);
    EXPECT_THROW(sample_disagreement_pairs(t, "a", "zzz", 3, 9), PreconditionError);
}

TEST(Disagreement, SeededAndStrictlyOpposed) {
    ScoreTable t;
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        t.set({"e" + std::to_string(i), "s"}, "a", static_cast<double>(rng() % 10));
        t.set({"e" + std::to_string(i), "s"}, "b", static_cast<double>(rng() % 10));
    }
    const auto s1 = sample_disagreement_pairs(t, "a", "b", 10, 42);
    const auto s2 = sample_disagreement_pairs(t, "a", "b", 10, 42);
    EXPECT_EQ(s1.pairs, s2.pairs);
    ASSERT_EQ(s1.pairs.size(), 10u);
    for (const auto& [p, q] : s1.pairs) {
        const double da = *t.get(p, "a") - *t.get(q, "a");
        const double db = *t.get(p, "b") - *t.get(q, "b");
        EXPECT_LT(da * db, 0.0);
    }
}
