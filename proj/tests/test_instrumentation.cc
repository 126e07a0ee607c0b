#include "lfsort/instrumentation.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "lfsort/generators.hpp"
#include "reference_lfsort.hpp"

namespace {

using lfsort::index_t;
using lfsort::make_counting;
using lfsort::run_instrumented;
using lfsort::sort_config;

using vec = std::vector<std::int64_t>;

TEST(CountingComparator, CountsEachInvocation) {
    std::uint64_t n = 0;
    auto cmp = make_counting(std::less<std::int64_t>{}, n);
    EXPECT_EQ(n, 0u);
    EXPECT_TRUE(cmp(1, 2));
    EXPECT_EQ(n, 1u);
    EXPECT_FALSE(cmp(2, 1));
    EXPECT_FALSE(cmp(2, 2));
    EXPECT_EQ(n, 3u);
}

TEST(CountingComparator, SortOfThreeCountsThree) {
    vec v{1, 2, 3};
    std::uint64_t n = 0;
    auto cmp = make_counting(std::less<std::int64_t>{}, n);
    lfsort::null_observer obs;
    lfsort::lf_samplesort(v.begin(), v.end(), sort_config(1), cmp, obs);
    EXPECT_EQ(n, 3u);
}

TEST(RunInstrumented, EmptyInput) {
    const auto run = run_instrumented({}, sort_config(1));
    EXPECT_TRUE(run.output.empty());
    EXPECT_EQ(run.stats.comparisons, 0u);
    EXPECT_EQ(run.stats.moves, 0u);
    EXPECT_EQ(run.stats.max_depth, 0u);
    EXPECT_TRUE(run.stats.stages.empty());
}

TEST(RunInstrumented, TrivialInputsCostNothing) {
    for (int k : {1, 2, 4}) {
        const auto run = run_instrumented({7}, sort_config(k));
        EXPECT_EQ(run.output, (vec{7}));
        EXPECT_EQ(run.stats.comparisons, 0u);
        EXPECT_EQ(run.stats.moves, 0u);
        EXPECT_EQ(run.stats.max_depth, 0u);
    }
}

TEST(RunInstrumented, SortedTriple) {
    const auto run = run_instrumented({1, 2, 3}, sort_config(1));
    EXPECT_EQ(run.output, (vec{1, 2, 3}));
    EXPECT_EQ(run.stats.comparisons, 3u);
    EXPECT_EQ(run.stats.moves, 0u);
    EXPECT_EQ(run.stats.max_depth, 4u);
}

// Sorted ascending input of 7: stage 1:2 costs 3; stage 3:4 pushes the four
// unsorted elements past sample ranks 2 and 3 (8 comparisons) and then sorts
// the surviving 4-element run for 5 more, 16 in total.  The naive reference
// sorter agrees.
TEST(RunInstrumented, SortedSevenCostsSixteen) {
    const vec input{1, 2, 3, 4, 5, 6, 7};
    const auto run = run_instrumented(input, sort_config(1));
    EXPECT_EQ(run.stats.comparisons, 16u);
    EXPECT_EQ(run.stats.comparisons, lfsort_test::reference_comparisons(input, 1));
}

TEST(RunInstrumented, PairSwapCountsThreeMoves) {
    const auto run = run_instrumented({2, 1}, sort_config(1));
    EXPECT_EQ(run.output, (vec{1, 2}));
    EXPECT_EQ(run.stats.comparisons, 1u);
    EXPECT_EQ(run.stats.moves, 3u);
    EXPECT_EQ(run.stats.max_depth, 2u);
    ASSERT_EQ(run.stats.stages.size(), 1u);
    EXPECT_EQ(run.stats.stages[0], (lfsort::stage{1, 1}));
}

TEST(RunInstrumented, StagesMatchComputedSchedule) {
    for (int k = 1; k <= 4; ++k) {
        const sort_config cfg(k);
        for (index_t n : {0, 1, 2, 3, 7, 15, 16, 100, 511, 1000, 4095}) {
            lfsort::distribution d{lfsort::dist_kind::random_perm, n, 42, 0};
            const auto run = run_instrumented(lfsort::generate(d), cfg);
            EXPECT_EQ(run.stats.stages, lfsort::compute_schedule(n, cfg))
                << "n=" << n << " k=" << k;
        }
    }
}

TEST(RunInstrumented, DeterministicAcrossRuns) {
    lfsort::distribution d{lfsort::dist_kind::random_perm, 1000, 7, 0};
    const vec input = lfsort::generate(d);
    for (int k : {1, 2, 3}) {
        const auto a = run_instrumented(input, sort_config(k));
        const auto b = run_instrumented(input, sort_config(k));
        EXPECT_EQ(a.stats.comparisons, b.stats.comparisons);
        EXPECT_EQ(a.stats.moves, b.stats.moves);
        EXPECT_EQ(a.stats.max_depth, b.stats.max_depth);
        EXPECT_EQ(a.stats.stages, b.stats.stages);
        EXPECT_EQ(a.output, b.output);
    }
}

// A second, independent tally inside the base comparator must agree with the
// wrapper's count exactly.
TEST(RunInstrumented, WrapperCountMatchesInnerTally) {
    struct tallying_less {
        std::uint64_t* inner;
        bool operator()(const std::int64_t& a, const std::int64_t& b) {
            ++*inner;
            return a < b;
        }
    };
    lfsort::distribution d{lfsort::dist_kind::random_perm, 500, 11, 0};
    vec v = lfsort::generate(d);
    std::uint64_t inner = 0, outer = 0;
    auto cmp = make_counting(tallying_less{&inner}, outer);
    lfsort::null_observer obs;
    lfsort::lf_samplesort(v.begin(), v.end(), sort_config(2), cmp, obs);
    EXPECT_EQ(inner, outer);
    EXPECT_GT(outer, 0u);
}

TEST(RunInstrumented, InstrumentationDoesNotChangeOutput) {
    for (index_t n : {0, 5, 64, 777}) {
        lfsort::distribution d{lfsort::dist_kind::few_unique, n, 3, 4};
        const vec input = lfsort::generate(d);
        for (int k : {1, 3}) {
            vec plain = input;
            lfsort::lf_samplesort(plain.begin(), plain.end(), sort_config(k));
            EXPECT_EQ(run_instrumented(input, sort_config(k)).output, plain);
        }
    }
}

TEST(RunInstrumented, ComparisonsMatchReferenceEverywhere) {
    using lfsort::dist_kind;
    for (int k = 1; k <= 4; ++k) {
        const sort_config cfg(k);
        for (index_t n : {2, 9, 50, 333}) {
            for (dist_kind kind : {dist_kind::random_perm, dist_kind::sorted_desc,
                                   dist_kind::all_equal}) {
                const vec input = lfsort::generate({kind, n, 99, 3});
                EXPECT_EQ(run_instrumented(input, cfg).stats.comparisons,
                          lfsort_test::reference_comparisons(input, cfg.m))
                    << "n=" << n << " k=" << k;
            }
        }
    }
}

}  // namespace
