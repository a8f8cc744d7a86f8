#include <gtest/gtest.h>

#include "gapsort/gap_schedule.hpp"

namespace gapsort {
namespace {

TEST(GapSchedule, WorkedSizes) {
    EXPECT_EQ(compute_gap_schedule(4), (GapSchedule{4, 2, 2, 4}));
    EXPECT_EQ(compute_gap_schedule(16), (GapSchedule{16, 2, 4, 8}));
    EXPECT_EQ(compute_gap_schedule(100000), (GapSchedule{100000, 27, 17, 459}));
}

// Expected values evaluated with 50-digit arithmetic (mpmath), frozen here.
TEST(GapSchedule, MatchesHighPrecisionEvaluation) {
    struct Row {
        std::uint64_t n, t, lg, k;
    };
    const Row rows[] = {{2, 2, 1, 2},         {3, 2, 2, 4},          {5, 2, 3, 6},
                        {7, 2, 3, 6},         {8, 2, 3, 6},          {9, 2, 4, 8},
                        {17, 2, 5, 10},       {100, 3, 7, 21},       {1000, 5, 10, 50},
                        {1023, 5, 10, 50},    {1024, 5, 10, 50},     {1025, 5, 11, 55},
                        {65536, 23, 16, 368}, {1000000, 71, 20, 1420}, {2000000, 96, 21, 2016}};
    for (const auto& r : rows) {
        const auto g = compute_gap_schedule(r.n);
        EXPECT_EQ(g.t_factor, r.t) << "n=" << r.n;
        EXPECT_EQ(g.log2n_ceil, r.lg) << "n=" << r.n;
        EXPECT_EQ(g.start_gap, r.k) << "n=" << r.n;
    }
}

TEST(GapSchedule, InvariantsHoldAcrossSizes) {
    for (std::uint64_t n = 2; n < 5000; ++n) {
        const auto g = compute_gap_schedule(n);
        ASSERT_GE(g.start_gap, 1u);
        ASSERT_EQ(g.start_gap, g.t_factor * g.log2n_ceil);
        // 2^(lg-1) < n <= 2^lg
        ASSERT_LE(n, std::uint64_t{1} << g.log2n_ceil);
        ASSERT_GT(n, std::uint64_t{1} << (g.log2n_ceil - 1));
    }
}

TEST(GapSchedule, RejectsDegenerateSizes) {
    EXPECT_THROW(compute_gap_schedule(0), DomainError);
    EXPECT_THROW(compute_gap_schedule(1), DomainError);
}

TEST(GapSchedule, ScheduledComparisons) {
    EXPECT_EQ(scheduled_comparisons(4, 4), 6u);   // 0 + 1 + 2 + 3
    EXPECT_EQ(scheduled_comparisons(4, 2), 5u);   // 2 + 3
    EXPECT_EQ(scheduled_comparisons(0, 5), 0u);
    EXPECT_EQ(scheduled_comparisons(10, 1), 9u);
}

}  // namespace
}  // namespace gapsort
