#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "gapsort/distributions.hpp"
#include "gapsort/sorters.hpp"

namespace gapsort {
namespace {

std::vector<int> rs(std::vector<int> v, SortStats* stats = nullptr) {
    auto r = rs_sort(std::span<const int>(v));
    if (stats) *stats = r.stats;
    return r.sorted;
}

TEST(RsSort, EmptyAndSingleton) {
    SortStats st;
    EXPECT_TRUE(rs({}, &st).empty());
    EXPECT_EQ(st.comparisons, 0u);
    EXPECT_EQ(st.exchanges, 0u);
    EXPECT_EQ(rs({7}, &st), std::vector<int>{7});
    EXPECT_EQ(st.comparisons, 0u);
}

TEST(RsSort, ReversedFourHandTrace) {
    SortStats st;
    EXPECT_EQ(rs({4, 3, 2, 1}, &st), (std::vector<int>{1, 2, 3, 4}));
    EXPECT_EQ(st.comparisons, 6u);  // gaps 4,3,2,1 cost 0+1+2+3
    EXPECT_EQ(st.exchanges, 2u);    // (4,1) at gap 3, (3,2) at gap 1
    EXPECT_EQ(st.correction_passes, 0u);
}

TEST(RsSort, StartGapTwoOnFourElementsCostsFive) {
    std::vector<int> v{4, 3, 2, 1};
    const auto st = rs_sort_with_gap(std::span<int>(v), 2);
    EXPECT_EQ(st.comparisons, 5u);
    EXPECT_EQ(st.correction_passes, 0u);
    EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
}

TEST(RsSort, CorrectionPassesAreCountedWhenTheGapIsTooSmall) {
    std::vector<int> v{5, 4, 3, 2, 1};
    const auto st = rs_sort_with_gap(std::span<int>(v), 1);
    EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
    EXPECT_EQ(st.correction_passes, 3u);  // bubble sort needs 4 passes on reversed 5
    EXPECT_EQ(st.comparisons, 4u * 4u);
}

TEST(RsSort, DoesNotMutateInput) {
    const std::vector<int> in{3, 1, 2};
    auto r = rs_sort(std::span<const int>(in));
    EXPECT_EQ(in, (std::vector<int>{3, 1, 2}));
    EXPECT_EQ(r.sorted, (std::vector<int>{1, 2, 3}));
}

TEST(RsSort, CustomComparatorSortsDescending) {
    std::vector<int> v{1, 5, 2, 4, 3};
    rs_sort_in_place(std::span<int>(v), std::greater<>{});
    EXPECT_EQ(v, (std::vector<int>{5, 4, 3, 2, 1}));
}

// Sortedness, permutation and comparison-count identity over random inputs.
TEST(RsSort, PropertiesOnRandomInputs) {
    std::mt19937_64 gen(12345);
    const DistributionSpec specs[] = {DistributionSpec::discrete_uniform(50), DistributionSpec::poisson(4),
                                      DistributionSpec::binomial(400, 0.5)};
    for (int c = 0; c < 600; ++c) {
        const std::size_t n = gen() % 400;
        const auto& spec = specs[c % 3];
        auto in = sample(spec, n, SeededStream{99, n, c, spec.tag()});
        auto r = rs_sort(std::span<const Value>(in));
        ASSERT_TRUE(std::is_sorted(r.sorted.begin(), r.sorted.end()));
        auto expect = in;
        std::sort(expect.begin(), expect.end());
        ASSERT_EQ(r.sorted, expect);
        ASSERT_EQ(r.stats.correction_passes, 0u);
        if (n >= 2) {
            ASSERT_EQ(r.stats.comparisons, scheduled_comparisons(n, compute_gap_schedule(n).start_gap));
        }
        ASSERT_LE(r.stats.exchanges, r.stats.comparisons);
    }
}

TEST(Quicksort, SortsSmallInput) {
    for (auto v : {QuicksortVariant::hoare_first, QuicksortVariant::lomuto_last}) {
        const std::vector<int> in{3, 1, 2};
        EXPECT_EQ(quicksort_baseline(std::span<const int>(in), v).sorted, (std::vector<int>{1, 2, 3}));
    }
}

TEST(Quicksort, LomutoOnAllEqualIsTriangular) {
    for (std::size_t n : {4u, 8u, 16u}) {
        const std::vector<int> in(n, 7);
        const auto r = quicksort_baseline(std::span<const int>(in), QuicksortVariant::lomuto_last);
        EXPECT_EQ(r.stats.comparisons, n * (n - 1) / 2) << "n=" << n;
    }
}

// First-pivot Hoare on sorted input: a partition of size s costs s+1
// comparisons and peels one element, so total = sum_{s=2..n} (s+1).
TEST(Quicksort, HoareFirstOnSortedIsQuadratic) {
    std::uint64_t prev = 0;
    for (std::size_t n : {64u, 128u, 256u}) {
        std::vector<int> in(n);
        std::iota(in.begin(), in.end(), 0);
        const auto r = quicksort_baseline(std::span<const int>(in), QuicksortVariant::hoare_first);
        EXPECT_EQ(r.stats.comparisons, n * (n + 1) / 2 - 1 + (n - 1)) << "n=" << n;
        if (prev) {
            const double ratio = static_cast<double>(r.stats.comparisons) / static_cast<double>(prev);
            EXPECT_NEAR(ratio, 4.0, 0.15);
        }
        prev = r.stats.comparisons;
    }
}

TEST(Quicksort, DegenerateInputsDoNotExhaustTheStack) {
    const std::vector<int> in(20000, 1);
    const auto r = quicksort_baseline(std::span<const int>(in), QuicksortVariant::lomuto_last);
    EXPECT_EQ(r.stats.comparisons, 20000ull * 19999ull / 2);
}

TEST(Quicksort, RandomInputsBothVariants) {
    std::mt19937 gen(7);
    for (auto variant : {QuicksortVariant::hoare_first, QuicksortVariant::lomuto_last}) {
        for (int c = 0; c < 300; ++c) {
            std::vector<int> in(gen() % 300);
            const int range = 1 + static_cast<int>(gen() % 100);
            for (auto& x : in) x = static_cast<int>(gen() % range);
            auto r = quicksort_baseline(std::span<const int>(in), variant);
            auto expect = in;
            std::sort(expect.begin(), expect.end());
            ASSERT_EQ(r.sorted, expect);
            ASSERT_LE(r.stats.exchanges, r.stats.comparisons + in.size());
        }
    }
}

TEST(Quicksort, UnknownVariantIsAConfigError) {
    EXPECT_THROW(parse_quicksort_variant("median_of_three"), ConfigError);
    EXPECT_THROW(Algorithm::parse("quicksort:foo"), ConfigError);
    EXPECT_THROW(Algorithm::parse("bogosort"), ConfigError);
}

TEST(Algorithm, ParseAndName) {
    EXPECT_EQ(Algorithm::parse("rs_sort").name(), "rs_sort");
    EXPECT_EQ(Algorithm::parse("quicksort").name(), "quicksort_lomuto_last");
    EXPECT_EQ(Algorithm::parse("quicksort:hoare_first").name(), "quicksort_hoare_first");
    EXPECT_EQ(Algorithm::parse("quicksort_hoare_first"), Algorithm::quicksort(QuicksortVariant::hoare_first));
}

using Keyed = KeyedElement<int>;

TEST(Stability, EqualPairIsNeverExchanged) {
    const std::vector<Keyed> in{{1, 0}, {1, 1}};
    const auto v = stability_probe(std::span<const Keyed>(in), Algorithm::rs());
    EXPECT_TRUE(v.stable);
    EXPECT_FALSE(v.witness.has_value());
}

TEST(Stability, GappedExchangeJumpsAnEqualKey) {
    // a=0, b=1, c=2. Gap 2 swaps (2,a) with (1,c) over (2,b).
    const std::vector<Keyed> in{{2, 0}, {2, 1}, {1, 2}};
    const auto v = stability_probe(std::span<const Keyed>(in), Algorithm::rs());
    ASSERT_FALSE(v.stable);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_EQ(v.witness->first, (Keyed{2, 1}));
    EXPECT_EQ(v.witness->second, (Keyed{2, 0}));
}

TEST(Stability, ReferenceStableSortIsStable) {
    std::mt19937 gen(3);
    std::vector<int> keys(500);
    for (auto& k : keys) k = static_cast<int>(gen() % 10);
    const auto in = tag_keys(std::span<const int>(keys));
    const auto v = stability_probe(std::span<const Keyed>(in), [](std::span<Keyed> s) {
        std::stable_sort(s.begin(), s.end(), KeyLess{});
    });
    EXPECT_TRUE(v.stable);
}

}  // namespace
}  // namespace gapsort
