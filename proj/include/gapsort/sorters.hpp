#pragma once

// RS sort (descending-gap exchange passes), the textbook quicksort baselines
// it is measured against, the minimum-sufficient-gap search and a stability
// probe. All sorts share one instrumentation model: a comparison is counted at
// every key-vs-key evaluation, an exchange at every element swap.

#include <algorithm>
#include <chrono>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "gap_schedule.hpp"

namespace gapsort {

struct SortStats {
    std::uint64_t comparisons = 0;
    std::uint64_t exchanges = 0;
    std::chrono::nanoseconds elapsed{0};
    /// Extra gap-1 passes run after the schedule because the output was not
    /// yet sorted. Zero whenever the start gap was sufficient.
    std::uint64_t correction_passes = 0;
};

template <class T>
struct SortResult {
    std::vector<T> sorted;
    SortStats stats;
};

namespace detail {

template <class T, class Compare>
bool gap_pass(std::span<T> a, std::size_t gap, Compare& comp, SortStats& stats) {
    bool exchanged = false;
    for (std::size_t j = 0; j + gap < a.size(); ++j) {
        ++stats.comparisons;
        if (comp(a[j + gap], a[j])) {
            std::swap(a[j], a[j + gap]);
            ++stats.exchanges;
            exchanged = true;
        }
    }
    return exchanged;
}

template <class Fn>
SortStats timed(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    SortStats stats = fn();
    stats.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start);
    return stats;
}

}  // namespace detail

/// Runs gaps start_gap, start_gap-1, ..., 1 over `a` exactly once each, with no
/// correction. Gaps >= a.size() are no-ops and cost nothing.
template <class T, class Compare = std::less<>>
SortStats run_gap_schedule(std::span<T> a, std::uint64_t start_gap, Compare comp = {}) {
    SortStats stats;
    if (a.size() < 2) return stats;
    const std::uint64_t top = std::min<std::uint64_t>(start_gap, a.size() - 1);
    for (std::uint64_t gap = top; gap >= 1; --gap) {
        detail::gap_pass(a, static_cast<std::size_t>(gap), comp, stats);
    }
    return stats;
}

/// RS sort in place with an explicit start gap, followed by the sortedness
/// safety net. The verification scan itself is not counted; correction
/// passes are, at n-1 comparisons each.
template <class T, class Compare = std::less<>>
SortStats rs_sort_with_gap(std::span<T> a, std::uint64_t start_gap, Compare comp = {}) {
    return detail::timed([&] {
        SortStats stats = run_gap_schedule(a, start_gap, comp);
        while (!std::is_sorted(a.begin(), a.end(), comp)) {
            detail::gap_pass(a, 1, comp, stats);
            ++stats.correction_passes;
        }
        return stats;
    });
}

template <class T, class Compare = std::less<>>
SortStats rs_sort_in_place(std::span<T> a, Compare comp = {}) {
    if (a.size() < 2) return {};
    return rs_sort_with_gap(a, compute_gap_schedule(a.size()).start_gap, comp);
}

template <class T, class Compare = std::less<>>
SortResult<T> rs_sort(std::span<const T> a, Compare comp = {}) {
    SortResult<T> r{std::vector<T>(a.begin(), a.end()), {}};
    r.stats = rs_sort_in_place(std::span<T>(r.sorted), comp);
    return r;
}

// ---------------------------------------------------------------------------
// Quicksort baselines

enum class QuicksortVariant {
    hoare_first,  ///< Hoare partition, first element as pivot
    lomuto_last,  ///< Lomuto partition, last element as pivot
};

inline std::string_view to_string(QuicksortVariant v) {
    return v == QuicksortVariant::hoare_first ? "hoare_first" : "lomuto_last";
}

inline QuicksortVariant parse_quicksort_variant(std::string_view s) {
    if (s == "hoare_first") return QuicksortVariant::hoare_first;
    if (s == "lomuto_last") return QuicksortVariant::lomuto_last;
    throw ConfigError("unknown quicksort variant '" + std::string(s) +
                      "' (expected hoare_first or lomuto_last)");
}

namespace detail {

template <class T, class Compare>
std::size_t lomuto_partition(std::span<T> a, std::size_t lo, std::size_t hi, Compare& comp,
                             SortStats& stats) {
    // a[hi] stays in place until the final swap, so reading it by reference is safe.
    const T& pivot = a[hi];
    std::size_t store = lo;
    for (std::size_t j = lo; j < hi; ++j) {
        ++stats.comparisons;
        if (!comp(pivot, a[j])) {
            std::swap(a[store], a[j]);
            ++stats.exchanges;
            ++store;
        }
    }
    std::swap(a[store], a[hi]);
    ++stats.exchanges;
    return store;
}

// Returns j such that [lo, j] <= pivot <= [j+1, hi], lo <= j < hi.
template <class T, class Compare>
std::size_t hoare_partition(std::span<T> a, std::size_t lo, std::size_t hi, Compare& comp,
                            SortStats& stats) {
    const T pivot = a[lo];
    std::size_t i = lo;
    std::size_t j = hi + 1;
    bool first = true;
    for (;;) {
        do {
            --j;
            ++stats.comparisons;
        } while (comp(pivot, a[j]));
        if (first) {
            first = false;
        } else {
            ++i;
        }
        ++stats.comparisons;
        while (comp(a[i], pivot)) {
            ++i;
            ++stats.comparisons;
        }
        if (i >= j) return j;
        std::swap(a[i], a[j]);
        ++stats.exchanges;
    }
}

}  // namespace detail

/// Textbook quicksort with an explicit range stack (smaller side first), so
/// degenerate partitions cost time but never call-stack depth.
template <class T, class Compare = std::less<>>
SortStats quicksort_in_place(std::span<T> a, QuicksortVariant variant, Compare comp = {}) {
    if (a.size() < 2) return {};
    return detail::timed([&] {
        SortStats stats;
        std::vector<std::pair<std::size_t, std::size_t>> pending{{0, a.size() - 1}};
        while (!pending.empty()) {
            auto [lo, hi] = pending.back();
            pending.pop_back();
            if (lo >= hi) continue;

            std::pair<std::size_t, std::size_t> left, right;
            if (variant == QuicksortVariant::lomuto_last) {
                const std::size_t p = detail::lomuto_partition(a, lo, hi, comp, stats);
                left = p == lo ? std::pair<std::size_t, std::size_t>{1, 0} : std::pair{lo, p - 1};
                right = {p + 1, hi};
            } else {
                const std::size_t p = detail::hoare_partition(a, lo, hi, comp, stats);
                left = {lo, p};
                right = {p + 1, hi};
            }
            const auto size = [](auto r) { return r.first > r.second ? 0 : r.second - r.first + 1; };
            if (size(left) < size(right)) std::swap(left, right);
            if (size(left) > 1) pending.push_back(left);
            if (size(right) > 1) pending.push_back(right);
        }
        return stats;
    });
}

template <class T, class Compare = std::less<>>
SortResult<T> quicksort_baseline(std::span<const T> a, QuicksortVariant variant, Compare comp = {}) {
    SortResult<T> r{std::vector<T>(a.begin(), a.end()), {}};
    r.stats = quicksort_in_place(std::span<T>(r.sorted), variant, comp);
    return r;
}

// ---------------------------------------------------------------------------
// Algorithm selection

struct Algorithm {
    enum class Kind { rs_sort, quicksort };

    Kind kind = Kind::rs_sort;
    QuicksortVariant variant = QuicksortVariant::lomuto_last;

    static Algorithm rs() { return {}; }
    static Algorithm quicksort(QuicksortVariant v) { return {Kind::quicksort, v}; }

    std::string name() const {
        return kind == Kind::rs_sort ? "rs_sort" : "quicksort_" + std::string(to_string(variant));
    }

    /// Accepts "rs_sort", "quicksort" (lomuto_last), "quicksort_<variant>" and
    /// "quicksort:<variant>".
    static Algorithm parse(std::string_view s) {
        if (s == "rs_sort" || s == "rs") return rs();
        if (s == "quicksort") return quicksort(QuicksortVariant::lomuto_last);
        for (std::string_view prefix : {"quicksort_", "quicksort:"}) {
            if (s.starts_with(prefix)) return quicksort(parse_quicksort_variant(s.substr(prefix.size())));
        }
        throw ConfigError("unknown algorithm '" + std::string(s) + "'");
    }

    friend bool operator==(const Algorithm&, const Algorithm&) = default;
};

template <class T, class Compare = std::less<>>
SortStats sort_in_place(const Algorithm& algo, std::span<T> a, Compare comp = {}) {
    if (algo.kind == Algorithm::Kind::rs_sort) return rs_sort_in_place(a, comp);
    return quicksort_in_place(a, algo.variant, comp);
}

// ---------------------------------------------------------------------------
// Minimum sufficient gap

enum class GapSearch { binary, linear };

inline GapSearch parse_gap_search(std::string_view s) {
    if (s == "binary") return GapSearch::binary;
    if (s == "linear") return GapSearch::linear;
    throw ConfigError("unknown gap search strategy '" + std::string(s) + "'");
}

struct MinGapResult {
    std::uint64_t min_gap = 0;
    std::uint64_t formula_gap = 0;
    /// Linear-oracle answer, when it was computed.
    std::optional<std::uint64_t> oracle_gap;
    /// Set when the binary search premise did not hold for this input.
    std::optional<std::string> diagnostic;
};

struct MinGapOptions {
    /// Cross-check a binary answer against the linear oracle. The oracle costs
    /// O(n K^2) comparisons; disable it for large inputs.
    bool cross_check_oracle = true;
};

namespace detail {

template <class T, class Compare>
bool gap_sorts(std::span<const T> a, std::uint64_t start_gap, Compare comp) {
    std::vector<T> work(a.begin(), a.end());
    run_gap_schedule(std::span<T>(work), start_gap, comp);
    return std::is_sorted(work.begin(), work.end(), comp);
}

template <class T, class Compare>
std::uint64_t linear_min_gap(std::span<const T> a, Compare comp) {
    // Gaps >= n are no-ops, so n-1 is the last start gap that can differ.
    for (std::uint64_t k = 1; k < a.size(); ++k) {
        if (gap_sorts(a, k, comp)) return k;
    }
    throw DomainError("no starting gap in [1, n-1] sorts this input");
}

}  // namespace detail

/// Smallest start gap K such that one run of gaps K..1 sorts `a`.
template <class T, class Compare = std::less<>>
MinGapResult min_sufficient_gap(std::span<const T> a, GapSearch strategy, MinGapOptions opts = {},
                                Compare comp = {}) {
    if (a.size() < 2) {
        throw DomainError("min_sufficient_gap needs at least 2 elements");
    }
    MinGapResult r;
    r.formula_gap = compute_gap_schedule(a.size()).start_gap;

    if (strategy == GapSearch::linear) {
        r.min_gap = detail::linear_min_gap(a, comp);
        r.oracle_gap = r.min_gap;
        return r;
    }

    std::uint64_t lo = 1;
    std::uint64_t hi = std::min<std::uint64_t>(r.formula_gap, a.size() - 1);
    if (!detail::gap_sorts(a, hi, comp)) {
        r.diagnostic = "formula start gap " + std::to_string(r.formula_gap) + " does not sort this input";
        hi = a.size() - 1;
        if (!detail::gap_sorts(a, hi, comp)) {
            throw DomainError("no starting gap in [1, n-1] sorts this input");
        }
    }
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (detail::gap_sorts(a, mid, comp)) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    r.min_gap = lo;

    // lo sorts by construction; lo-1 must not, or the predicate was not monotone.
    if (lo > 1 && detail::gap_sorts(a, lo - 1, comp)) {
        r.diagnostic = "monotonicity violation: start gap " + std::to_string(lo - 1) +
                       " sorts but binary search settled on " + std::to_string(lo);
    }
    if (opts.cross_check_oracle) {
        r.oracle_gap = detail::linear_min_gap(a, comp);
        if (*r.oracle_gap != r.min_gap) {
            r.diagnostic = "monotonicity violation: binary search found " + std::to_string(r.min_gap) +
                           ", linear oracle found " + std::to_string(*r.oracle_gap);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Stability probe

template <class Key>
struct KeyedElement {
    Key key{};
    std::size_t tag = 0;  ///< position in the original input

    friend bool operator==(const KeyedElement&, const KeyedElement&) = default;
};

/// Tags a plain key sequence with its original indices.
template <class Key>
std::vector<KeyedElement<Key>> tag_keys(std::span<const Key> keys) {
    std::vector<KeyedElement<Key>> out;
    out.reserve(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) out.push_back({keys[i], i});
    return out;
}

template <class Key>
struct StabilityVerdict {
    bool stable = true;
    /// Two equal-key elements in output order whose tags are inverted.
    std::optional<std::pair<KeyedElement<Key>, KeyedElement<Key>>> witness;
};

struct KeyLess {
    template <class Key>
    bool operator()(const KeyedElement<Key>& a, const KeyedElement<Key>& b) const {
        return a.key < b.key;
    }
};

/// Sorts a copy of `input` by key only with `sorter` (called on a mutable
/// span of KeyedElement) and reports whether equal keys kept their order.
/// The verdict is about this input only; it does not prove stability.
template <class Key, class Sorter>
    requires std::invocable<Sorter&, std::span<KeyedElement<Key>>>
StabilityVerdict<Key> stability_probe(std::span<const KeyedElement<Key>> input, Sorter&& sorter) {
    std::vector<KeyedElement<Key>> work(input.begin(), input.end());
    sorter(std::span<KeyedElement<Key>>(work));

    StabilityVerdict<Key> v;
    for (std::size_t i = 1; i < work.size(); ++i) {
        if (!(work[i - 1].key < work[i].key) && !(work[i].key < work[i - 1].key) &&
            work[i - 1].tag > work[i].tag) {
            v.stable = false;
            v.witness = std::pair{work[i - 1], work[i]};
            break;
        }
    }
    return v;
}

template <class Key>
StabilityVerdict<Key> stability_probe(std::span<const KeyedElement<Key>> input, const Algorithm& algo) {
    return stability_probe(input, [&](std::span<KeyedElement<Key>> s) { sort_in_place(algo, s, KeyLess{}); });
}

}  // namespace gapsort
