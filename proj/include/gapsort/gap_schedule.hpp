#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "error.hpp"

namespace gapsort {

/// Starting gap for RS sort and the ingredients it is built from.
///
///   t_factor   = ceil((sqrt(1 + 8n) - 1) / (2 * log2(n)))   real-valued log2
///   log2n_ceil = ceil(log2(n))                               integer
///   start_gap  = t_factor * log2n_ceil
///
/// Both roundings go up, so the schedule never starts below the estimate.
struct GapSchedule {
    std::uint64_t n = 0;
    std::uint64_t t_factor = 0;
    std::uint64_t log2n_ceil = 0;
    std::uint64_t start_gap = 0;

    friend bool operator==(const GapSchedule&, const GapSchedule&) = default;
};

/// ceil(log2(n)) for n >= 1, exact in integer arithmetic.
constexpr std::uint64_t ceil_log2(std::uint64_t n) noexcept {
    return n <= 1 ? 0 : static_cast<std::uint64_t>(std::bit_width(n - 1));
}

inline GapSchedule compute_gap_schedule(std::uint64_t n) {
    if (n < 2) {
        throw DomainError("gap schedule needs n >= 2, got n = " + std::to_string(n));
    }
    const long double nn = static_cast<long double>(n);
    const long double x = (std::sqrt(1.0L + 8.0L * nn) - 1.0L) / (2.0L * std::log2(nn));

    GapSchedule g;
    g.n = n;
    g.t_factor = static_cast<std::uint64_t>(std::ceil(x));
    if (g.t_factor == 0) g.t_factor = 1;
    g.log2n_ceil = ceil_log2(n);
    g.start_gap = g.t_factor * g.log2n_ceil;
    return g;
}

/// Comparisons made by one uncorrected run of gaps start_gap..1 over n items:
/// sum over g of max(0, n - g).
constexpr std::uint64_t scheduled_comparisons(std::uint64_t n, std::uint64_t start_gap) noexcept {
    std::uint64_t total = 0;
    for (std::uint64_t g = 1; g <= start_gap && g < n; ++g) total += n - g;
    return total;
}

}  // namespace gapsort
