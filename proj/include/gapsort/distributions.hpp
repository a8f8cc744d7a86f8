#pragma once

// Seeded sampling of the three discrete input models used in the benchmarks:
// discrete uniform on [1, k], Poisson(lambda) and Binomial(m, p).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace gapsort {

using Value = std::int64_t;

/// SplitMix64 (Steele, Lea, Flood 2014). Weyl increment 0x9e3779b97f4a7c15,
/// finalizer multipliers 0xbf58476d1ce4e5b9 and 0x94d049bb133111eb with shifts
/// 30, 27, 31. Output depends only on the 64-bit state, so streams replay
/// bit-identically on every platform.
class SplitMix64 {
public:
    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    constexpr std::uint64_t next() noexcept { return mix(state_ += kGolden); }

    /// Uniform double in [0, 1) from the top 53 bits.
    constexpr double uniform01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Unbiased integer in [0, bound), Lemire's multiply-and-reject.
    std::uint64_t bounded(std::uint64_t bound) noexcept {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(next()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    std::uint64_t state_;
};

/// Identifies one independent stream: a campaign master seed plus the
/// (size, trial, distribution) cell it feeds.
struct SeededStream {
    std::uint64_t master_seed = 0;
    std::uint64_t n = 0;
    std::int64_t trial_index = 0;
    std::uint64_t distribution_tag = 0;

    /// Seed of this stream: master seed folded with each id component
    /// through the SplitMix64 finalizer.
    constexpr std::uint64_t seed() const noexcept {
        std::uint64_t h = SplitMix64::mix(master_seed + SplitMix64::kGolden);
        h = SplitMix64::mix(h ^ (n + SplitMix64::kGolden));
        h = SplitMix64::mix(h ^ (static_cast<std::uint64_t>(trial_index) + SplitMix64::kGolden));
        h = SplitMix64::mix(h ^ (distribution_tag + SplitMix64::kGolden));
        return h;
    }
};

struct DistributionSpec {
    enum class Kind { discrete_uniform, poisson, binomial };

    Kind kind = Kind::discrete_uniform;
    std::int64_t k = 50;
    double lambda = 4.0;
    std::int64_t m = 400;
    double p = 0.5;

    static DistributionSpec discrete_uniform(std::int64_t k = 50) { return {Kind::discrete_uniform, k, 0, 0, 0}; }
    static DistributionSpec poisson(double lambda = 4.0) { return {Kind::poisson, 0, lambda, 0, 0}; }
    static DistributionSpec binomial(std::int64_t m = 400, double p = 0.5) { return {Kind::binomial, 0, 0, m, p}; }

    /// Short name used in CSV files: "du", "poisson" or "binomial".
    std::string name() const {
        switch (kind) {
            case Kind::discrete_uniform: return "du";
            case Kind::poisson: return "poisson";
            case Kind::binomial: return "binomial";
        }
        return {};
    }

    /// Parameter string without commas, e.g. "k=50", "lambda=4", "m=400;p=0.5".
    std::string params() const {
        switch (kind) {
            case Kind::discrete_uniform: return "k=" + std::to_string(k);
            case Kind::poisson: return "lambda=" + format_real(lambda);
            case Kind::binomial: return "m=" + std::to_string(m) + ";p=" + format_real(p);
        }
        return {};
    }

    std::uint64_t tag() const noexcept { return static_cast<std::uint64_t>(kind) + 1; }

    static Kind parse_kind(std::string_view s) {
        if (s == "du" || s == "discrete_uniform" || s == "uniform") return Kind::discrete_uniform;
        if (s == "poisson") return Kind::poisson;
        if (s == "binomial") return Kind::binomial;
        throw ConfigError("unknown distribution '" + std::string(s) + "' (expected du, poisson or binomial)");
    }

    void validate() const {
        switch (kind) {
            case Kind::discrete_uniform:
                if (k < 1) throw ConfigError("discrete uniform needs k >= 1, got " + std::to_string(k));
                break;
            case Kind::poisson:
                if (!(lambda > 0.0)) throw ConfigError("poisson needs lambda > 0, got " + format_real(lambda));
                // exp(-lambda) must stay a normal double for inversion.
                if (lambda > 700.0) throw ConfigError("poisson lambda too large for inversion: " + format_real(lambda));
                break;
            case Kind::binomial:
                if (m < 1) throw ConfigError("binomial needs m >= 1, got " + std::to_string(m));
                if (m > 10'000'000) throw ConfigError("binomial m too large to tabulate: " + std::to_string(m));
                if (!(p > 0.0 && p < 1.0)) throw ConfigError("binomial needs 0 < p < 1, got " + format_real(p));
                break;
        }
    }

    friend bool operator==(const DistributionSpec& a, const DistributionSpec& b) {
        if (a.kind != b.kind) return false;
        switch (a.kind) {
            case Kind::discrete_uniform: return a.k == b.k;
            case Kind::poisson: return a.lambda == b.lambda;
            case Kind::binomial: return a.m == b.m && a.p == b.p;
        }
        return false;
    }

    static std::string format_real(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", v);
        return buf;
    }
};

/// Draws from one DistributionSpec. Construction validates the spec and, for
/// the binomial, tabulates the CDF over [0, m] once.
class Sampler {
public:
    explicit Sampler(const DistributionSpec& spec) : spec_(spec) {
        spec_.validate();
        if (spec_.kind == DistributionSpec::Kind::poisson) {
            p0_ = std::exp(-spec_.lambda);
        } else if (spec_.kind == DistributionSpec::Kind::binomial) {
            build_binomial_cdf();
        }
    }

    const DistributionSpec& spec() const noexcept { return spec_; }

    Value draw(SplitMix64& rng) const {
        switch (spec_.kind) {
            case DistributionSpec::Kind::discrete_uniform:
                return 1 + static_cast<Value>(rng.bounded(static_cast<std::uint64_t>(spec_.k)));
            case DistributionSpec::Kind::poisson: return draw_poisson(rng.uniform01());
            case DistributionSpec::Kind::binomial: return draw_binomial(rng.uniform01());
        }
        return 0;
    }

private:
    // Sequential search inversion; pmf recurrence p(x) = p(x-1) * lambda / x.
    Value draw_poisson(double u) const {
        Value x = 0;
        double pmf = p0_;
        double cdf = pmf;
        while (u >= cdf) {
            ++x;
            pmf *= spec_.lambda / static_cast<double>(x);
            if (pmf == 0.0) break;  // u sits in the rounding gap below 1
            cdf += pmf;
        }
        return x;
    }

    Value draw_binomial(double u) const {
        auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
        if (it == cdf_.end()) --it;
        return static_cast<Value>(it - cdf_.begin());
    }

    void build_binomial_cdf() {
        const auto m = static_cast<double>(spec_.m);
        const double lp = std::log(spec_.p);
        const double lq = std::log1p(-spec_.p);
        cdf_.resize(static_cast<std::size_t>(spec_.m) + 1);
        double acc = 0.0;
        for (std::size_t x = 0; x < cdf_.size(); ++x) {
            const auto xd = static_cast<double>(x);
            const double log_pmf = std::lgamma(m + 1) - std::lgamma(xd + 1) - std::lgamma(m - xd + 1) +
                                   xd * lp + (m - xd) * lq;
            acc += std::exp(log_pmf);
            cdf_[x] = acc;
        }
        for (double& c : cdf_) c /= acc;
        cdf_.back() = 1.0;
    }

    DistributionSpec spec_;
    double p0_ = 0.0;
    std::vector<double> cdf_;
};

/// n draws from `spec`, fully determined by (spec, n, stream).
inline std::vector<Value> sample(const DistributionSpec& spec, std::size_t n, const SeededStream& stream) {
    Sampler sampler(spec);
    SplitMix64 rng(stream.seed());
    std::vector<Value> out(n);
    for (auto& v : out) v = sampler.draw(rng);
    return out;
}

}  // namespace gapsort
