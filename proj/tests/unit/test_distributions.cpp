#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "gapsort/distributions.hpp"

namespace gapsort {
namespace {

// Reference output of SplitMix64 seeded with 0 (Vigna's splitmix64.c).
TEST(SplitMix64, ReferenceOutput) {
    SplitMix64 rng(0);
    EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafULL);
    EXPECT_EQ(rng.next(), 0x6e789e6aa1b965f4ULL);
    EXPECT_EQ(rng.next(), 0x06c45d188009454fULL);
}

TEST(SplitMix64, BoundedStaysInRange) {
    SplitMix64 rng(1);
    for (int i = 0; i < 10000; ++i) {
        ASSERT_LT(rng.bounded(7), 7u);
        const double u = rng.uniform01();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(SeededStream, EveryComponentChangesTheSeed) {
    const SeededStream base{42, 1000, 3, 1};
    EXPECT_NE(base.seed(), (SeededStream{43, 1000, 3, 1}.seed()));
    EXPECT_NE(base.seed(), (SeededStream{42, 1001, 3, 1}.seed()));
    EXPECT_NE(base.seed(), (SeededStream{42, 1000, 4, 1}.seed()));
    EXPECT_NE(base.seed(), (SeededStream{42, 1000, 3, 2}.seed()));
    EXPECT_NE((SeededStream{42, 1000, -1, 1}.seed()), (SeededStream{42, 1000, 1, 1}.seed()));
    EXPECT_EQ(base.seed(), (SeededStream{42, 1000, 3, 1}.seed()));
}

TEST(Sample, DeterministicForEqualInputs) {
    for (const auto& spec : {DistributionSpec::discrete_uniform(50), DistributionSpec::poisson(4),
                             DistributionSpec::binomial(400, 0.5)}) {
        const SeededStream s{7, 1000, 0, spec.tag()};
        EXPECT_EQ(sample(spec, 1000, s), sample(spec, 1000, s));
        EXPECT_NE(sample(spec, 1000, s), sample(spec, 1000, SeededStream{8, 1000, 0, spec.tag()}));
    }
}

TEST(Sample, EmptyRequest) {
    EXPECT_TRUE(sample(DistributionSpec::poisson(4), 0, {}).empty());
}

TEST(Sample, InvalidParametersAreConfigErrors) {
    EXPECT_THROW(sample(DistributionSpec::discrete_uniform(0), 1, {}), ConfigError);
    EXPECT_THROW(sample(DistributionSpec::poisson(0), 1, {}), ConfigError);
    EXPECT_THROW(sample(DistributionSpec::poisson(-1), 1, {}), ConfigError);
    EXPECT_THROW(sample(DistributionSpec::binomial(400, 0.0), 1, {}), ConfigError);
    EXPECT_THROW(sample(DistributionSpec::binomial(400, 1.0), 1, {}), ConfigError);
    EXPECT_THROW(sample(DistributionSpec::binomial(0, 0.5), 1, {}), ConfigError);
    EXPECT_THROW(DistributionSpec::parse_kind("gaussian"), ConfigError);
}

TEST(Sample, NamesAndParams) {
    EXPECT_EQ(DistributionSpec::discrete_uniform(50).params(), "k=50");
    EXPECT_EQ(DistributionSpec::poisson(4).params(), "lambda=4");
    EXPECT_EQ(DistributionSpec::binomial(400, 0.5).params(), "m=400;p=0.5");
    EXPECT_EQ(DistributionSpec::binomial().name(), "binomial");
}

// Exact mean, variance and fourth central moment by summing the pmf.
struct Moments {
    double mean = 0, var = 0, mu4 = 0;
};

Moments pmf_moments(const std::vector<double>& pmf, long offset) {
    Moments m;
    for (std::size_t i = 0; i < pmf.size(); ++i) m.mean += pmf[i] * static_cast<double>(static_cast<long>(i) + offset);
    for (std::size_t i = 0; i < pmf.size(); ++i) {
        const double d = static_cast<double>(static_cast<long>(i) + offset) - m.mean;
        m.var += pmf[i] * d * d;
        m.mu4 += pmf[i] * d * d * d * d;
    }
    return m;
}

std::vector<double> oracle_pmf(const DistributionSpec& s, long& offset) {
    std::vector<double> pmf;
    switch (s.kind) {
        case DistributionSpec::Kind::discrete_uniform:
            offset = 1;
            pmf.assign(static_cast<std::size_t>(s.k), 1.0 / static_cast<double>(s.k));
            break;
        case DistributionSpec::Kind::poisson:
            offset = 0;
            for (int x = 0; x < 80; ++x) pmf.push_back(std::exp(-s.lambda + x * std::log(s.lambda) - std::lgamma(x + 1.0)));
            break;
        case DistributionSpec::Kind::binomial: {
            offset = 0;
            const double m = static_cast<double>(s.m);
            for (long x = 0; x <= s.m; ++x) {
                const double xd = static_cast<double>(x);
                pmf.push_back(std::exp(std::lgamma(m + 1) - std::lgamma(xd + 1) - std::lgamma(m - xd + 1) +
                                       xd * std::log(s.p) + (m - xd) * std::log1p(-s.p)));
            }
            break;
        }
    }
    return pmf;
}

class MomentTest : public ::testing::TestWithParam<DistributionSpec> {};

TEST_P(MomentTest, MillionDrawsMatchAnalyticMoments) {
    const auto spec = GetParam();
    constexpr std::size_t n = 1'000'000;
    const auto xs = sample(spec, n, SeededStream{20240101, n, 0, spec.tag()});
    long offset = 0;
    const auto pmf = oracle_pmf(spec, offset);
    const auto m = pmf_moments(pmf, offset);

    double mean = 0;
    for (auto x : xs) mean += static_cast<double>(x);
    mean /= n;
    double var = 0;
    for (auto x : xs) var += (static_cast<double>(x) - mean) * (static_cast<double>(x) - mean);
    var /= (n - 1);

    const double se_mean = std::sqrt(m.var / n);
    const double se_var = std::sqrt((m.mu4 - m.var * m.var) / n);
    EXPECT_LE(std::fabs(mean - m.mean), 5 * se_mean) << spec.name();
    EXPECT_LE(std::fabs(var - m.var), 5 * se_var) << spec.name();

    for (auto x : xs) {
        ASSERT_GE(x, offset);
        if (spec.kind == DistributionSpec::Kind::discrete_uniform) {
            ASSERT_LE(x, spec.k);
        }
        if (spec.kind == DistributionSpec::Kind::binomial) {
            ASSERT_LE(x, spec.m);
        }
    }
}

INSTANTIATE_TEST_SUITE_P(DefaultModels, MomentTest,
                         ::testing::Values(DistributionSpec::discrete_uniform(50), DistributionSpec::poisson(4),
                                           DistributionSpec::binomial(400, 0.5)),
                         [](const auto& info) { return info.param.name(); });

TEST(Sample, DiscreteUniformAnalyticMean) {
    // (k+1)/2 and (k^2-1)/12 for k = 50.
    long offset = 0;
    const auto pmf = oracle_pmf(DistributionSpec::discrete_uniform(50), offset);
    const auto m = pmf_moments(pmf, offset);
    EXPECT_NEAR(m.mean, 25.5, 1e-12);
    EXPECT_NEAR(m.var, (50.0 * 50.0 - 1.0) / 12.0, 1e-9);
}

}  // namespace
}  // namespace gapsort
