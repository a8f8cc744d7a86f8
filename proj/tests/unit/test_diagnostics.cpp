#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "gapsort/stats/diagnostics.hpp"
#include "table1_fit.hpp"

namespace gapsort::stats {
namespace {

TEST(FlagUnusual, FixtureColumn) {
    const auto r = testing::table1_rs_du_fit().report;
    const auto flags = flag_unusual(r);
    ASSERT_EQ(flags.size(), 20u);
    for (std::size_t i = 0; i < flags.size(); ++i) {
        EXPECT_EQ(flags[i].large_std_resid, i == 15) << "obs " << i + 1;
        EXPECT_EQ(flags[i].high_leverage, i == 0) << "obs " << i + 1;
    }
    EXPECT_NEAR(r.std_resid[15], -2.18714, 5e-5);
    EXPECT_NEAR(r.std_resid[0], 1.37876, 5e-5);
    EXPECT_NEAR(r.se_fit[0], 0.0106239, 5e-7);
    EXPECT_NEAR(r.leverage[0], 0.72157, 5e-5);
    EXPECT_EQ(r.flags, flags);
}

TEST(FlagUnusual, ThresholdsAreStrict) {
    RegressionReport r;
    r.n_obs = 4;
    r.coef = {1.0};
    r.std_resid = {2.0, -2.0001, 0.0, 0.0};
    r.leverage = {0.75, 0.1, 0.7501, 0.0};
    const auto f = flag_unusual(r);
    EXPECT_FALSE(f[0].large_std_resid);
    EXPECT_TRUE(f[1].large_std_resid);
    EXPECT_FALSE(f[0].high_leverage);
    EXPECT_TRUE(f[2].high_leverage);
}

TEST(PruneAndConclude, FixtureColumn) {
    const auto fit = testing::table1_rs_du_fit();
    const auto v = prune_and_conclude(fit);
    EXPECT_TRUE(v.conclusive);
    ASSERT_EQ(v.pruned.size(), 1u);
    EXPECT_EQ(v.pruned[0], Term::n_squared);
    ASSERT_TRUE(v.dominant.has_value());
    EXPECT_EQ(*v.dominant, Term::n_log2n);
    EXPECT_EQ(v.class_label, "(n lg n)^1.333");
    EXPECT_EQ(v.statement, "O_emp((n lg n)^1.333)");
    ASSERT_EQ(v.reduced_coef.size(), 3u);
    EXPECT_EQ(v.reduced_coef[2], fit.report.coef[2]);
    EXPECT_FALSE(v.refit.has_value());
}

TEST(PruneAndConclude, RefitUsesSurvivingTerms) {
    const auto v = prune_and_conclude(testing::table1_rs_du_fit(), {0.05, true});
    ASSERT_TRUE(v.refit.has_value());
    EXPECT_EQ(v.refit->n_terms(), 3u);
    EXPECT_EQ(v.refit->df_error, 17u);
}

TEST(PruneAndConclude, LinearDataWithUnitLambda) {
    std::vector<double> n, y;
    std::mt19937 gen(3);
    std::uniform_real_distribution<double> jitter(-0.5, 0.5);
    for (int i = 1; i <= 20; ++i) {
        n.push_back(1000.0 * i);
        y.push_back(n.back() + 50 + jitter(gen));
    }
    const ModelSpec model{1.0, {Term::constant, Term::n}};
    const auto v = prune_and_conclude(fit_empirical(n, y, model));
    EXPECT_EQ(v.class_label, "n");
    EXPECT_EQ(v.statement, "O_emp(n)");
}

TEST(PruneAndConclude, NothingSignificantIsInconclusive) {
    std::vector<double> n, y;
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> noise(5.0, 6.0);
    for (int i = 1; i <= 20; ++i) {
        n.push_back(5000.0 * i);
        y.push_back(noise(gen));
    }
    const auto fit = fit_empirical(n, y, ModelSpec{});
    const double alpha = 0.001;
    for (std::size_t j = 1; j < 4; ++j) ASSERT_GT(fit.report.p_value[j], alpha);
    const auto v = prune_and_conclude(fit, {alpha, true});
    EXPECT_FALSE(v.conclusive);
    EXPECT_EQ(v.class_label, "inconclusive");
    EXPECT_EQ(v.pruned.size(), 3u);
    EXPECT_FALSE(v.refit.has_value());
}

TEST(PruneAndConclude, RejectsBadAlpha) {
    const auto fit = testing::table1_rs_du_fit();
    EXPECT_THROW(prune_and_conclude(fit, {0.0}), ConfigError);
    EXPECT_THROW(prune_and_conclude(fit, {1.0}), ConfigError);
}

TEST(ResidualDiagnostics, FixtureColumn) {
    const auto r = testing::table1_rs_du_fit().report;
    const auto s = residual_diagnostics(r);
    ASSERT_EQ(s.normal_probability.size(), 20u);
    ASSERT_EQ(s.versus_fits.size(), 20u);
    ASSERT_EQ(s.versus_order.size(), 20u);
    for (std::size_t i = 0; i < 10; ++i) {
        EXPECT_NEAR(s.normal_probability[i].first, -s.normal_probability[19 - i].first, 1e-9);
    }
    EXPECT_TRUE(std::is_sorted(s.normal_probability.begin(), s.normal_probability.end()));
    std::size_t total = 0;
    for (const auto& b : s.histogram) total += b.count;
    EXPECT_EQ(total, 20u);
    EXPECT_EQ(s.histogram.size(), 6u);
    std::vector<double> order;
    for (auto [x, e] : s.versus_order) order.push_back(e);
    EXPECT_NEAR(durbin_watson(order), 1.752081, 1e-6);
}

TEST(ResidualDiagnostics, ZeroResidualsGiveFlatSeries) {
    std::vector<double> x{1, 2, 3, 4, 5};
    std::vector<double> y;
    for (double v : x) y.push_back(3 * v - 2);
    const Term terms[] = {Term::constant, Term::n};
    auto r = ols_fit(build_design(x, terms), y);
    for (auto& e : r.residuals) e = 0.0;
    const auto s = residual_diagnostics(r);
    for (auto [q, e] : s.normal_probability) EXPECT_EQ(e, 0.0);
    ASSERT_EQ(s.histogram.size(), 1u);
    EXPECT_EQ(s.histogram[0].count, 5u);
    EXPECT_EQ(durbin_watson(r.residuals), 0.0);
    for (const auto& f : r.flags) EXPECT_FALSE(f.any());
}

}  // namespace
}  // namespace gapsort::stats
