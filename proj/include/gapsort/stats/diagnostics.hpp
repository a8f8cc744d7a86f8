#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regression.hpp"

namespace gapsort::stats {

struct PruneOptions {
    double alpha = 0.05;
    /// Refit on the surviving terms. Off by default: the reduced model keeps
    /// the full-model coefficients.
    bool refit = false;
};

struct EmpiricalVerdict {
    std::vector<Term> retained;
    std::vector<Term> pruned;
    std::optional<Term> dominant;
    double exponent = 1.0;  ///< 1 / lambda
    bool conclusive = false;
    std::string class_label;  ///< e.g. "(n lg n)^1.333", "n", or "inconclusive"
    std::string statement;    ///< e.g. "O_emp((n lg n)^1.333)"
    /// Reduced-model coefficients, aligned with `retained`.
    std::vector<double> reduced_coef;
    std::optional<RegressionReport> refit;
};

inline std::string growth_label(Term t) {
    switch (t) {
        case Term::constant: return "1";
        case Term::n: return "n";
        case Term::n_log2n: return "n lg n";
        case Term::n_squared: return "n^2";
    }
    return {};
}

/// Drops non-constant terms with p > alpha, then states the empirical class
/// g(n)^(1/lambda) of the fastest-growing survivor g.
inline EmpiricalVerdict prune_and_conclude(const EmpiricalFit& fit, PruneOptions opts = {}) {
    if (!(opts.alpha > 0.0 && opts.alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
    const auto& terms = fit.model.terms;
    const auto& r = fit.report;

    EmpiricalVerdict v;
    v.exponent = 1.0 / fit.model.lambda;
    for (std::size_t j = 0; j < terms.size(); ++j) {
        if (terms[j] == Term::constant || !(r.p_value[j] > opts.alpha)) {
            v.retained.push_back(terms[j]);
            v.reduced_coef.push_back(r.coef[j]);
        } else {
            v.pruned.push_back(terms[j]);
        }
    }
    for (Term t : v.retained) {
        if (t == Term::constant) continue;
        if (!v.dominant || growth_rank(t) > growth_rank(*v.dominant)) v.dominant = t;
    }

    if (opts.refit && v.dominant) {
        ModelSpec reduced{fit.model.lambda, v.retained};
        v.refit = fit_empirical(fit.n, fit.y, reduced).report;
    }

    if (!v.dominant) {
        v.class_label = "inconclusive";
        v.statement = "inconclusive: no growth term is significant at alpha = " + std::to_string(opts.alpha);
        return v;
    }
    v.conclusive = true;
    const std::string g = growth_label(*v.dominant);
    if (std::fabs(v.exponent - 1.0) < 1e-12) {
        v.class_label = g;
    } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", std::trunc(v.exponent * 1000.0) / 1000.0);
        std::string e = buf;
        while (e.back() == '0') e.pop_back();
        if (e.back() == '.') e.pop_back();
        v.class_label = (g.find(' ') != std::string::npos || g.find('^') != std::string::npos ? "(" + g + ")" : g) +
                        "^" + e;
    }
    v.statement = "O_emp(" + v.class_label + ")";
    return v;
}

struct HistogramBin {
    double lo = 0;
    double hi = 0;
    std::size_t count = 0;
};

/// The four residual panels: normal probability, versus fits, histogram and
/// versus observation order.
struct ResidualSeries {
    std::vector<std::pair<double, double>> normal_probability;  ///< (normal quantile, ordered residual)
    std::vector<std::pair<double, double>> versus_fits;         ///< (fitted, residual)
    std::vector<HistogramBin> histogram;
    std::vector<std::pair<double, double>> versus_order;        ///< (1-based observation, residual)
};

inline ResidualSeries residual_diagnostics(const RegressionReport& r) {
    ResidualSeries out;
    const std::size_t m = r.residuals.size();
    if (m == 0) return out;

    std::vector<double> ordered = r.residuals;
    std::sort(ordered.begin(), ordered.end());
    for (std::size_t i = 0; i < m; ++i) {
        const double pos = (static_cast<double>(i + 1) - 0.375) / (static_cast<double>(m) + 0.25);
        out.normal_probability.emplace_back(normal_quantile(pos), ordered[i]);
        out.versus_fits.emplace_back(r.fitted[i], r.residuals[i]);
        out.versus_order.emplace_back(static_cast<double>(i + 1), r.residuals[i]);
    }

    // Sturges bin count over [min, max]; a single bin when the range is empty.
    const double lo = ordered.front();
    const double hi = ordered.back();
    const std::size_t bins = hi > lo ? static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(m)))) + 1 : 1;
    const double width = bins > 1 ? (hi - lo) / static_cast<double>(bins) : 0.0;
    for (std::size_t b = 0; b < bins; ++b) {
        out.histogram.push_back({lo + width * static_cast<double>(b),
                                 b + 1 == bins ? hi : lo + width * static_cast<double>(b + 1), 0});
    }
    for (double e : ordered) {
        std::size_t b = width > 0.0 ? static_cast<std::size_t>((e - lo) / width) : 0;
        out.histogram[std::min(b, bins - 1)].count++;
    }
    return out;
}

}  // namespace gapsort::stats
