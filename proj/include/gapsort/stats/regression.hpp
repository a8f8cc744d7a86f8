#pragma once

// Specified-lambda power transform, polynomial-in-n design matrices and an
// ordinary least squares fit with the usual regression diagnostics
// (coefficient t/p, S, R-sq family, PRESS, Durbin-Watson, leverage,
// standardized residuals, sequential/adjusted ANOVA).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "../error.hpp"
#include "special_functions.hpp"

namespace gapsort::stats {

enum class Term { constant, n, n_log2n, n_squared };

inline std::string_view term_name(Term t) {
    switch (t) {
        case Term::constant: return "Constant";
        case Term::n: return "n";
        case Term::n_log2n: return "n log n";
        case Term::n_squared: return "n^2";
    }
    return {};
}

inline Term parse_term(std::string_view s) {
    for (Term t : {Term::constant, Term::n, Term::n_log2n, Term::n_squared}) {
        if (s == term_name(t)) return t;
    }
    if (s == "1" || s == "const") return Term::constant;
    if (s == "nlogn" || s == "n_log2n") return Term::n_log2n;
    if (s == "n2" || s == "n_squared") return Term::n_squared;
    throw ConfigError("unknown model term '" + std::string(s) + "'");
}

/// Rank of a term by asymptotic growth; larger dominates.
inline int growth_rank(Term t) { return static_cast<int>(t); }

inline double evaluate_term(Term t, double n) {
    switch (t) {
        case Term::constant: return 1.0;
        case Term::n: return n;
        case Term::n_log2n: return n * std::log2(n);
        case Term::n_squared: return n * n;
    }
    return 0.0;
}

struct ModelSpec {
    double lambda = 0.75;
    std::vector<Term> terms{Term::constant, Term::n, Term::n_log2n, Term::n_squared};
};

/// Dense row-major design matrix with named columns.
struct Design {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;
    std::vector<std::string> column_names;

    double operator()(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
    double& operator()(std::size_t i, std::size_t j) { return values[i * cols + j]; }
};

/// Elementwise y^lambda (Box-Cox with specified lambda, unshifted power form).
inline std::vector<double> power_transform(std::span<const double> y, double lambda) {
    if (lambda == 0.0) throw DomainError("power transform needs lambda != 0");
    std::vector<double> out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!(y[i] > 0.0)) {
            throw DomainError("power transform needs a positive response; observation " + std::to_string(i + 1) +
                              " is " + std::to_string(y[i]));
        }
        out[i] = std::pow(y[i], lambda);
    }
    return out;
}

/// Rows [g_1(n), ..., g_p(n)] for each n, log base 2.
inline Design build_design(std::span<const double> n_values,
                           std::span<const Term> terms = ModelSpec{}.terms) {
    Design d;
    d.rows = n_values.size();
    d.cols = terms.size();
    d.values.resize(d.rows * d.cols);
    for (Term t : terms) d.column_names.emplace_back(term_name(t));
    for (std::size_t i = 0; i < d.rows; ++i) {
        if (!(n_values[i] > 0.0)) {
            throw DomainError("design needs positive n; row " + std::to_string(i + 1) + " is " +
                              std::to_string(n_values[i]));
        }
        for (std::size_t j = 0; j < d.cols; ++j) d(i, j) = evaluate_term(terms[j], n_values[i]);
    }
    return d;
}

struct AnovaRow {
    std::string source;
    double df = 0;
    double seq_ss = 0;
    double adj_ss = 0;
    double adj_ms = 0;
    double f = 0;        ///< NaN for Error/Total rows
    double p = 0;        ///< NaN for Error/Total rows
};

struct ObservationFlags {
    bool large_std_resid = false;  ///< "R"
    bool high_leverage = false;    ///< "X"

    bool any() const { return large_std_resid || high_leverage; }
    friend bool operator==(const ObservationFlags&, const ObservationFlags&) = default;
};

struct RegressionReport {
    std::vector<std::string> terms;
    std::vector<double> coef;
    std::vector<double> se_coef;
    std::vector<double> t_stat;
    std::vector<double> p_value;

    std::size_t n_obs = 0;
    std::size_t df_error = 0;
    double sse = 0;
    double sst = 0;
    double s = 0;
    double r_sq = 0;       ///< percent
    double r_sq_adj = 0;   ///< percent
    double r_sq_pred = 0;  ///< percent
    double press = 0;
    double dw = 0;

    std::vector<double> response;
    std::vector<double> fitted;
    std::vector<double> residuals;
    std::vector<double> leverage;
    std::vector<double> std_resid;
    std::vector<double> se_fit;

    std::vector<AnovaRow> anova;
    std::vector<ObservationFlags> flags;

    std::size_t n_terms() const { return coef.size(); }
};

/// Durbin-Watson statistic; 0 for an all-zero series.
inline double durbin_watson(std::span<const double> e) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        den += e[i] * e[i];
        if (i > 0) num += (e[i] - e[i - 1]) * (e[i] - e[i - 1]);
    }
    return den == 0.0 ? 0.0 : num / den;
}

struct FlagThresholds {
    double std_resid = 2.0;           ///< R when |std resid| exceeds this
    double leverage_multiple = 3.0;   ///< X when h_ii exceeds this * p / n
};

inline std::vector<ObservationFlags> flag_unusual(const RegressionReport& r, FlagThresholds th = {}) {
    std::vector<ObservationFlags> flags(r.n_obs);
    const double h_cut = th.leverage_multiple * static_cast<double>(r.n_terms()) / static_cast<double>(r.n_obs);
    for (std::size_t i = 0; i < r.n_obs; ++i) {
        flags[i].large_std_resid = std::fabs(r.std_resid[i]) > th.std_resid;
        flags[i].high_leverage = r.leverage[i] > h_cut;
    }
    return flags;
}

namespace detail {

// t statistic and two-sided p with the conventions used when S = 0.
inline void t_and_p(double coef, double se, double df, double& t, double& p) {
    if (se > 0.0) {
        t = coef / se;
        p = student_t_two_sided_p(t, df);
    } else if (coef == 0.0) {
        t = 0.0;
        p = 1.0;
    } else {
        t = std::copysign(INFINITY, coef);
        p = 0.0;
    }
}

inline double f_and_p(double ms, double mse, double df1, double df2, double& p) {
    if (mse > 0.0) {
        const double f = ms / mse;
        p = f_upper_tail(f, df1, df2);
        return f;
    }
    p = ms > 0.0 ? 0.0 : 1.0;
    return ms > 0.0 ? INFINITY : 0.0;
}

}  // namespace detail

/// Least squares fit of y on the design columns via Householder QR of the
/// column-scaled design. Coefficients and standard errors are unscaled for
/// reporting; leverages come from the thin Q factor.
inline RegressionReport ols_fit(const Design& x, std::span<const double> y) {
    const std::size_t m = x.rows;
    const std::size_t p = x.cols;
    if (y.size() != m) throw DomainError("response length does not match design rows");
    if (p == 0) throw DomainError("design has no columns");
    if (m < p + 1) {
        throw DomainError("ols_fit needs at least terms + 1 observations (" + std::to_string(p + 1) + "), got " +
                          std::to_string(m));
    }

    // Scale each column to unit max-abs.
    std::vector<double> scale(p, 0.0);
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t i = 0; i < m; ++i) scale[j] = std::max(scale[j], std::fabs(x(i, j)));
        if (scale[j] == 0.0) throw RankDeficientError(j, x.column_names.empty() ? "?" : x.column_names[j]);
    }
    // Column-major working copy A (m x p), later overwritten by R and reflectors.
    std::vector<double> a(m * p);
    std::vector<double> col_norm(p, 0.0);
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
            a[j * m + i] = x(i, j) / scale[j];
            col_norm[j] += a[j * m + i] * a[j * m + i];
        }
        col_norm[j] = std::sqrt(col_norm[j]);
    }
    auto A = [&](std::size_t i, std::size_t j) -> double& { return a[j * m + i]; };

    std::vector<double> qty(y.begin(), y.end());
    std::vector<std::vector<double>> reflectors;
    reflectors.reserve(p);
    std::vector<double> r_diag(p);

    for (std::size_t k = 0; k < p; ++k) {
        double norm = 0.0;
        for (std::size_t i = k; i < m; ++i) norm += A(i, k) * A(i, k);
        norm = std::sqrt(norm);
        if (norm <= 1e-10 * col_norm[k]) {
            throw RankDeficientError(k, x.column_names.empty() ? "?" : x.column_names[k]);
        }
        const double alpha = A(k, k) > 0 ? -norm : norm;
        std::vector<double> v(m - k);
        for (std::size_t i = k; i < m; ++i) v[i - k] = A(i, k);
        v[0] -= alpha;
        double vnorm2 = 0.0;
        for (double vi : v) vnorm2 += vi * vi;

        auto apply = [&](auto&& elem) {
            double dot = 0.0;
            for (std::size_t i = k; i < m; ++i) dot += v[i - k] * elem(i);
            const double f = 2.0 * dot / vnorm2;
            for (std::size_t i = k; i < m; ++i) elem(i) -= f * v[i - k];
        };
        for (std::size_t j = k; j < p; ++j) apply([&](std::size_t i) -> double& { return A(i, j); });
        apply([&](std::size_t i) -> double& { return qty[i]; });

        r_diag[k] = A(k, k);
        reflectors.push_back(std::move(v));
    }

    // Back substitution R b = (Q^T y)[0:p].
    std::vector<double> b(p);
    for (std::size_t k = p; k-- > 0;) {
        double acc = qty[k];
        for (std::size_t j = k + 1; j < p; ++j) acc -= A(k, j) * b[j];
        b[k] = acc / A(k, k);
    }
    // R^{-1}, upper triangular.
    std::vector<double> rinv(p * p, 0.0);
    for (std::size_t c = 0; c < p; ++c) {
        for (std::size_t k = c + 1; k-- > 0;) {
            double acc = (k == c) ? 1.0 : 0.0;
            for (std::size_t j = k + 1; j <= c; ++j) acc -= A(k, j) * rinv[j * p + c];
            rinv[k * p + c] = acc / A(k, k);
        }
    }
    // Thin Q (m x p): apply reflectors in reverse to the first p unit vectors.
    std::vector<double> q(m * p, 0.0);
    for (std::size_t j = 0; j < p; ++j) {
        std::vector<double> e(m, 0.0);
        e[j] = 1.0;
        for (std::size_t k = p; k-- > 0;) {
            const auto& v = reflectors[k];
            double vnorm2 = 0.0, dot = 0.0;
            for (std::size_t i = k; i < m; ++i) {
                vnorm2 += v[i - k] * v[i - k];
                dot += v[i - k] * e[i];
            }
            const double f = 2.0 * dot / vnorm2;
            for (std::size_t i = k; i < m; ++i) e[i] -= f * v[i - k];
        }
        for (std::size_t i = 0; i < m; ++i) q[i * p + j] = e[i];
    }

    RegressionReport r;
    r.terms = x.column_names;
    if (r.terms.size() != p) {
        r.terms.clear();
        for (std::size_t j = 0; j < p; ++j) r.terms.push_back("x" + std::to_string(j));
    }
    r.n_obs = m;
    r.df_error = m - p;
    r.response.assign(y.begin(), y.end());

    r.coef.resize(p);
    for (std::size_t j = 0; j < p; ++j) r.coef[j] = b[j] / scale[j];

    r.fitted.resize(m);
    r.residuals.resize(m);
    r.leverage.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        double fit = 0.0;
        for (std::size_t j = 0; j < p; ++j) fit += (x(i, j) / scale[j]) * b[j];
        r.fitted[i] = fit;
        r.residuals[i] = y[i] - fit;
        double h = 0.0;
        for (std::size_t j = 0; j < p; ++j) h += q[i * p + j] * q[i * p + j];
        r.leverage[i] = h;
    }

    // An exact fit leaves only rounding noise; treat it as zero residuals.
    double y_max = 0.0, e_max = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        y_max = std::max(y_max, std::fabs(y[i]));
        e_max = std::max(e_max, std::fabs(r.residuals[i]));
    }
    if (e_max <= 64.0 * std::numeric_limits<double>::epsilon() * y_max) {
        for (std::size_t i = 0; i < m; ++i) {
            r.fitted[i] = y[i];
            r.residuals[i] = 0.0;
        }
    }

    const double df = static_cast<double>(r.df_error);
    r.sse = 0.0;
    for (double e : r.residuals) r.sse += e * e;
    const double mse = r.sse / df;
    r.s = std::sqrt(mse);

    // Centered total SS when the model carries an intercept column.
    bool has_intercept = false;
    for (std::size_t j = 0; j < p && !has_intercept; ++j) {
        bool constant = true;
        for (std::size_t i = 1; i < m && constant; ++i) constant = x(i, j) == x(0, j);
        has_intercept = constant;
    }
    const double ybar = has_intercept ? std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(m) : 0.0;
    r.sst = 0.0;
    for (double yi : y) r.sst += (yi - ybar) * (yi - ybar);
    const double df_total = has_intercept ? static_cast<double>(m - 1) : static_cast<double>(m);

    r.r_sq = 100.0 * (1.0 - r.sse / r.sst);
    r.r_sq_adj = 100.0 * (1.0 - mse / (r.sst / df_total));

    r.se_coef.resize(p);
    r.t_stat.resize(p);
    r.p_value.resize(p);
    for (std::size_t j = 0; j < p; ++j) {
        double row2 = 0.0;
        for (std::size_t c = j; c < p; ++c) row2 += rinv[j * p + c] * rinv[j * p + c];
        r.se_coef[j] = r.s * std::sqrt(row2) / scale[j];
        detail::t_and_p(r.coef[j], r.se_coef[j], df, r.t_stat[j], r.p_value[j]);
    }

    r.press = 0.0;
    r.std_resid.resize(m);
    r.se_fit.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double one_minus_h = 1.0 - r.leverage[i];
        const double loo = r.residuals[i] / one_minus_h;
        r.press += loo * loo;
        r.std_resid[i] = r.s > 0.0 ? r.residuals[i] / (r.s * std::sqrt(one_minus_h)) : 0.0;
        r.se_fit[i] = r.s * std::sqrt(r.leverage[i]);
    }
    r.r_sq_pred = 100.0 * (1.0 - r.press / r.sst);
    r.dw = durbin_watson(r.residuals);

    // ANOVA: regression row, one row per non-intercept term in model order
    // (sequential SS from the QR effects), error and total rows.
    const double df_reg = has_intercept ? static_cast<double>(p - 1) : static_cast<double>(p);
    const double ss_reg = r.sst - r.sse;
    AnovaRow reg{"Regression", df_reg, ss_reg, ss_reg, ss_reg / df_reg, 0, 0};
    reg.f = detail::f_and_p(reg.adj_ms, mse, df_reg, df, reg.p);
    r.anova.push_back(reg);
    for (std::size_t j = 0; j < p; ++j) {
        bool is_const = true;
        for (std::size_t i = 1; i < m && is_const; ++i) is_const = x(i, j) == x(0, j);
        if (is_const && has_intercept) continue;
        AnovaRow row{r.terms[j], 1.0, qty[j] * qty[j], 0, 0, 0, 0};
        row.adj_ss = std::isfinite(r.t_stat[j]) ? r.t_stat[j] * r.t_stat[j] * mse : row.seq_ss;
        row.adj_ms = row.adj_ss;
        row.f = detail::f_and_p(row.adj_ms, mse, 1.0, df, row.p);
        r.anova.push_back(row);
    }
    r.anova.push_back({"Error", df, r.sse, r.sse, mse, NAN, NAN});
    r.anova.push_back({"Total", df_total, r.sst, r.sst, NAN, NAN, NAN});

    r.flags = flag_unusual(r);
    return r;
}

/// A fitted empirical-complexity model: the raw (n, y) data, the model and
/// the regression of y^lambda on the model basis.
struct EmpiricalFit {
    ModelSpec model;
    std::vector<double> n;
    std::vector<double> y;
    RegressionReport report;

    /// Fitted values mapped back to the original response scale.
    std::vector<double> fitted_original() const {
        std::vector<double> out(report.fitted.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = report.fitted[i] > 0.0 ? std::pow(report.fitted[i], 1.0 / model.lambda) : NAN;
        }
        return out;
    }
};

inline EmpiricalFit fit_empirical(std::span<const double> n, std::span<const double> y, ModelSpec model = {}) {
    if (n.size() != y.size()) throw DomainError("n and y series differ in length");
    EmpiricalFit f;
    f.model = std::move(model);
    f.n.assign(n.begin(), n.end());
    f.y.assign(y.begin(), y.end());
    const auto z = power_transform(y, f.model.lambda);
    f.report = ols_fit(build_design(n, f.model.terms), z);
    return f;
}

}  // namespace gapsort::stats
