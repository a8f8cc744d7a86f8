#pragma once

// JSON and text renderings of a fitted empirical model.

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "diagnostics.hpp"
#include "regression.hpp"

namespace gapsort::stats {

namespace detail {

// NaN/inf have no JSON spelling; they travel as null.
inline nlohmann::json num(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

inline double get_num(const nlohmann::json& j) { return j.is_null() ? NAN : j.get<double>(); }

inline nlohmann::json nums(const std::vector<double>& v) {
    auto a = nlohmann::json::array();
    for (double x : v) a.push_back(num(x));
    return a;
}

inline std::vector<double> get_nums(const nlohmann::json& j) {
    std::vector<double> v;
    for (const auto& x : j) v.push_back(get_num(x));
    return v;
}

inline std::string g6(double v) {
    if (std::isnan(v)) return "*";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline std::string fixed(double v, int decimals) {
    if (std::isnan(v)) return "*";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

inline std::string flag_text(const ObservationFlags& f) {
    std::string s;
    if (f.large_std_resid) s += 'R';
    if (f.high_leverage) s += 'X';
    return s;
}

}  // namespace detail

inline nlohmann::json to_json(const RegressionReport& r) {
    using detail::num;
    using detail::nums;
    nlohmann::json j;
    j["coefficients"] = nlohmann::json::array();
    for (std::size_t k = 0; k < r.n_terms(); ++k) {
        j["coefficients"].push_back({{"term", r.terms[k]},
                                     {"coef", num(r.coef[k])},
                                     {"se_coef", num(r.se_coef[k])},
                                     {"t", num(r.t_stat[k])},
                                     {"p", num(r.p_value[k])}});
    }
    j["summary"] = {{"n_obs", r.n_obs},         {"df_error", r.df_error}, {"sse", num(r.sse)},
                    {"sst", num(r.sst)},        {"s", num(r.s)},          {"r_sq", num(r.r_sq)},
                    {"r_sq_adj", num(r.r_sq_adj)}, {"r_sq_pred", num(r.r_sq_pred)}, {"press", num(r.press)},
                    {"dw", num(r.dw)}};
    j["anova"] = nlohmann::json::array();
    for (const auto& a : r.anova) {
        j["anova"].push_back({{"source", a.source},
                              {"df", num(a.df)},
                              {"seq_ss", num(a.seq_ss)},
                              {"adj_ss", num(a.adj_ss)},
                              {"adj_ms", num(a.adj_ms)},
                              {"f", num(a.f)},
                              {"p", num(a.p)}});
    }
    j["series"] = {{"response", nums(r.response)}, {"fitted", nums(r.fitted)},   {"residuals", nums(r.residuals)},
                   {"leverage", nums(r.leverage)}, {"std_resid", nums(r.std_resid)}, {"se_fit", nums(r.se_fit)}};
    auto flags = nlohmann::json::array();
    for (const auto& f : r.flags) flags.push_back(detail::flag_text(f));
    j["series"]["flags"] = flags;
    return j;
}

inline RegressionReport regression_from_json(const nlohmann::json& j) {
    using detail::get_num;
    using detail::get_nums;
    RegressionReport r;
    for (const auto& c : j.at("coefficients")) {
        r.terms.push_back(c.at("term").get<std::string>());
        r.coef.push_back(get_num(c.at("coef")));
        r.se_coef.push_back(get_num(c.at("se_coef")));
        r.t_stat.push_back(get_num(c.at("t")));
        r.p_value.push_back(get_num(c.at("p")));
    }
    const auto& s = j.at("summary");
    r.n_obs = s.at("n_obs").get<std::size_t>();
    r.df_error = s.at("df_error").get<std::size_t>();
    r.sse = get_num(s.at("sse"));
    r.sst = get_num(s.at("sst"));
    r.s = get_num(s.at("s"));
    r.r_sq = get_num(s.at("r_sq"));
    r.r_sq_adj = get_num(s.at("r_sq_adj"));
    r.r_sq_pred = get_num(s.at("r_sq_pred"));
    r.press = get_num(s.at("press"));
    r.dw = get_num(s.at("dw"));
    for (const auto& a : j.at("anova")) {
        r.anova.push_back({a.at("source").get<std::string>(), get_num(a.at("df")), get_num(a.at("seq_ss")),
                           get_num(a.at("adj_ss")), get_num(a.at("adj_ms")), get_num(a.at("f")), get_num(a.at("p"))});
    }
    const auto& ser = j.at("series");
    r.response = get_nums(ser.at("response"));
    r.fitted = get_nums(ser.at("fitted"));
    r.residuals = get_nums(ser.at("residuals"));
    r.leverage = get_nums(ser.at("leverage"));
    r.std_resid = get_nums(ser.at("std_resid"));
    r.se_fit = get_nums(ser.at("se_fit"));
    for (const auto& f : ser.at("flags")) {
        const auto t = f.get<std::string>();
        r.flags.push_back({t.find('R') != std::string::npos, t.find('X') != std::string::npos});
    }
    return r;
}

inline nlohmann::json to_json(const EmpiricalVerdict& v) {
    auto names = [](const std::vector<Term>& ts) {
        auto a = nlohmann::json::array();
        for (Term t : ts) a.push_back(std::string(term_name(t)));
        return a;
    };
    nlohmann::json j{{"retained", names(v.retained)},
                     {"pruned", names(v.pruned)},
                     {"dominant", v.dominant ? nlohmann::json(std::string(term_name(*v.dominant))) : nlohmann::json()},
                     {"exponent", v.exponent},
                     {"conclusive", v.conclusive},
                     {"class", v.class_label},
                     {"statement", v.statement},
                     {"reduced_coef", detail::nums(v.reduced_coef)}};
    if (v.refit) j["refit"] = to_json(*v.refit);
    return j;
}

inline nlohmann::json to_json(const EmpiricalFit& f) {
    auto terms = nlohmann::json::array();
    for (Term t : f.model.terms) terms.push_back(std::string(term_name(t)));
    nlohmann::json j;
    j["model"] = {{"lambda", f.model.lambda}, {"terms", terms}};
    j["data"] = {{"n", detail::nums(f.n)}, {"y", detail::nums(f.y)}};
    j["regression"] = to_json(f.report);
    j["regression"]["series"]["fitted_original"] = detail::nums(f.fitted_original());
    return j;
}

inline EmpiricalFit empirical_fit_from_json(const nlohmann::json& j) {
    EmpiricalFit f;
    f.model.lambda = j.at("model").at("lambda").get<double>();
    f.model.terms.clear();
    for (const auto& t : j.at("model").at("terms")) f.model.terms.push_back(parse_term(t.get<std::string>()));
    f.n = detail::get_nums(j.at("data").at("n"));
    f.y = detail::get_nums(j.at("data").at("y"));
    f.report = regression_from_json(j.at("regression"));
    return f;
}

/// Regression equation, e.g. "Y^0.75 = 0.0383403 - 3.90451e-06 n + ...".
inline std::string regression_equation(const EmpiricalFit& f) {
    std::ostringstream os;
    os << "Y^" << detail::g6(f.model.lambda) << " = ";
    const auto& r = f.report;
    for (std::size_t k = 0; k < r.n_terms(); ++k) {
        const double c = r.coef[k];
        if (k == 0) {
            os << detail::g6(c);
        } else {
            os << (c < 0 ? " - " : " + ") << detail::g6(std::fabs(c));
        }
        if (f.model.terms[k] != Term::constant) os << ' ' << term_name(f.model.terms[k]);
    }
    return os.str();
}

/// Human-readable block laid out like a general regression printout.
inline std::string format_table2(const EmpiricalFit& f, const EmpiricalVerdict* verdict = nullptr) {
    using detail::fixed;
    using detail::g6;
    const auto& r = f.report;
    std::ostringstream os;
    char line[256];

    os << "General Regression Analysis: Y versus ";
    bool first = true;
    for (Term t : f.model.terms) {
        if (t == Term::constant) continue;
        os << (first ? "" : ", ") << term_name(t);
        first = false;
    }
    os << "\n\nBox-Cox transformation of the response with specified lambda = " << g6(f.model.lambda) << "\n\n";
    os << "Regression Equation\n\n" << regression_equation(f) << "\n\n";

    os << "Coefficients\n\n";
    std::snprintf(line, sizeof line, "%-10s %14s %14s %10s %7s\n", "Term", "Coef", "SE Coef", "T", "P");
    os << line;
    for (std::size_t k = 0; k < r.n_terms(); ++k) {
        std::snprintf(line, sizeof line, "%-10s %14s %14s %10s %7s\n", r.terms[k].c_str(), g6(r.coef[k]).c_str(),
                      g6(r.se_coef[k]).c_str(), fixed(r.t_stat[k], 5).c_str(), fixed(r.p_value[k], 3).c_str());
        os << line;
    }

    os << "\nSummary of Model\n\n";
    os << "S = " << g6(r.s) << "   R-Sq = " << fixed(r.r_sq, 2) << "%   R-Sq(adj) = " << fixed(r.r_sq_adj, 2)
       << "%\n";
    os << "PRESS = " << g6(r.press) << "   R-Sq(pred) = " << fixed(r.r_sq_pred, 2) << "%\n";

    os << "\nAnalysis of Variance\n\n";
    std::snprintf(line, sizeof line, "%-12s %4s %12s %12s %12s %12s %10s\n", "Source", "DF", "Seq SS", "Adj SS",
                  "Adj MS", "F", "P");
    os << line;
    for (const auto& a : r.anova) {
        std::snprintf(line, sizeof line, "%-12s %4.0f %12s %12s %12s %12s %10s\n", a.source.c_str(), a.df,
                      g6(a.seq_ss).c_str(), g6(a.adj_ss).c_str(), std::isnan(a.adj_ms) ? "" : g6(a.adj_ms).c_str(),
                      std::isnan(a.f) ? "" : g6(a.f).c_str(), std::isnan(a.p) ? "" : fixed(a.p, 6).c_str());
        os << line;
    }

    os << "\nFits and Diagnostics for Unusual Observations for Transformed Response\n\n";
    std::snprintf(line, sizeof line, "%4s %12s %12s %12s %12s %10s\n", "Obs", "Y^lambda", "Fit", "SE Fit",
                  "Residual", "St Resid");
    os << line;
    const auto fit_orig = f.fitted_original();
    for (std::size_t i = 0; i < r.n_obs; ++i) {
        if (!r.flags[i].any()) continue;
        std::snprintf(line, sizeof line, "%4zu %12s %12s %12s %12s %10s %s\n", i + 1, fixed(r.response[i], 5).c_str(),
                      fixed(r.fitted[i], 5).c_str(), fixed(r.se_fit[i], 7).c_str(), fixed(r.residuals[i], 7).c_str(),
                      fixed(r.std_resid[i], 5).c_str(), detail::flag_text(r.flags[i]).c_str());
        os << line;
    }
    os << "\nFits for Unusual Observations for Original Response\n\n";
    std::snprintf(line, sizeof line, "%4s %12s %12s\n", "Obs", "Y", "Fit");
    os << line;
    for (std::size_t i = 0; i < r.n_obs; ++i) {
        if (!r.flags[i].any()) continue;
        std::snprintf(line, sizeof line, "%4zu %12s %12s %s\n", i + 1, fixed(f.y[i], 3).c_str(),
                      fixed(fit_orig[i], 4).c_str(), detail::flag_text(r.flags[i]).c_str());
        os << line;
    }
    os << "\nR denotes an observation with a large standardized residual.\n"
          "X denotes an observation whose X value gives it large leverage.\n";
    os << "\nDurbin-Watson statistic = " << g6(r.dw) << "\n";

    if (verdict) {
        os << "\nEmpirical-O\n\n";
        if (!verdict->pruned.empty()) {
            os << "Pruned (p > alpha):";
            for (Term t : verdict->pruned) os << ' ' << term_name(t);
            os << '\n';
        }
        os << "Verdict: " << verdict->statement << '\n';
    }
    return os.str();
}

/// Residual panels as one long CSV: panel,x,y (histogram rows use bin
/// midpoint and count).
inline void write_residual_series_csv(std::ostream& os, const ResidualSeries& s) {
    os << "panel,x,y\n";
    char buf[96];
    auto row = [&](const char* panel, double x, double y) {
        std::snprintf(buf, sizeof buf, "%s,%.10g,%.10g\n", panel, x, y);
        os << buf;
    };
    for (auto [x, y] : s.normal_probability) row("normal_probability", x, y);
    for (auto [x, y] : s.versus_fits) row("versus_fits", x, y);
    for (const auto& b : s.histogram) row("histogram", 0.5 * (b.lo + b.hi), static_cast<double>(b.count));
    for (auto [x, y] : s.versus_order) row("versus_order", x, y);
}

}  // namespace gapsort::stats
