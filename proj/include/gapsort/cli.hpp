#pragma once

// `gapsort` command line: gen, sort, mink, bench, fit, report.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "distributions.hpp"
#include "error.hpp"
#include "harness.hpp"
#include "sorters.hpp"
#include "stats/diagnostics.hpp"
#include "stats/regression.hpp"
#include "stats/report_io.hpp"
#include "svg.hpp"

namespace gapsort::cli {

namespace fs = std::filesystem;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<Value> read_values(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::vector<Value> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            std::size_t pos = 0;
            values.push_back(std::stoll(line, &pos));
            if (pos != line.size()) throw std::invalid_argument(line);
        } catch (const std::exception&) {
            throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": not an integer: '" + line + "'");
        }
    }
    return values;
}

/// Writes `content` to `path` via a temporary sibling and a rename, so a
/// failed write never leaves a complete-looking file behind.
inline void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    const fs::path tmp = path.string() + ".partial";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw IoError("cannot write '" + tmp.string() + "'");
        out << content;
        out.flush();
        if (!out) throw IoError("write failed for '" + tmp.string() + "'");
    }
    fs::rename(tmp, path);
}

inline std::string values_text(const std::vector<Value>& v) {
    std::string s;
    s.reserve(v.size() * 4);
    for (Value x : v) {
        s += std::to_string(x);
        s += '\n';
    }
    return s;
}

inline nlohmann::json dataset_json(const std::vector<AggregateRow>& rows) {
    std::map<std::pair<std::string, std::string>, bool> seen;
    auto out = nlohmann::json::array();
    for (const auto& r : rows) {
        if (seen.emplace(std::pair{r.algorithm, r.distribution}, true).second) {
            const auto s = select_series(rows, r.algorithm, r.distribution);
            out.push_back({{"algorithm", r.algorithm}, {"distribution", r.distribution}, {"n", s.n}, {"y", s.y}});
        }
    }
    return out;
}

inline std::string comparison_svg(const nlohmann::json& dataset, const std::string& distribution,
                                  const std::string& title) {
    static const char* palette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd"};
    std::vector<svg::Series> series;
    for (const auto& d : dataset) {
        if (d.at("distribution").get<std::string>() != distribution) continue;
        svg::Series s;
        s.name = d.at("algorithm").get<std::string>() == "rs_sort" ? "RS sort" : d.at("algorithm").get<std::string>();
        s.color = palette[series.size() % 5];
        const auto n = d.at("n").get<std::vector<double>>();
        const auto y = d.at("y").get<std::vector<double>>();
        for (std::size_t i = 0; i < n.size() && i < y.size(); ++i) s.points.emplace_back(n[i], y[i]);
        series.push_back(std::move(s));
    }
    return svg::comparison_chart(title, series);
}

}  // namespace detail

/// Runs one command. Returns the process exit code: 0 on success, 1 on a
/// configuration/input/I-O error, CLI11's code on a usage error.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"RS sort laboratory: generate inputs, sort, benchmark, fit empirical complexity models"};
    app.name("gapsort");
    app.require_subcommand(1, 1);

    std::uint64_t seed = 0;

    // gen
    auto* gen = app.add_subcommand("gen", "Write n seeded draws, one integer per line");
    std::string dist;
    std::optional<std::int64_t> k, m;
    std::optional<double> lambda, prob;
    std::size_t count = 0;
    std::string gen_out;
    gen->add_option("--dist", dist, "du | poisson | binomial")->required();
    gen->add_option("--k", k, "discrete uniform upper bound (default 50)");
    gen->add_option("--lambda", lambda, "poisson rate (default 4)");
    gen->add_option("--m", m, "binomial trials (default 400)");
    gen->add_option("--p", prob, "binomial success probability (default 0.5)");
    gen->add_option("--n", count, "number of draws")->required();
    gen->add_option("--seed", seed, "master seed")->envname("GAPSORT_SEED");
    gen->add_option("--out", gen_out, "output path (default: standard output)");

    // sort
    auto* sortc = app.add_subcommand("sort", "Sort an integer file and print instrumentation");
    std::string sort_in, sort_out, algo = "rs_sort", variant = "lomuto_last";
    sortc->add_option("--in", sort_in, "input file, one integer per line")->required();
    sortc->add_option("--out", sort_out, "sorted output file")->required();
    sortc->add_option("--algo", algo, "rs_sort | quicksort");
    sortc->add_option("--variant", variant, "quicksort partition: lomuto_last | hoare_first");

    // mink
    auto* mink = app.add_subcommand("mink", "Find the minimum sufficient start gap for an input");
    std::string mink_in, strategy = "binary";
    bool no_oracle = false;
    mink->add_option("--in", mink_in, "input file, one integer per line")->required();
    mink->add_option("--strategy", strategy, "binary | linear");
    mink->add_flag("--no-oracle", no_oracle, "skip the linear-oracle cross-check of a binary search");

    // bench
    auto* bench = app.add_subcommand("bench", "Run a benchmark plan");
    std::string plan_path, bench_dir;
    unsigned jobs = 1;
    bool serial = false;
    int decimals = 3;
    bench->add_option("--plan", plan_path, "experiment plan JSON")->required();
    bench->add_option("--out-dir", bench_dir, "directory for records.csv and aggregate.csv")->required();
    bench->add_option("--jobs", jobs, "worker threads (0 = hardware concurrency)");
    bench->add_flag("--serial", serial, "one trial at a time (overrides --jobs)");
    bench->add_option("--seed", seed, "master seed when the plan has none")->envname("GAPSORT_SEED");
    bench->add_option("--decimals", decimals, "decimals for mean_seconds in aggregate.csv")->check(CLI::Range(0, 12));

    // fit
    auto* fit = app.add_subcommand("fit", "Fit y^lambda on [1, n, n lg n, n^2] and conclude an empirical-O class");
    std::string fit_csv, fixture, fit_algo = "rs_sort", fit_dist = "du", fit_out, series_out;
    double fit_lambda = 0.75, alpha = 0.05;
    bool refit = false;
    auto* csv_opt = fit->add_option("--csv", fit_csv, "aggregate CSV");
    auto* fix_opt = fit->add_option("--fixture", fixture, "bundled dataset (table1)");
    csv_opt->excludes(fix_opt);
    fix_opt->excludes(csv_opt);
    fit->add_option("--algorithm", fit_algo, "algorithm column to fit");
    fit->add_option("--distribution", fit_dist, "distribution column to fit");
    fit->add_option("--lambda", fit_lambda, "Box-Cox exponent (power form y^lambda)");
    fit->add_option("--alpha", alpha, "significance level for term pruning")->check(CLI::Range(0.0, 1.0));
    fit->add_flag("--refit", refit, "refit the reduced model after pruning");
    fit->add_option("--out", fit_out, "fit JSON output")->required();
    fit->add_option("--series", series_out, "residual diagnostic series CSV output");

    // report
    auto* report = app.add_subcommand("report", "Render figures and the regression table from a fit JSON");
    std::string report_in, report_dir;
    report->add_option("--fit", report_in, "fit JSON from `gapsort fit`")->required();
    report->add_option("--out-dir", report_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*gen) {
            DistributionSpec spec;
            spec.kind = DistributionSpec::parse_kind(dist);
            auto reject = [&](bool present, const char* flag) {
                if (present) throw ConfigError(std::string(flag) + " does not apply to --dist " + dist);
            };
            switch (spec.kind) {
                case DistributionSpec::Kind::discrete_uniform:
                    reject(lambda.has_value(), "--lambda");
                    reject(m.has_value() || prob.has_value(), "--m/--p");
                    spec = DistributionSpec::discrete_uniform(k.value_or(50));
                    break;
                case DistributionSpec::Kind::poisson:
                    reject(k.has_value(), "--k");
                    reject(m.has_value() || prob.has_value(), "--m/--p");
                    spec = DistributionSpec::poisson(lambda.value_or(4.0));
                    break;
                case DistributionSpec::Kind::binomial:
                    reject(k.has_value(), "--k");
                    reject(lambda.has_value(), "--lambda");
                    spec = DistributionSpec::binomial(m.value_or(400), prob.value_or(0.5));
                    break;
            }
            const auto values = sample(spec, count, SeededStream{seed, count, 0, spec.tag()});
            const auto text = detail::values_text(values);
            if (gen_out.empty()) {
                out << text;
            } else {
                detail::write_file(gen_out, text);
            }
            return 0;
        }

        if (*sortc) {
            auto values = detail::read_values(sort_in);
            Algorithm a = Algorithm::parse(algo);
            if (a.kind == Algorithm::Kind::quicksort) {
                a.variant = parse_quicksort_variant(variant);
            } else if (sortc->count("--variant") > 0) {
                throw ConfigError("--variant applies to quicksort only");
            }
            const SortStats st = sort_in_place(a, std::span<Value>(values));
            detail::write_file(sort_out, detail::values_text(values));
            out << "algorithm=" << a.name() << " n=" << values.size() << " comparisons=" << st.comparisons
                << " exchanges=" << st.exchanges << " correction_passes=" << st.correction_passes
                << " elapsed_ns=" << st.elapsed.count() << '\n';
            return 0;
        }

        if (*mink) {
            const auto values = detail::read_values(mink_in);
            const auto r = min_sufficient_gap(std::span<const Value>(values), parse_gap_search(strategy),
                                              MinGapOptions{!no_oracle});
            out << "min_gap=" << r.min_gap << " formula_gap=" << r.formula_gap << " strategy=" << strategy;
            if (r.oracle_gap) out << " oracle_gap=" << *r.oracle_gap;
            out << '\n';
            if (r.diagnostic) err << "diagnostic: " << *r.diagnostic << '\n';
            return 0;
        }

        if (*bench) {
            std::ifstream in(plan_path);
            if (!in) throw IoError("cannot open plan '" + plan_path + "'");
            nlohmann::json pj;
            try {
                pj = nlohmann::json::parse(in);
            } catch (const nlohmann::json::parse_error& e) {
                throw ConfigError(std::string("plan is not valid JSON: ") + e.what());
            }
            const ExperimentPlan plan = parse_plan(pj, seed);
            if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
            if (serial) jobs = 1;

            fs::create_directories(bench_dir);
            const fs::path records_path = fs::path(bench_dir) / "records.csv";
            const fs::path partial_path = fs::path(bench_dir) / "records.csv.partial";
            std::vector<TrialRecord> records;
            {
                std::ofstream rec_out(partial_path, std::ios::binary);
                if (!rec_out) throw IoError("cannot write '" + partial_path.string() + "'");
                rec_out << kRecordsHeader << '\n';
                records = run_plan(plan, RunOptions{jobs, [&](const TrialRecord& r) {
                                                        write_record(rec_out, r);
                                                        if (!rec_out) {
                                                            throw IoError("write failed; partial results left in '" +
                                                                          partial_path.string() + "'");
                                                        }
                                                    }});
                rec_out.flush();
                if (!rec_out) throw IoError("write failed; partial results left in '" + partial_path.string() + "'");
            }
            fs::rename(partial_path, records_path);

            const auto agg = aggregate(records);
            for (const auto& w : agg.warnings) err << "warning: " << w << '\n';
            std::ostringstream agg_text;
            write_aggregate_csv(agg_text, agg.rows, decimals);
            detail::write_file(fs::path(bench_dir) / "aggregate.csv", agg_text.str());

            std::uint64_t corrections = 0;
            for (const auto& r : records) corrections += r.correction_passes;
            out << "records=" << records.size() << " cells=" << agg.rows.size()
                << " correction_passes=" << corrections << '\n';
            if (corrections > 0) err << "warning: some RS sort runs needed correction passes\n";
            return 0;
        }

        if (*fit) {
            std::vector<AggregateRow> rows;
            nlohmann::json source;
            if (!fixture.empty()) {
                rows = load_fixture(fixture);
                source = {{"fixture", fixture}};
            } else if (!fit_csv.empty()) {
                std::ifstream in(fit_csv);
                if (!in) throw IoError("cannot open '" + fit_csv + "'");
                rows = read_aggregate_csv(in);
                source = {{"csv", fit_csv}};
            } else {
                throw ConfigError("fit needs --csv or --fixture");
            }
            source["algorithm"] = fit_algo;
            source["distribution"] = fit_dist;

            const auto series = select_series(rows, fit_algo, fit_dist);
            if (series.n.empty()) {
                throw ConfigError("no rows for algorithm '" + fit_algo + "' and distribution '" + fit_dist + "'");
            }
            stats::ModelSpec model;
            model.lambda = fit_lambda;
            const auto ef = stats::fit_empirical(series.n, series.y, model);
            const auto verdict = stats::prune_and_conclude(ef, {alpha, refit});

            nlohmann::json j = stats::to_json(ef);
            j["source"] = source;
            j["alpha"] = alpha;
            j["verdict"] = stats::to_json(verdict);
            j["dataset"] = detail::dataset_json(rows);
            detail::write_file(fit_out, j.dump(2) + "\n");
            if (!series_out.empty()) {
                std::ostringstream s;
                stats::write_residual_series_csv(s, stats::residual_diagnostics(ef.report));
                detail::write_file(series_out, s.str());
            }
            out << stats::format_table2(ef, &verdict);
            return 0;
        }

        if (*report) {
            std::ifstream in(report_in);
            if (!in) throw IoError("cannot open '" + report_in + "'");
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(in);
            } catch (const nlohmann::json::parse_error& e) {
                throw ConfigError(std::string("fit file is not valid JSON: ") + e.what());
            }
            stats::EmpiricalFit ef;
            nlohmann::json dataset;
            std::optional<stats::EmpiricalVerdict> verdict;
            try {
                ef = stats::empirical_fit_from_json(j);
                dataset = j.value("dataset", nlohmann::json::array());
                if (j.contains("verdict")) verdict = stats::prune_and_conclude(ef, {j.value("alpha", 0.05), false});
            } catch (const nlohmann::json::exception& e) {
                throw ConfigError(std::string("fit JSON is missing fields: ") + e.what());
            }
            const fs::path dir(report_dir);
            detail::write_file(dir / "fig1.svg",
                               detail::comparison_svg(dataset, "du", "n versus mean time (discrete uniform, k=50)"));
            detail::write_file(dir / "fig2.svg",
                               detail::comparison_svg(dataset, "poisson", "n versus mean time (Poisson, lambda=4)"));
            std::string title = "Residual plots for Y^" + stats::detail::g6(ef.model.lambda) + " versus ";
            const char* sep = "";
            for (stats::Term t : ef.model.terms) {
                if (t == stats::Term::constant) continue;
                title += sep + std::string(term_name(t));
                sep = ", ";
            }
            detail::write_file(dir / "fig3.svg", svg::residual_chart(title, stats::residual_diagnostics(ef.report)));
            detail::write_file(dir / "table2.txt", stats::format_table2(ef, verdict ? &*verdict : nullptr));
            out << "wrote fig1.svg fig2.svg fig3.svg table2.txt to " << dir.string() << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        err << "gapsort: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"gapsort"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gapsort::cli
