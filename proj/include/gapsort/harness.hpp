#pragma once

// Benchmark campaigns: plan -> per-trial records -> per-cell means, plus the
// CSV/JSON formats they travel in.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "distributions.hpp"
#include "error.hpp"
#include "sorters.hpp"
#include "table1.hpp"

namespace gapsort {

struct ExperimentPlan {
    std::vector<std::uint64_t> sizes;
    std::uint64_t trials = 30;
    std::uint64_t warmup_trials = 3;
    std::uint64_t master_seed = 0;
    std::vector<DistributionSpec> distributions;
    std::vector<Algorithm> algorithms;

    void validate() const {
        if (sizes.empty()) throw ConfigError("plan has no sizes");
        for (std::size_t i = 1; i < sizes.size(); ++i) {
            if (sizes[i] <= sizes[i - 1]) throw ConfigError("plan sizes must be strictly increasing");
        }
        if (trials < 1) throw ConfigError("plan needs trials >= 1");
        if (distributions.empty()) throw ConfigError("plan has no distributions");
        if (algorithms.empty()) throw ConfigError("plan has no algorithms");
        std::set<std::string> seen;
        for (const auto& d : distributions) {
            d.validate();
            // Aggregate rows are keyed by distribution name alone.
            if (!seen.insert(d.name()).second) throw ConfigError("distribution '" + d.name() + "' listed twice");
        }
        seen.clear();
        for (const auto& a : algorithms) {
            if (!seen.insert(a.name()).second) throw ConfigError("algorithm '" + a.name() + "' listed twice");
        }
    }
};

/// One timed sort run. Warmup trials carry negative indices (-1, -2, ...)
/// and are excluded from aggregation.
struct TrialRecord {
    std::string algorithm;
    std::string distribution;
    std::string params;
    std::uint64_t n = 0;
    std::int64_t trial = 0;
    std::uint64_t seed = 0;
    std::int64_t elapsed_ns = 0;
    std::uint64_t comparisons = 0;
    std::uint64_t exchanges = 0;
    std::uint64_t correction_passes = 0;

    bool is_warmup() const { return trial < 0; }
};

struct RunOptions {
    /// Worker threads; 1 runs one trial at a time.
    unsigned jobs = 1;
    /// Called once per record in canonical order.
    std::function<void(const TrialRecord&)> on_record;
};

/// Executes every (size, distribution, trial, algorithm) cell. Each
/// (size, distribution, trial) draws one sample from its own derived stream
/// and every algorithm sorts a copy of it, so algorithms are compared on
/// identical inputs. Output order is independent of `jobs`.
inline std::vector<TrialRecord> run_plan(const ExperimentPlan& plan, const RunOptions& opts = {}) {
    plan.validate();

    struct Task {
        std::uint64_t n;
        std::size_t dist;
        std::int64_t trial;
    };
    std::vector<Task> tasks;
    for (auto n : plan.sizes) {
        for (std::size_t d = 0; d < plan.distributions.size(); ++d) {
            for (std::int64_t w = static_cast<std::int64_t>(plan.warmup_trials); w >= 1; --w) tasks.push_back({n, d, -w});
            for (std::uint64_t t = 0; t < plan.trials; ++t) tasks.push_back({n, d, static_cast<std::int64_t>(t)});
        }
    }

    std::vector<Sampler> samplers;
    for (const auto& d : plan.distributions) samplers.emplace_back(d);

    const std::size_t per_task = plan.algorithms.size();
    std::vector<TrialRecord> records(tasks.size() * per_task);

    auto run_task = [&](std::size_t ti) {
        const Task& task = tasks[ti];
        const auto& spec = plan.distributions[task.dist];
        const SeededStream stream{plan.master_seed, task.n, task.trial, spec.tag()};
        SplitMix64 rng(stream.seed());
        std::vector<Value> input(task.n);
        for (auto& v : input) v = samplers[task.dist].draw(rng);

        std::vector<Value> work;
        for (std::size_t a = 0; a < per_task; ++a) {
            work = input;
            const SortStats st = sort_in_place(plan.algorithms[a], std::span<Value>(work));
            TrialRecord& rec = records[ti * per_task + a];
            rec.algorithm = plan.algorithms[a].name();
            rec.distribution = spec.name();
            rec.params = spec.params();
            rec.n = task.n;
            rec.trial = task.trial;
            rec.seed = stream.seed();
            rec.elapsed_ns = st.elapsed.count();
            rec.comparisons = st.comparisons;
            rec.exchanges = st.exchanges;
            rec.correction_passes = st.correction_passes;
        }
    };

    const unsigned jobs = std::max(1u, opts.jobs);
    if (jobs == 1) {
        for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
            run_task(ti);
            if (opts.on_record) {
                for (std::size_t a = 0; a < per_task; ++a) opts.on_record(records[ti * per_task + a]);
            }
        }
        return records;
    }

    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (std::size_t ti = next++; ti < tasks.size(); ti = next++) run_task(ti);
            });
        }
    }
    if (opts.on_record) {
        for (const auto& r : records) opts.on_record(r);
    }
    return records;
}

// ---------------------------------------------------------------------------
// Aggregation

struct AggregateRow {
    std::string algorithm;
    std::string distribution;
    std::uint64_t n = 0;
    double mean_seconds = 0;
    double mean_comparisons = NAN;  ///< NaN when unknown (bundled fixture)
    std::uint64_t trials = 0;
};

struct AggregateResult {
    std::vector<AggregateRow> rows;
    std::vector<std::string> warnings;
};

/// Arithmetic mean per (algorithm, distribution, n) over non-warmup trials.
/// Sums run in trial-index order, so record order does not affect the result.
inline AggregateResult aggregate(const std::vector<TrialRecord>& records) {
    if (records.empty()) throw DomainError("aggregate needs at least one record");

    using Key = std::tuple<std::string, std::string, std::uint64_t>;
    std::map<Key, std::vector<const TrialRecord*>> cells;
    for (const auto& r : records) cells[{r.algorithm, r.distribution, r.n}].push_back(&r);

    AggregateResult out;
    for (auto& [key, recs] : cells) {
        std::erase_if(recs, [](const TrialRecord* r) { return r->is_warmup(); });
        if (recs.empty()) {
            out.warnings.push_back("cell " + std::get<0>(key) + "/" + std::get<1>(key) + "/n=" +
                                   std::to_string(std::get<2>(key)) + " has no measured trials; excluded");
            continue;
        }
        std::sort(recs.begin(), recs.end(), [](auto* a, auto* b) { return a->trial < b->trial; });
        double ns = 0.0;
        double cmp = 0.0;
        for (const auto* r : recs) {
            ns += static_cast<double>(r->elapsed_ns);
            cmp += static_cast<double>(r->comparisons);
        }
        const auto count = static_cast<double>(recs.size());
        out.rows.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), ns / count * 1e-9, cmp / count,
                            recs.size()});
    }
    return out;
}

// ---------------------------------------------------------------------------
// CSV formats

inline constexpr std::string_view kRecordsHeader =
    "algorithm,distribution,params,n,trial,seed,elapsed_ns,comparisons,exchanges,correction_passes";
inline constexpr std::string_view kAggregateHeader = "algorithm,distribution,n,mean_seconds,mean_comparisons";

inline void write_record(std::ostream& os, const TrialRecord& r) {
    os << r.algorithm << ',' << r.distribution << ',' << r.params << ',' << r.n << ',' << r.trial << ',' << r.seed
       << ',' << r.elapsed_ns << ',' << r.comparisons << ',' << r.exchanges << ',' << r.correction_passes << '\n';
}

inline void write_records_csv(std::ostream& os, const std::vector<TrialRecord>& records) {
    os << kRecordsHeader << '\n';
    for (const auto& r : records) write_record(os, r);
}

/// `decimals` controls mean_seconds; 3 matches millisecond reporting.
inline void write_aggregate_csv(std::ostream& os, const std::vector<AggregateRow>& rows, int decimals = 3) {
    os << kAggregateHeader << '\n';
    char buf[64];
    for (const auto& r : rows) {
        os << r.algorithm << ',' << r.distribution << ',' << r.n << ',';
        std::snprintf(buf, sizeof buf, "%.*f", decimals, r.mean_seconds);
        os << buf << ',';
        if (!std::isnan(r.mean_comparisons)) {
            std::snprintf(buf, sizeof buf, "%.2f", r.mean_comparisons);
            os << buf;
        }
        os << '\n';
    }
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

template <class T>
T parse_number(const std::string& s, const std::string& what, std::size_t line) {
    try {
        std::size_t pos = 0;
        T v;
        if constexpr (std::is_same_v<T, double>) {
            v = std::stod(s, &pos);
        } else if constexpr (std::is_signed_v<T>) {
            v = static_cast<T>(std::stoll(s, &pos));
        } else {
            v = static_cast<T>(std::stoull(s, &pos));
        }
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(line) + ": cannot parse " + what + " '" + s + "'");
    }
}

}  // namespace detail

/// Reads an aggregate CSV (or the bundled fixture). Requires columns
/// algorithm, distribution, n and mean_seconds in any order;
/// mean_comparisons is optional and may be blank.
inline std::vector<AggregateRow> read_aggregate_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ConfigError("aggregate CSV is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto header = detail::split_csv_line(line);
    auto col = [&](std::string_view name) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) return i;
        }
        return std::nullopt;
    };
    const auto c_alg = col("algorithm"), c_dist = col("distribution"), c_n = col("n"), c_sec = col("mean_seconds");
    const auto c_cmp = col("mean_comparisons");
    if (!c_alg || !c_dist || !c_n || !c_sec) {
        throw ConfigError("aggregate CSV must have columns algorithm,distribution,n,mean_seconds (got '" + line + "')");
    }

    std::vector<AggregateRow> rows;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto f = detail::split_csv_line(line);
        if (f.size() < header.size()) {
            throw ConfigError("line " + std::to_string(lineno) + ": expected " + std::to_string(header.size()) +
                              " fields, got " + std::to_string(f.size()));
        }
        AggregateRow r;
        r.algorithm = f[*c_alg];
        r.distribution = f[*c_dist];
        r.n = detail::parse_number<std::uint64_t>(f[*c_n], "n", lineno);
        r.mean_seconds = detail::parse_number<double>(f[*c_sec], "mean_seconds", lineno);
        if (c_cmp && !f[*c_cmp].empty()) {
            r.mean_comparisons = detail::parse_number<double>(f[*c_cmp], "mean_comparisons", lineno);
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

inline std::vector<TrialRecord> read_records_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != kRecordsHeader) {
        throw ConfigError("records CSV must start with header '" + std::string(kRecordsHeader) + "'");
    }
    std::vector<TrialRecord> out;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto f = detail::split_csv_line(line);
        if (f.size() != 10) throw ConfigError("line " + std::to_string(lineno) + ": expected 10 fields");
        TrialRecord r;
        r.algorithm = f[0];
        r.distribution = f[1];
        r.params = f[2];
        r.n = detail::parse_number<std::uint64_t>(f[3], "n", lineno);
        r.trial = detail::parse_number<std::int64_t>(f[4], "trial", lineno);
        r.seed = detail::parse_number<std::uint64_t>(f[5], "seed", lineno);
        r.elapsed_ns = detail::parse_number<std::int64_t>(f[6], "elapsed_ns", lineno);
        r.comparisons = detail::parse_number<std::uint64_t>(f[7], "comparisons", lineno);
        r.exchanges = detail::parse_number<std::uint64_t>(f[8], "exchanges", lineno);
        r.correction_passes = detail::parse_number<std::uint64_t>(f[9], "correction_passes", lineno);
        out.push_back(std::move(r));
    }
    return out;
}

/// Bundled datasets. Only "table1" exists.
inline std::vector<AggregateRow> load_fixture(std::string_view name) {
    if (name != "table1") throw ConfigError("unknown fixture '" + std::string(name) + "' (available: table1)");
    std::istringstream is{std::string(kTable1Csv)};
    return read_aggregate_csv(is);
}

/// (n, y) series of one (algorithm, distribution) column, ordered by n.
struct Series {
    std::vector<double> n;
    std::vector<double> y;
};

inline Series select_series(const std::vector<AggregateRow>& rows, std::string_view algorithm,
                            std::string_view distribution) {
    std::vector<const AggregateRow*> hits;
    for (const auto& r : rows) {
        if (r.algorithm == algorithm && r.distribution == distribution) hits.push_back(&r);
    }
    std::sort(hits.begin(), hits.end(), [](auto* a, auto* b) { return a->n < b->n; });
    Series s;
    for (const auto* r : hits) {
        s.n.push_back(static_cast<double>(r->n));
        s.y.push_back(r->mean_seconds);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Plan JSON

/// Parses an ExperimentPlan document:
///   {"sizes": [...], "trials": 30, "warmup_trials": 3, "master_seed": 42,
///    "distributions": [{"kind": "du", "k": 50}, {"kind": "poisson", "lambda": 4},
///                      {"kind": "binomial", "m": 400, "p": 0.5}],
///    "algorithms": ["rs_sort", "quicksort:lomuto_last"]}
/// master_seed falls back to `default_seed` when absent. Unknown keys are
/// rejected.
inline ExperimentPlan parse_plan(const nlohmann::json& j, std::uint64_t default_seed = 0) {
    using nlohmann::json;
    if (!j.is_object()) throw ConfigError("plan must be a JSON object");
    static const std::set<std::string> known{"sizes", "trials", "warmup_trials", "master_seed", "distributions",
                                             "algorithms"};
    for (const auto& [k, v] : j.items()) {
        if (!known.contains(k)) throw ConfigError("unknown plan key '" + k + "'");
    }
    try {
        ExperimentPlan plan;
        plan.master_seed = default_seed;
        plan.sizes = j.at("sizes").get<std::vector<std::uint64_t>>();
        if (j.contains("trials")) plan.trials = j.at("trials").get<std::uint64_t>();
        if (j.contains("warmup_trials")) plan.warmup_trials = j.at("warmup_trials").get<std::uint64_t>();
        if (j.contains("master_seed")) plan.master_seed = j.at("master_seed").get<std::uint64_t>();
        for (const auto& d : j.at("distributions")) {
            DistributionSpec spec;
            spec.kind = DistributionSpec::parse_kind(d.at("kind").get<std::string>());
            switch (spec.kind) {
                case DistributionSpec::Kind::discrete_uniform:
                    spec = DistributionSpec::discrete_uniform(d.value("k", std::int64_t{50}));
                    break;
                case DistributionSpec::Kind::poisson: spec = DistributionSpec::poisson(d.value("lambda", 4.0)); break;
                case DistributionSpec::Kind::binomial:
                    spec = DistributionSpec::binomial(d.value("m", std::int64_t{400}), d.value("p", 0.5));
                    break;
            }
            plan.distributions.push_back(spec);
        }
        for (const auto& a : j.at("algorithms")) plan.algorithms.push_back(Algorithm::parse(a.get<std::string>()));
        plan.validate();
        return plan;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed plan: ") + e.what());
    }
}

inline nlohmann::json plan_to_json(const ExperimentPlan& plan) {
    nlohmann::json j;
    j["sizes"] = plan.sizes;
    j["trials"] = plan.trials;
    j["warmup_trials"] = plan.warmup_trials;
    j["master_seed"] = plan.master_seed;
    j["distributions"] = nlohmann::json::array();
    for (const auto& d : plan.distributions) {
        nlohmann::json dj{{"kind", d.name()}};
        switch (d.kind) {
            case DistributionSpec::Kind::discrete_uniform: dj["k"] = d.k; break;
            case DistributionSpec::Kind::poisson: dj["lambda"] = d.lambda; break;
            case DistributionSpec::Kind::binomial:
                dj["m"] = d.m;
                dj["p"] = d.p;
                break;
        }
        j["distributions"].push_back(dj);
    }
    j["algorithms"] = nlohmann::json::array();
    for (const auto& a : plan.algorithms) j["algorithms"].push_back(a.name());
    return j;
}

}  // namespace gapsort
