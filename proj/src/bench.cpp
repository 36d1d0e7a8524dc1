#include "imax/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <stdexcept>

#include "imax/rng.hpp"

namespace imax {

const char* algo_name(Algo a) {
    switch (a) {
        case Algo::Lbgh: return "lbgh";
        case Algo::Mdfh: return "mdfh";
        case Algo::Pbgh: return "pbgh";
        case Algo::Mpbgh: return "mpbgh";
        case Algo::Brute: return "brute";
    }
    return "?";
}

Algo algo_from_name(const std::string& name) {
    if (name == "lbgh") return Algo::Lbgh;
    if (name == "mdfh") return Algo::Mdfh;
    if (name == "pbgh") return Algo::Pbgh;
    if (name == "mpbgh") return Algo::Mpbgh;
    if (name == "brute") return Algo::Brute;
    throw std::invalid_argument("unknown algorithm: " + name);
}

namespace {

constexpr std::uint64_t kRowTag = 4;

std::string format_number(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::int64_t default_reps(Algo a) { return a == Algo::Mpbgh ? 20 : 200; }

std::string stem_of(const std::string& path) {
    auto slash = path.find_last_of("/\\");
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = name.find_last_of('.');
    return dot == std::string::npos ? name : name.substr(0, dot);
}

InterestAssignment make_eta(const Graph& g, const EtaMode& mode) {
    switch (mode.kind) {
        case EtaMode::Random: return interest_random(g, mode.seed);
        case EtaMode::Constant: return interest_constant(g, mode.constant);
        case EtaMode::File: return interest_from_file(g, mode.path);
    }
    throw std::logic_error("unreachable eta mode");
}

} // namespace

std::vector<ResultRow> run_experiment_on(const Graph& g, const ExperimentConfig& cfg,
                                         bool dump_trace) {
    if (cfg.algos.empty()) throw std::invalid_argument("no algorithms selected");
    if (cfg.k_list.empty()) throw std::invalid_argument("empty k list");
    if (!std::is_sorted(cfg.k_list.begin(), cfg.k_list.end()))
        throw std::invalid_argument("k list must be ascending");
    for (auto k : cfg.k_list)
        if (k < 1) throw std::invalid_argument("k values must be positive");

    auto eta = make_eta(g, cfg.eta);

    ThresholdAssignment thresholds;
    EdgeProbabilities probs;
    if (cfg.model == Model::Ltm) {
        thresholds = cfg.mechanism_interest
                         ? thresholds_interest_based(g, eta)
                         : thresholds_fixed_ratio(g, cfg.mechanism_ratio);
    } else {
        probs = cfg.prob_interest ? probs_interest_scaled(g, cfg.prob_value, eta)
                                  : probs_uniform(g, cfg.prob_value);
    }

    std::vector<ResultRow> rows;
    for (Algo algo : cfg.algos) {
        for (std::int32_t k : cfg.k_list) {
            ResultRow row;
            row.dataset = cfg.dataset.empty() ? stem_of(cfg.graph_path) : cfg.dataset;
            row.algo = algo_name(algo);
            row.model = cfg.model == Model::Ltm ? "ltm" : "icm";
            row.setting = cfg.setting_token;
            row.k = k;

            const std::int64_t eval_reps =
                cfg.model == Model::Ltm ? 1
                : cfg.reps > 0          ? cfg.reps
                                        : default_reps(algo);
            row.reps = eval_reps;

            HeuristicConfig hcfg;
            hcfg.k = k;
            hcfg.eta = &eta;
            const auto row_seed =
                derive_seed(cfg.master_seed, kRowTag,
                            (static_cast<std::uint64_t>(algo) << 32) |
                                static_cast<std::uint32_t>(k));
            if (cfg.model == Model::Ltm) {
                hcfg.model = LtmModel{&thresholds};
            } else {
                hcfg.model = IcmModel{&probs, cfg.sel_reps, eval_reps, row_seed,
                                      cfg.icm_aware_closure};
            }

            try {
                HeuristicOutcome outcome;
                switch (algo) {
                    case Algo::Lbgh: outcome = lbgh(g, hcfg); break;
                    case Algo::Mdfh: outcome = mdfh(g, hcfg); break;
                    case Algo::Pbgh: outcome = pbgh(g, hcfg); break;
                    case Algo::Mpbgh: outcome = mpbgh(g, hcfg); break;
                    case Algo::Brute: {
                        auto t0 = std::chrono::steady_clock::now();
                        auto best = brute_force_opt(g, hcfg.model, eta, k, cfg.brute_cap);
                        outcome.seeds = best.seeds;
                        if (cfg.model == Model::Ltm) {
                            auto r = ltm_diffuse(g, thresholds, best.seeds, eta);
                            outcome.interest = r.interest;
                            outcome.aware_count = static_cast<double>(r.aware.size());
                        } else {
                            auto e = icm_estimate(g, probs, best.seeds, eta, eval_reps,
                                                  row_seed, cfg.icm_aware_closure);
                            outcome.interest = e.mean;
                            outcome.interest_stddev = e.stddev;
                            outcome.aware_count = e.mean_aware;
                        }
                        outcome.elapsed_ms =
                            std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
                        break;
                    }
                }
                row.mean_interest = outcome.interest;
                row.stddev_interest = outcome.interest_stddev;
                row.aware_count = outcome.aware_count;
                row.elapsed_ms = outcome.elapsed_ms;
                for (Vertex v : outcome.seeds.ids()) row.seed_labels.push_back(g.label(v));

                if (dump_trace) {
                    if (cfg.model == Model::Ltm) {
                        auto r = ltm_diffuse(g, thresholds, outcome.seeds, eta);
                        row.trace = trace_json(r, g, outcome.seeds, "spreaders");
                    } else {
                        auto r = icm_diffuse(g, probs, outcome.seeds, eta,
                                             derive_seed(row_seed, kIcmReplicateTag, 0),
                                             cfg.icm_aware_closure);
                        row.trace = trace_json(r, g, outcome.seeds, "active");
                    }
                }
            } catch (const std::runtime_error& e) {
                row.error = true;
                row.error_message = e.what();
                // Keep the marker CSV-safe.
                for (char& c : row.error_message)
                    if (c == ',' || c == '\n') c = ';';
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg, bool dump_trace) {
    Graph g = load_edge_list_file(cfg.graph_path);
    return run_experiment_on(g, cfg, dump_trace);
}

std::string to_csv(const std::vector<ResultRow>& rows) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& row : rows) {
        out += row.dataset + ',' + row.algo + ',' + row.model + ',' + row.setting +
               ',' + std::to_string(row.k) + ',' + std::to_string(row.reps) + ',';
        if (row.error) {
            out += "NA,NA,NA,ERROR(" + row.error_message + "),";
        } else {
            out += format_number(row.mean_interest) + ',' +
                   format_number(row.stddev_interest) + ',' +
                   format_number(row.aware_count) + ',';
            for (std::size_t i = 0; i < row.seed_labels.size(); ++i) {
                if (i) out += ';';
                out += std::to_string(row.seed_labels[i]);
            }
            out += ',';
        }
        out += format_number(row.elapsed_ms);
        out += '\n';
    }
    return out;
}

} // namespace imax
