#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "imax/exact.hpp"
#include "imax/graph.hpp"
#include "imax/heuristics.hpp"

namespace imax {

enum class Algo { Lbgh, Mdfh, Pbgh, Mpbgh, Brute };

const char* algo_name(Algo a);
Algo algo_from_name(const std::string& name);

enum class Model { Ltm, Icm };

struct EtaMode {
    enum Kind { Random, Constant, File } kind = Constant;
    std::uint64_t seed = 0;
    double constant = 1.0;
    std::string path;
};

struct ExperimentConfig {
    std::string graph_path;
    std::string dataset;  // defaults to the graph file stem
    std::vector<Algo> algos;
    Model model = Model::Ltm;

    // LTM mechanism: fixed:R or interest.
    bool mechanism_interest = false;
    double mechanism_ratio = 0.5;

    // ICM probability rule: uniform:P or interest:C.
    bool prob_interest = false;
    double prob_value = 0.5;

    EtaMode eta;
    std::vector<std::int32_t> k_list;

    // Evaluation repetitions (ICM). 0 keeps the per-algorithm defaults:
    // 200 for lbgh/mdfh/pbgh/brute, 20 for mpbgh.
    std::int64_t reps = 0;
    std::int64_t sel_reps = 20;
    std::uint64_t master_seed = 0;
    bool icm_aware_closure = false;
    std::int64_t brute_cap = kDefaultEnumerationCap;

    // The literal --mechanism / --prob token, echoed in the CSV `setting`
    // column (e.g. "fixed:0.5", "interest:0.5").
    std::string setting_token;
};

struct ResultRow {
    std::string dataset;
    std::string algo;
    std::string model;
    std::string setting;
    std::int32_t k = 0;
    std::int64_t reps = 0;
    double mean_interest = 0.0;
    double stddev_interest = 0.0;
    double aware_count = 0.0;
    std::vector<Label> seed_labels;
    double elapsed_ms = 0.0;
    bool error = false;
    std::string error_message;
    std::string trace;  // JSON line when dump_trace was requested
};

inline constexpr char kCsvHeader[] =
    "dataset,algo,model,setting,k,reps,mean_interest,stddev_interest,"
    "aware_count,seeds,elapsed_ms";

// One row per (algo, k), algos in listed order, k ascending. Deterministic
// for a fixed config except the elapsed_ms column. Row randomness is derived
// from (master_seed, algo, k), so rows are independent of evaluation order.
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg,
                                      bool dump_trace = false);

// Renders rows as CSV (header + one line per row, LF endings). Seed labels
// are ';'-separated inside the seeds cell. Error rows carry "NA" in the
// numeric columns and the error marker in the seeds cell.
std::string to_csv(const std::vector<ResultRow>& rows);

// Stream variant of run_experiment for pre-loaded graphs (used by tests).
std::vector<ResultRow> run_experiment_on(const Graph& g, const ExperimentConfig& cfg,
                                         bool dump_trace = false);

} // namespace imax
