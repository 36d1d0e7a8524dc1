// Command-line front end: experiment runner plus utilities for network
// statistics, LP model export, max-coverage reductions, and the brute-force
// optimum.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "imax/bench.hpp"
#include "imax/exact.hpp"
#include "imax/rng.hpp"

namespace {

struct TokenError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "fixed:0.5" or "interest"
void parse_mechanism(const std::string& tok, imax::ExperimentConfig& cfg) {
    if (tok == "interest") {
        cfg.mechanism_interest = true;
    } else if (tok.rfind("fixed:", 0) == 0) {
        cfg.mechanism_interest = false;
        cfg.mechanism_ratio = std::stod(tok.substr(6));
    } else {
        throw TokenError("--mechanism expects fixed:R or interest, got '" + tok + "'");
    }
    cfg.setting_token = tok;
}

// "uniform:0.5" or "interest:0.5"
void parse_prob(const std::string& tok, imax::ExperimentConfig& cfg) {
    if (tok.rfind("uniform:", 0) == 0) {
        cfg.prob_interest = false;
        cfg.prob_value = std::stod(tok.substr(8));
    } else if (tok.rfind("interest:", 0) == 0) {
        cfg.prob_interest = true;
        cfg.prob_value = std::stod(tok.substr(9));
    } else {
        throw TokenError("--prob expects uniform:P or interest:C, got '" + tok + "'");
    }
    cfg.setting_token = tok;
}

// "random:SEED", "const:C" or "file:PATH"
imax::EtaMode parse_eta(const std::string& tok) {
    imax::EtaMode mode;
    if (tok.rfind("random:", 0) == 0) {
        mode.kind = imax::EtaMode::Random;
        mode.seed = std::stoull(tok.substr(7));
    } else if (tok.rfind("const:", 0) == 0) {
        mode.kind = imax::EtaMode::Constant;
        mode.constant = std::stod(tok.substr(6));
    } else if (tok.rfind("file:", 0) == 0) {
        mode.kind = imax::EtaMode::File;
        mode.path = tok.substr(5);
    } else {
        throw TokenError("--eta expects random:SEED, const:C or file:PATH, got '" +
                         tok + "'");
    }
    return mode;
}

std::vector<imax::Algo> parse_algos(const std::string& list) {
    std::vector<imax::Algo> algos;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) algos.push_back(imax::algo_from_name(item));
    }
    if (algos.empty()) throw TokenError("--algo list is empty");
    return algos;
}

std::vector<std::int32_t> parse_k_list(const std::string& list) {
    std::vector<std::int32_t> ks;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) ks.push_back(std::stoi(item));
    }
    if (ks.empty()) throw TokenError("--k-list is empty");
    return ks;
}

std::string format_number(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interest maximization toolkit: diffusion heuristics, exact "
                 "baselines and experiment harness"};
    app.require_subcommand(1);

    // --- run ---
    auto* run = app.add_subcommand("run", "Run an experiment and emit CSV");
    std::string run_graph, run_algos, run_mechanism, run_prob, run_eta, run_klist,
        run_model, run_out;
    std::int64_t run_reps = 0, run_sel_reps = 20;
    std::uint64_t run_seed = 0;
    bool run_closure = false, run_trace = false;
    run->add_option("--graph", run_graph, "Edge list path")->required();
    run->add_option("--algo", run_algos, "Comma list of lbgh,mdfh,pbgh,mpbgh,brute")
        ->required();
    run->add_option("--model", run_model, "ltm or icm")->required();
    run->add_option("--mechanism", run_mechanism, "LTM thresholds: fixed:R or interest");
    run->add_option("--prob", run_prob, "ICM probabilities: uniform:P or interest:C");
    run->add_option("--eta", run_eta, "Interest values: random:SEED, const:C or file:PATH")
        ->required();
    run->add_option("--k-list", run_klist, "Ascending comma list of seed budgets")
        ->required();
    run->add_option("--reps", run_reps, "ICM evaluation repetitions (default 200; mpbgh 20)");
    run->add_option("--sel-reps", run_sel_reps, "ICM selection repetitions (default 20)");
    run->add_option("--seed", run_seed, "Master seed");
    run->add_option("--out", run_out, "CSV output path (default stdout)");
    run->add_flag("--icm-aware-closure", run_closure,
                  "Score N[active] instead of the active set under ICM");
    run->add_flag("--dump-trace", run_trace,
                  "Print one JSON diffusion trace per row to stderr");

    // --- stats ---
    auto* stats = app.add_subcommand("stats", "Print network statistics");
    std::string stats_graph;
    stats->add_option("--graph", stats_graph, "Edge list path")->required();

    // --- ilp-export ---
    auto* ilp = app.add_subcommand("ilp-export", "Write the diffusion 0/1 program");
    std::string ilp_graph, ilp_eta = "const:1.0", ilp_mechanism = "fixed:0.5", ilp_out;
    std::int32_t ilp_k = 1, ilp_horizon = 0;
    ilp->add_option("--graph", ilp_graph, "Edge list path")->required();
    ilp->add_option("--k", ilp_k, "Seed budget")->required();
    ilp->add_option("--horizon", ilp_horizon, "Unrolled rounds (default: n)");
    ilp->add_option("--eta", ilp_eta, "Interest values (default const:1.0)");
    ilp->add_option("--mechanism", ilp_mechanism, "Thresholds (default fixed:0.5)");
    ilp->add_option("--out", ilp_out, "LP file path (default stdout)");

    // --- reduce-mcp ---
    auto* reduce = app.add_subcommand(
        "reduce-mcp", "Build the interest-maximization instance of a coverage problem");
    std::string reduce_subsets, reduce_out;
    reduce->add_option("--subsets", reduce_subsets, "Coverage instance file")->required();
    reduce->add_option("--out", reduce_out, "Output prefix (.edges/.thresholds/.eta)")
        ->required();

    // --- brute ---
    auto* brute = app.add_subcommand("brute", "Exhaustive optimum over k-subsets");
    std::string brute_graph, brute_model = "ltm", brute_mechanism, brute_prob,
                brute_eta = "const:1.0";
    std::int32_t brute_k = 1;
    std::int64_t brute_reps = 200, brute_cap = imax::kDefaultEnumerationCap;
    std::uint64_t brute_seed = 0;
    bool brute_closure = false;
    brute->add_option("--graph", brute_graph, "Edge list path")->required();
    brute->add_option("--k", brute_k, "Seed budget")->required();
    brute->add_option("--model", brute_model, "ltm or icm");
    brute->add_option("--mechanism", brute_mechanism, "LTM thresholds");
    brute->add_option("--prob", brute_prob, "ICM probabilities");
    brute->add_option("--eta", brute_eta, "Interest values");
    brute->add_option("--reps", brute_reps, "ICM repetitions per subset");
    brute->add_option("--seed", brute_seed, "Master seed");
    brute->add_option("--cap", brute_cap, "Enumeration cap on C(n,k)");
    brute->add_flag("--icm-aware-closure", brute_closure, "Score N[active] under ICM");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << std::flush;
        return 2;
    }

    try {
        if (*run) {
            imax::ExperimentConfig cfg;
            cfg.graph_path = run_graph;
            cfg.algos = parse_algos(run_algos);
            if (run_model == "ltm")
                cfg.model = imax::Model::Ltm;
            else if (run_model == "icm")
                cfg.model = imax::Model::Icm;
            else
                throw TokenError("--model must be ltm or icm");
            if (cfg.model == imax::Model::Ltm) {
                if (run_mechanism.empty())
                    throw TokenError("--mechanism is required for --model ltm");
                if (!run_prob.empty())
                    throw TokenError("--prob is not valid for --model ltm");
                parse_mechanism(run_mechanism, cfg);
            } else {
                if (run_prob.empty())
                    throw TokenError("--prob is required for --model icm");
                if (!run_mechanism.empty())
                    throw TokenError("--mechanism is not valid for --model icm");
                parse_prob(run_prob, cfg);
            }
            cfg.eta = parse_eta(run_eta);
            cfg.k_list = parse_k_list(run_klist);
            cfg.reps = run_reps;
            cfg.sel_reps = run_sel_reps;
            cfg.master_seed = run_seed;
            cfg.icm_aware_closure = run_closure;

            auto rows = imax::run_experiment(cfg, run_trace);
            auto csv = imax::to_csv(rows);
            if (run_out.empty())
                std::cout << csv;
            else
                write_text(run_out, csv);
            if (run_trace) {
                for (const auto& row : rows)
                    if (!row.trace.empty()) std::cerr << row.trace << '\n';
            }
        } else if (*stats) {
            auto g = imax::load_edge_list_file(stats_graph);
            auto st = imax::graph_stats(g);
            std::cout << "nodes=" << st.nodes << " edges=" << st.edges
                      << " density=" << format_number(st.density)
                      << " avg_degree=" << format_number(st.avg_degree)
                      << " avg_clustering=" << format_number(st.avg_clustering) << '\n';
        } else if (*ilp) {
            auto g = imax::load_edge_list_file(ilp_graph);
            imax::ExperimentConfig tmp;
            parse_mechanism(ilp_mechanism, tmp);
            auto eta_mode = parse_eta(ilp_eta);
            imax::InterestAssignment eta;
            switch (eta_mode.kind) {
                case imax::EtaMode::Random:
                    eta = imax::interest_random(g, eta_mode.seed);
                    break;
                case imax::EtaMode::Constant:
                    eta = imax::interest_constant(g, eta_mode.constant);
                    break;
                case imax::EtaMode::File:
                    eta = imax::interest_from_file(g, eta_mode.path);
                    break;
            }
            auto thresholds = tmp.mechanism_interest
                                  ? imax::thresholds_interest_based(g, eta)
                                  : imax::thresholds_fixed_ratio(g, tmp.mechanism_ratio);
            std::int32_t horizon = ilp_horizon > 0 ? ilp_horizon : g.num_vertices();
            auto model = imax::ilp_export(g, thresholds, eta, ilp_k, horizon);
            auto text = imax::render_lp(model);
            if (ilp_out.empty())
                std::cout << text;
            else
                write_text(ilp_out, text);
            std::cerr << "variables=" << model.num_vars()
                      << " constraints=" << model.constraints.size() << '\n';
        } else if (*reduce) {
            std::ifstream in(reduce_subsets);
            if (!in)
                throw std::runtime_error("cannot open subsets file: " + reduce_subsets);
            auto inst = imax::parse_mcp(in);
            auto red = imax::mcp_reduce(inst);

            std::ostringstream edges;
            edges << "# reduced coverage instance: vertices 0.."
                  << red.graph.num_vertices() - 1 << "\n";
            for (imax::Vertex u = 0; u < red.graph.num_vertices(); ++u)
                edges << "# vertex " << u << " = " << red.vertex_names[u] << "\n";
            red.graph.write_edge_list(edges);
            write_text(reduce_out + ".edges", edges.str());

            std::ostringstream thr;
            for (imax::Vertex u = 0; u < red.graph.num_vertices(); ++u)
                thr << red.graph.label(u) << ' ' << red.thresholds.t[u] << '\n';
            write_text(reduce_out + ".thresholds", thr.str());

            std::ostringstream etaout;
            for (imax::Vertex u = 0; u < red.graph.num_vertices(); ++u)
                etaout << red.graph.label(u) << " 1.0\n";
            write_text(reduce_out + ".eta", etaout.str());

            std::cout << "k=" << red.k << " target=" << red.target
                      << " vertices=" << red.graph.num_vertices()
                      << " edges=" << red.graph.num_edges() << '\n';
        } else if (*brute) {
            auto g = imax::load_edge_list_file(brute_graph);
            auto eta_mode = parse_eta(brute_eta);
            imax::InterestAssignment eta;
            switch (eta_mode.kind) {
                case imax::EtaMode::Random:
                    eta = imax::interest_random(g, eta_mode.seed);
                    break;
                case imax::EtaMode::Constant:
                    eta = imax::interest_constant(g, eta_mode.constant);
                    break;
                case imax::EtaMode::File:
                    eta = imax::interest_from_file(g, eta_mode.path);
                    break;
            }
            imax::ThresholdAssignment thresholds;
            imax::EdgeProbabilities probs;
            std::variant<imax::LtmModel, imax::IcmModel> model;
            if (brute_model == "ltm") {
                imax::ExperimentConfig tmp;
                parse_mechanism(brute_mechanism.empty() ? "fixed:0.5" : brute_mechanism,
                                tmp);
                thresholds = tmp.mechanism_interest
                                 ? imax::thresholds_interest_based(g, eta)
                                 : imax::thresholds_fixed_ratio(g, tmp.mechanism_ratio);
                model = imax::LtmModel{&thresholds};
            } else if (brute_model == "icm") {
                imax::ExperimentConfig tmp;
                parse_prob(brute_prob.empty() ? "uniform:0.5" : brute_prob, tmp);
                probs = tmp.prob_interest
                            ? imax::probs_interest_scaled(g, tmp.prob_value, eta)
                            : imax::probs_uniform(g, tmp.prob_value);
                model = imax::IcmModel{&probs, 1, brute_reps, brute_seed, brute_closure};
            } else {
                throw TokenError("--model must be ltm or icm");
            }
            auto best = imax::brute_force_opt(g, model, eta, brute_k, brute_cap);
            std::cout << "seeds=";
            const auto& ids = best.seeds.ids();
            for (std::size_t i = 0; i < ids.size(); ++i) {
                if (i) std::cout << ';';
                std::cout << g.label(ids[i]);
            }
            std::cout << " value=" << format_number(best.value) << '\n';
        }
    } catch (const TokenError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help() << std::flush;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
