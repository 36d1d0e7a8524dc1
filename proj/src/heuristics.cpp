#include "imax/heuristics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "imax/rng.hpp"

namespace imax {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void sort_by_degree_desc(const Graph& g, std::vector<Vertex>& ids) {
    std::sort(ids.begin(), ids.end(), [&g](Vertex a, Vertex b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
}

// Aware count of a seed set under the configured model. ICM averages the
// aware count over sel_reps replicates whose seeds are shared across all
// calls within one selection scan (common random numbers).
double aware_count(const Graph& g, const HeuristicConfig& cfg, const SeedSet& s,
                   std::uint64_t round, std::int64_t& evals) {
    if (const auto* ltm = std::get_if<LtmModel>(&cfg.model)) {
        ++evals;
        return static_cast<double>(ltm_diffuse(g, *ltm->thresholds, s, *cfg.eta).aware.size());
    }
    const auto& icm = std::get<IcmModel>(cfg.model);
    double sum = 0.0;
    for (std::int64_t r = 0; r < icm.sel_reps; ++r) {
        auto seed = derive_seed(icm.master_seed, kSelectionTag,
                                round * static_cast<std::uint64_t>(icm.sel_reps) +
                                    static_cast<std::uint64_t>(r));
        sum += static_cast<double>(
            icm_diffuse(g, *icm.probs, s, *cfg.eta, seed, icm.aware_closure).aware.size());
    }
    evals += icm.sel_reps;
    return sum / static_cast<double>(icm.sel_reps);
}

double interest_value(const Graph& g, const HeuristicConfig& cfg, const SeedSet& s,
                      std::uint64_t round, std::int64_t& evals) {
    if (const auto* ltm = std::get_if<LtmModel>(&cfg.model)) {
        ++evals;
        return ltm_diffuse(g, *ltm->thresholds, s, *cfg.eta).interest;
    }
    const auto& icm = std::get<IcmModel>(cfg.model);
    double sum = 0.0;
    for (std::int64_t r = 0; r < icm.sel_reps; ++r) {
        auto seed = derive_seed(icm.master_seed, kSelectionTag,
                                round * static_cast<std::uint64_t>(icm.sel_reps) +
                                    static_cast<std::uint64_t>(r));
        sum += icm_diffuse(g, *icm.probs, s, *cfg.eta, seed, icm.aware_closure).interest;
    }
    evals += icm.sel_reps;
    return sum / static_cast<double>(icm.sel_reps);
}

SeedSet greedy_scan(const Graph& g, const std::vector<Vertex>& order,
                    const HeuristicConfig& cfg, std::int64_t& evals) {
    SeedSet s;
    if (cfg.k <= 0) return s;
    double baseline = aware_count(g, cfg, s, 0, evals);
    for (Vertex u : order) {
        if (static_cast<std::int32_t>(s.size()) == cfg.k) break;
        SeedSet trial = s;
        trial.insert(u);
        double candidate = aware_count(g, cfg, trial, 0, evals);
        if (candidate > baseline) {
            s = std::move(trial);
            baseline = candidate;
        }
    }
    return s;
}

HeuristicOutcome finish(const Graph& g, const HeuristicConfig& cfg, SeedSet s,
                        std::int64_t evals, Clock::time_point start) {
    HeuristicOutcome out;
    if (const auto* ltm = std::get_if<LtmModel>(&cfg.model)) {
        auto r = ltm_diffuse(g, *ltm->thresholds, s, *cfg.eta);
        out.interest = r.interest;
        out.aware_count = static_cast<double>(r.aware.size());
        ++evals;
    } else {
        const auto& icm = std::get<IcmModel>(cfg.model);
        auto e = icm_estimate(g, *icm.probs, s, *cfg.eta, icm.eval_reps,
                              icm.master_seed, icm.aware_closure);
        out.interest = e.mean;
        out.interest_stddev = e.stddev;
        out.aware_count = e.mean_aware;
        evals += icm.eval_reps;
    }
    out.seeds = std::move(s);
    out.evaluations = evals;
    out.elapsed_ms = elapsed_ms_since(start);
    return out;
}

std::vector<Vertex> degree_order(const Graph& g) {
    std::vector<Vertex> order(static_cast<std::size_t>(g.num_vertices()));
    for (Vertex u = 0; u < g.num_vertices(); ++u) order[static_cast<std::size_t>(u)] = u;
    sort_by_degree_desc(g, order);
    return order;
}

} // namespace

std::vector<Vertex> level_based_order(const Graph& g, const InterestAssignment& eta) {
    const Vertex n = g.num_vertices();
    std::vector<Vertex> by_interest(static_cast<std::size_t>(n));
    for (Vertex u = 0; u < n; ++u) by_interest[static_cast<std::size_t>(u)] = u;
    std::sort(by_interest.begin(), by_interest.end(), [&eta](Vertex a, Vertex b) {
        double ea = eta.eta[static_cast<std::size_t>(a)];
        double eb = eta.eta[static_cast<std::size_t>(b)];
        if (ea != eb) return ea > eb;
        return a < b;
    });

    const auto core_size = static_cast<std::size_t>((n + 1) / 2);
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<Vertex>> levels;
    levels.emplace_back(by_interest.begin(),
                        by_interest.begin() + static_cast<std::ptrdiff_t>(core_size));
    for (Vertex u : levels[0]) placed[static_cast<std::size_t>(u)] = 1;
    sort_by_degree_desc(g, levels[0]);

    while (true) {
        std::vector<Vertex> next;
        for (Vertex u : levels.back()) {
            for (Vertex v : g.neighbors(u)) {
                if (!placed[static_cast<std::size_t>(v)]) {
                    placed[static_cast<std::size_t>(v)] = 1;
                    next.push_back(v);
                }
            }
        }
        if (next.empty()) break;
        sort_by_degree_desc(g, next);
        levels.push_back(std::move(next));
    }

    std::vector<Vertex> merged;
    merged.reserve(static_cast<std::size_t>(n));
    std::size_t max_len = 0;
    for (const auto& level : levels) max_len = std::max(max_len, level.size());
    for (std::size_t j = 0; j < max_len; ++j) {
        std::vector<Vertex> batch;
        for (const auto& level : levels) {
            if (j < level.size()) batch.push_back(level[j]);
        }
        sort_by_degree_desc(g, batch);
        merged.insert(merged.end(), batch.begin(), batch.end());
    }

    std::vector<Vertex> leftover;
    for (Vertex u = 0; u < n; ++u) {
        if (!placed[static_cast<std::size_t>(u)]) leftover.push_back(u);
    }
    sort_by_degree_desc(g, leftover);
    merged.insert(merged.end(), leftover.begin(), leftover.end());
    return merged;
}

SeedSet greedy_marginal_select(const Graph& g, const std::vector<Vertex>& order,
                               const HeuristicConfig& cfg) {
    std::int64_t evals = 0;
    return greedy_scan(g, order, cfg, evals);
}

HeuristicOutcome lbgh(const Graph& g, const HeuristicConfig& cfg) {
    auto start = Clock::now();
    std::int64_t evals = 0;
    auto order = level_based_order(g, *cfg.eta);
    auto seeds = greedy_scan(g, order, cfg, evals);
    return finish(g, cfg, std::move(seeds), evals, start);
}

HeuristicOutcome mdfh(const Graph& g, const HeuristicConfig& cfg) {
    auto start = Clock::now();
    std::int64_t evals = 0;
    auto seeds = greedy_scan(g, degree_order(g), cfg, evals);
    return finish(g, cfg, std::move(seeds), evals, start);
}

HeuristicOutcome pbgh(const Graph& g, const HeuristicConfig& cfg) {
    auto start = Clock::now();
    const Vertex n = g.num_vertices();
    std::int64_t evals = 0;
    SeedSet s;
    for (std::int32_t round = 0; round < cfg.k; ++round) {
        if (static_cast<Vertex>(s.size()) == n) break;

        // Aware set for profit discounting: exact under LTM, one reference
        // cascade with a per-round seed under ICM.
        std::vector<char> aware(static_cast<std::size_t>(n), 0);
        if (const auto* ltm = std::get_if<LtmModel>(&cfg.model)) {
            for (Vertex u : ltm_diffuse(g, *ltm->thresholds, s, *cfg.eta).aware)
                aware[static_cast<std::size_t>(u)] = 1;
            ++evals;
        } else {
            const auto& icm = std::get<IcmModel>(cfg.model);
            auto seed = derive_seed(icm.master_seed, kPbghRoundTag,
                                    static_cast<std::uint64_t>(round));
            for (Vertex u :
                 icm_diffuse(g, *icm.probs, s, *cfg.eta, seed, icm.aware_closure).aware)
                aware[static_cast<std::size_t>(u)] = 1;
            ++evals;
        }

        Vertex best = -1;
        double best_profit = -std::numeric_limits<double>::infinity();
        for (Vertex u = 0; u < n; ++u) {
            if (s.contains(u)) continue;
            double profit = 0.0;
            if (!aware[static_cast<std::size_t>(u)])
                profit += cfg.eta->eta[static_cast<std::size_t>(u)];
            for (Vertex v : g.neighbors(u)) {
                if (!aware[static_cast<std::size_t>(v)])
                    profit += cfg.eta->eta[static_cast<std::size_t>(v)];
            }
            if (profit > best_profit) {
                best_profit = profit;
                best = u;
            }
        }
        s.insert(best);
    }
    return finish(g, cfg, std::move(s), evals, start);
}

namespace {

HeuristicOutcome mpbgh_impl(const Graph& g, const HeuristicConfig& cfg, bool parallel) {
    auto start = Clock::now();
    const Vertex n = g.num_vertices();
    std::int64_t evals = 0;
    SeedSet s;
    std::vector<double> value(static_cast<std::size_t>(n));
    for (std::int32_t round = 0; round < cfg.k; ++round) {
        if (static_cast<Vertex>(s.size()) == n) break;

        std::fill(value.begin(), value.end(),
                  -std::numeric_limits<double>::infinity());
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
        for (Vertex u = 0; u < n; ++u) {
            if (s.contains(u)) continue;
            SeedSet trial = s;
            trial.insert(u);
            std::int64_t local_evals = 0;
            value[static_cast<std::size_t>(u)] = interest_value(
                g, cfg, trial, static_cast<std::uint64_t>(round), local_evals);
        }
        std::int64_t per_candidate = 1;
        if (const auto* icm = std::get_if<IcmModel>(&cfg.model))
            per_candidate = icm->sel_reps;
        evals += per_candidate * (n - static_cast<Vertex>(s.size()));

        // Deterministic argmax: highest value, lowest id among maxima.
        Vertex best = -1;
        double best_value = -std::numeric_limits<double>::infinity();
        for (Vertex u = 0; u < n; ++u) {
            if (value[static_cast<std::size_t>(u)] > best_value) {
                best_value = value[static_cast<std::size_t>(u)];
                best = u;
            }
        }
        s.insert(best);
    }
    return finish(g, cfg, std::move(s), evals, start);
}

} // namespace

HeuristicOutcome mpbgh(const Graph& g, const HeuristicConfig& cfg) {
    return mpbgh_impl(g, cfg, true);
}

namespace serial {

HeuristicOutcome mpbgh(const Graph& g, const HeuristicConfig& cfg) {
    return mpbgh_impl(g, cfg, false);
}

} // namespace serial

} // namespace imax
