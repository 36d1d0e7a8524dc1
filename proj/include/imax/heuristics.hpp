#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "imax/assign.hpp"
#include "imax/diffusion.hpp"
#include "imax/graph.hpp"

namespace imax {

struct LtmModel {
    const ThresholdAssignment* thresholds = nullptr;
};

struct IcmModel {
    const EdgeProbabilities* probs = nullptr;
    std::int64_t sel_reps = 20;    // replicates per candidate during selection
    std::int64_t eval_reps = 200;  // replicates for the final evaluation
    std::uint64_t master_seed = 0;
    bool aware_closure = false;
};

struct HeuristicConfig {
    std::int32_t k = 1;
    std::variant<LtmModel, IcmModel> model;
    const InterestAssignment* eta = nullptr;
};

struct HeuristicOutcome {
    SeedSet seeds;
    double interest = 0.0;       // fresh evaluation of `seeds` under the model
    double interest_stddev = 0.0;  // 0 under LTM
    double aware_count = 0.0;    // |aware| (LTM) or mean |aware| (ICM)
    std::int64_t evaluations = 0;  // diffusion runs performed, cascades included
    double elapsed_ms = 0.0;
};

// Level-based vertex order: the interest-sorted first half forms level 0,
// BFS layers from it form the further levels, each level is degree-sorted,
// and the output interleaves equal ranks across levels (each rank batch
// degree-sorted). Vertices unreachable from level 0 follow, degree-sorted.
// All ties break toward the lower vertex id.
std::vector<Vertex> level_based_order(const Graph& g, const InterestAssignment& eta);

// Single pass over `order`: a vertex joins the seed set iff it strictly
// increases the model's aware count (ICM: mean over sel_reps replicates with
// shared per-replicate seeds); stops after k additions.
SeedSet greedy_marginal_select(const Graph& g, const std::vector<Vertex>& order,
                               const HeuristicConfig& cfg);

HeuristicOutcome lbgh(const Graph& g, const HeuristicConfig& cfg);
HeuristicOutcome mdfh(const Graph& g, const HeuristicConfig& cfg);
HeuristicOutcome pbgh(const Graph& g, const HeuristicConfig& cfg);
HeuristicOutcome mpbgh(const Graph& g, const HeuristicConfig& cfg);

// Selection-time RNG stream tags (see rng.hpp). MPBGH uses common random
// numbers across the candidates of one round: replicate r of round q runs
// with derive_seed(master, kSelectionTag, q * sel_reps + r).
inline constexpr std::uint64_t kSelectionTag = 2;
inline constexpr std::uint64_t kPbghRoundTag = 3;

namespace serial {
HeuristicOutcome mpbgh(const Graph& g, const HeuristicConfig& cfg);
} // namespace serial

} // namespace imax
