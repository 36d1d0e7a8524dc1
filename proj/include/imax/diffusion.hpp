#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "imax/assign.hpp"
#include "imax/graph.hpp"

namespace imax {

// Distinct vertex ids in insertion order. Heuristics report seeds in
// selection order, so order is part of the value.
class SeedSet {
public:
    SeedSet() = default;
    explicit SeedSet(std::vector<Vertex> ids);

    bool insert(Vertex v);
    bool contains(Vertex v) const;

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    const std::vector<Vertex>& ids() const { return ids_; }

    std::vector<Vertex> sorted() const;

private:
    std::vector<Vertex> ids_;
};

// Outcome of one diffusion run. `spreaders` is the LTM spreader set or the
// ICM active set; `aware` is the scored set (closed neighborhood of the
// spreaders under LTM, the active set itself under ICM unless the aware
// closure is requested). `wave[u]` is the round at which u became a
// spreader/active (0 for seeds, -1 otherwise).
struct DiffusionResult {
    std::vector<Vertex> aware;      // sorted
    std::vector<Vertex> spreaders;  // sorted
    std::vector<std::int32_t> wave;
    std::int32_t rounds = 0;
    double interest = 0.0;
};

double interest_sum(const std::vector<Vertex>& set, const InterestAssignment& eta);

// LTM fixed point from seed set s: spreaders grow in BFS waves while a
// non-seed u with |N(u) ∩ spreaders| >= t(u) exists; aware = N[spreaders].
// Throws std::out_of_range on seed ids outside the graph.
DiffusionResult ltm_diffuse(const Graph& g, const ThresholdAssignment& t,
                            const SeedSet& s, const InterestAssignment& eta);

// Independent cascade from seed set s. Each vertex, on becoming active,
// draws one u01 per currently inactive neighbor (ascending source id within
// a wave, ascending neighbor order) and activates it iff u01 < p(u,v), so a
// run is bit-reproducible for a fixed (graph, probs, seeds, seed).
// With aware_closure the scored set is N[active] instead of the active set.
DiffusionResult icm_diffuse(const Graph& g, const EdgeProbabilities& probs,
                            const SeedSet& s, const InterestAssignment& eta,
                            std::uint64_t seed, bool aware_closure = false);

struct IcmEstimate {
    double mean = 0.0;
    double stddev = 0.0;      // sample std dev; 0 for reps == 1
    double mean_aware = 0.0;  // mean |aware| over replicates
};

// Mean and sample standard deviation of the interest over `reps` cascades.
// Replicate r runs with seed derive_seed(master_seed, kIcmReplicateTag, r);
// the accumulation is done in replicate order, so the result is independent
// of how replicates are scheduled. Replicates run in parallel.
IcmEstimate icm_estimate(const Graph& g, const EdgeProbabilities& probs,
                         const SeedSet& s, const InterestAssignment& eta,
                         std::int64_t reps, std::uint64_t master_seed,
                         bool aware_closure = false);

inline constexpr std::uint64_t kIcmReplicateTag = 1;

// One-line JSON record of a diffusion run; vertex sets use original labels.
// `spreader_key` names the second set ("spreaders" for LTM, "active" for ICM).
std::string trace_json(const DiffusionResult& r, const Graph& g,
                       const SeedSet& seeds, const std::string& spreader_key);

namespace serial {
IcmEstimate icm_estimate(const Graph& g, const EdgeProbabilities& probs,
                         const SeedSet& s, const InterestAssignment& eta,
                         std::int64_t reps, std::uint64_t master_seed,
                         bool aware_closure = false);
} // namespace serial

} // namespace imax
