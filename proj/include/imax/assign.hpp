#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "imax/graph.hpp"

namespace imax {

// Per-vertex interest eta(u) in (0,1].
struct InterestAssignment {
    std::vector<double> eta;

    double total() const {
        double s = 0.0;
        for (double e : eta) s += e;
        return s;
    }
};

// Per-vertex LTM activation threshold, always >= 1.
struct ThresholdAssignment {
    std::vector<std::int32_t> t;
};

// Per-arc ICM activation probability, aligned with the graph's flat
// adjacency array: arc (u, neighbors(u)[j]) has p[arc_offset(u) + j].
struct EdgeProbabilities {
    std::vector<double> p;

    double arc(const Graph& g, Vertex u, std::size_t j) const {
        return p[static_cast<std::size_t>(g.arc_offset(u)) + j];
    }
};

// eta drawn uniformly from (0,1]: eta[u] = 1 - u01 with a fresh RngStream
// seeded by `seed`, consumed in vertex order. Deterministic per seed.
InterestAssignment interest_random(const Graph& g, std::uint64_t seed);

// eta[u] = c for all u; requires c in (0,1].
InterestAssignment interest_constant(const Graph& g, double c);

// Reads "label value" rows; every vertex must be covered exactly, values in
// (0,1]. Throws on missing/unknown labels and out-of-range values.
InterestAssignment interest_from_stream(const Graph& g, std::istream& in);
InterestAssignment interest_from_file(const Graph& g, const std::string& path);

// t(u) = max(1, ceil(deg(u) * rho)); rho in (0,1].
ThresholdAssignment thresholds_fixed_ratio(const Graph& g, double rho);

// t(u) = max(1, ceil(deg(u) * (1 - eta(u)))). The clamp keeps thresholds
// positive when eta(u) = 1.
ThresholdAssignment thresholds_interest_based(const Graph& g,
                                              const InterestAssignment& eta);

// Every arc carries probability p; p in [0,1].
EdgeProbabilities probs_uniform(const Graph& g, double p);

// Arc (u,v) carries c * eta(u); the two arcs of one edge may differ.
EdgeProbabilities probs_interest_scaled(const Graph& g, double c,
                                        const InterestAssignment& eta);

} // namespace imax
