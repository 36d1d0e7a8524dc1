#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace imax {

using Vertex = std::int32_t;
using Label = std::int64_t;

// Immutable undirected simple graph in compressed adjacency form.
// Vertices carry dense ids 0..n-1 assigned in first-seen order of their
// original labels; neighbor lists are sorted ascending and symmetric.
class Graph {
public:
    Graph() = default;

    // Builds from an explicit vertex count and edge list over dense ids.
    // Self-loops are dropped and duplicate/reversed edges merged, matching
    // the edge-list loader. Isolated vertices are kept.
    static Graph from_edges(Vertex n,
                            const std::vector<std::pair<Vertex, Vertex>>& edges,
                            std::vector<Label> labels = {});

    Vertex num_vertices() const { return n_; }
    std::int64_t num_edges() const { return m_; }

    Vertex degree(Vertex u) const {
        return static_cast<Vertex>(offsets_[u + 1] - offsets_[u]);
    }

    std::span<const Vertex> neighbors(Vertex u) const {
        return {adj_.data() + offsets_[u],
                static_cast<std::size_t>(offsets_[u + 1] - offsets_[u])};
    }

    bool has_edge(Vertex u, Vertex v) const;

    Label label(Vertex u) const { return labels_[u]; }
    const std::vector<Label>& labels() const { return labels_; }

    // Dense id of an original label, or -1 if unknown.
    Vertex id_of(Label label) const;

    // Offset of the arc (u, adj[j]) in the flat adjacency array; aligns
    // per-arc payloads such as ICM probabilities.
    std::int64_t arc_offset(Vertex u) const { return offsets_[u]; }
    std::int64_t num_arcs() const { return static_cast<std::int64_t>(adj_.size()); }

    // Emits an edge list that reloads to an identical graph: each edge is
    // written at its larger endpoint, and a vertex with no lower-id neighbor
    // is introduced by a self row (dropped as a self-loop on reload). This
    // keeps first-seen label order equal to dense-id order.
    void write_edge_list(std::ostream& out) const;

private:
    Vertex n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::int64_t> offsets_;  // n+1
    std::vector<Vertex> adj_;            // 2m, sorted per vertex
    std::vector<Label> labels_;          // dense id -> original label
    std::unordered_map<Label, Vertex> id_map_;

    friend Graph load_edge_list(std::istream& in);
};

// Parses an ASCII edge list: one edge per line, two whitespace-separated
// non-negative integer labels; lines starting with '#' or '%' are ignored.
// Labels are remapped to dense ids in first-seen order; self-loops dropped,
// duplicate and reversed-duplicate edges merged.
// Throws std::runtime_error on malformed lines (with line number) and on
// input that yields no vertices ("empty graph").
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

struct Stats {
    std::int64_t nodes = 0;
    std::int64_t edges = 0;
    double density = 0.0;
    double avg_degree = 0.0;
    double avg_clustering = 0.0;
};

// Network statistics. Average clustering is the mean local clustering
// coefficient over all vertices; deg < 2 vertices contribute 0.
Stats graph_stats(const Graph& g);

namespace serial {
// Reference implementation of the clustering kernel, kept for equivalence
// tests and the kernel benchmark.
double avg_clustering(const Graph& g);
} // namespace serial

} // namespace imax
