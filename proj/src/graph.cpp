#include "imax/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace imax {

namespace {

// Sorts, dedupes and symmetrizes an edge set (u != v already ensured),
// then packs it into CSR arrays.
void build_csr(Vertex n, std::vector<std::pair<Vertex, Vertex>>& edges,
               std::vector<std::int64_t>& offsets, std::vector<Vertex>& adj,
               std::int64_t& m) {
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    m = static_cast<std::int64_t>(edges.size());

    std::vector<std::int64_t> deg(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex u = 0; u < n; ++u) offsets[u + 1] = offsets[u] + deg[u];
    adj.resize(static_cast<std::size_t>(offsets[n]));

    // Filling from the (min,max)-sorted edge list leaves every neighbor list
    // ascending: u receives its smaller neighbors first (keys (w,u), w
    // ascending), then its larger ones (keys (u,v), v ascending).
    std::vector<std::int64_t> cursor(offsets.begin(), offsets.end() - 1);
    for (auto [u, v] : edges) {
        adj[cursor[u]++] = v;
        adj[cursor[v]++] = u;
    }
}

} // namespace

Graph Graph::from_edges(Vertex n,
                        const std::vector<std::pair<Vertex, Vertex>>& edges,
                        std::vector<Label> labels) {
    Graph g;
    g.n_ = n;
    if (labels.empty()) {
        g.labels_.resize(static_cast<std::size_t>(n));
        for (Vertex u = 0; u < n; ++u) g.labels_[u] = u;
    } else {
        if (static_cast<Vertex>(labels.size()) != n)
            throw std::invalid_argument("from_edges: labels size != n");
        g.labels_ = std::move(labels);
    }
    for (Vertex u = 0; u < n; ++u) g.id_map_.emplace(g.labels_[u], u);

    std::vector<std::pair<Vertex, Vertex>> kept;
    kept.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::out_of_range("from_edges: endpoint out of range");
        if (u != v) kept.emplace_back(u, v);
    }
    build_csr(n, kept, g.offsets_, g.adj_, g.m_);
    return g;
}

Graph load_edge_list(std::istream& in) {
    Graph g;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::string line;
    std::int64_t line_no = 0;

    auto intern = [&g](Label label) -> Vertex {
        auto [it, inserted] =
            g.id_map_.emplace(label, static_cast<Vertex>(g.labels_.size()));
        if (inserted) g.labels_.push_back(label);
        return it->second;
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i == line.size() || line[i] == '#' || line[i] == '%') continue;

        Label a = 0, b = 0;
        int fields = 0;
        bool bad = false;
        std::size_t p = i;
        for (; p < line.size() && !bad;) {
            while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p])))
                ++p;
            if (p == line.size()) break;
            if (fields == 2) {
                bad = true;
                break;
            }
            Label value = 0;
            std::size_t start = p;
            while (p < line.size() && std::isdigit(static_cast<unsigned char>(line[p]))) {
                value = value * 10 + (line[p] - '0');
                ++p;
            }
            if (p == start ||
                (p < line.size() && !std::isspace(static_cast<unsigned char>(line[p])))) {
                bad = true;
                break;
            }
            (fields == 0 ? a : b) = value;
            ++fields;
        }
        if (bad || fields != 2)
            throw std::runtime_error("edge list parse error at line " +
                                     std::to_string(line_no) +
                                     ": expected two non-negative integer labels");

        Vertex u = intern(a);
        Vertex v = intern(b);
        if (u != v) edges.emplace_back(u, v);
    }

    g.n_ = static_cast<Vertex>(g.labels_.size());
    if (g.n_ == 0) throw std::runtime_error("empty graph");
    build_csr(g.n_, edges, g.offsets_, g.adj_, g.m_);
    return g;
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return load_edge_list(in);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

Vertex Graph::id_of(Label label) const {
    auto it = id_map_.find(label);
    return it == id_map_.end() ? -1 : it->second;
}

void Graph::write_edge_list(std::ostream& out) const {
    for (Vertex u = 0; u < n_; ++u) {
        auto nb = neighbors(u);
        if (nb.empty() || nb.front() > u) out << labels_[u] << ' ' << labels_[u] << '\n';
        for (Vertex v : nb) {
            if (v < u) out << labels_[v] << ' ' << labels_[u] << '\n';
        }
    }
}

namespace {

// Number of edges among the neighbors of u, via sorted-list intersections.
std::int64_t triangles_at(const Graph& g, Vertex u) {
    auto nu = g.neighbors(u);
    std::int64_t paired = 0;
    for (Vertex v : nu) {
        auto nv = g.neighbors(v);
        std::size_t i = 0, j = 0;
        while (i < nu.size() && j < nv.size()) {
            if (nu[i] < nv[j])
                ++i;
            else if (nu[i] > nv[j])
                ++j;
            else {
                ++paired;
                ++i;
                ++j;
            }
        }
    }
    return paired / 2;
}

double local_clustering(const Graph& g, Vertex u) {
    std::int64_t d = g.degree(u);
    if (d < 2) return 0.0;
    return 2.0 * static_cast<double>(triangles_at(g, u)) /
           (static_cast<double>(d) * static_cast<double>(d - 1));
}

} // namespace

Stats graph_stats(const Graph& g) {
    Stats s;
    s.nodes = g.num_vertices();
    s.edges = g.num_edges();
    double n = static_cast<double>(s.nodes);
    s.density = s.nodes >= 2 ? 2.0 * static_cast<double>(s.edges) / (n * (n - 1.0)) : 0.0;
    s.avg_degree = s.nodes >= 1 ? 2.0 * static_cast<double>(s.edges) / n : 0.0;

    std::vector<double> cc(static_cast<std::size_t>(g.num_vertices()), 0.0);
#pragma omp parallel for schedule(dynamic, 64)
    for (Vertex u = 0; u < g.num_vertices(); ++u) cc[u] = local_clustering(g, u);
    double sum = 0.0;
    for (double c : cc) sum += c;
    s.avg_clustering = s.nodes >= 1 ? sum / n : 0.0;
    return s;
}

namespace serial {

double avg_clustering(const Graph& g) {
    if (g.num_vertices() == 0) return 0.0;
    double sum = 0.0;
    for (Vertex u = 0; u < g.num_vertices(); ++u) sum += local_clustering(g, u);
    return sum / static_cast<double>(g.num_vertices());
}

} // namespace serial

} // namespace imax
