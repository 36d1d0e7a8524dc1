#include "imax/assign.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "imax/rng.hpp"

namespace imax {

InterestAssignment interest_random(const Graph& g, std::uint64_t seed) {
    RngStream rng(seed);
    InterestAssignment a;
    a.eta.resize(static_cast<std::size_t>(g.num_vertices()));
    for (double& e : a.eta) e = rng.u01_open_closed();
    return a;
}

InterestAssignment interest_constant(const Graph& g, double c) {
    if (!(c > 0.0 && c <= 1.0))
        throw std::invalid_argument("interest constant must lie in (0,1]");
    InterestAssignment a;
    a.eta.assign(static_cast<std::size_t>(g.num_vertices()), c);
    return a;
}

InterestAssignment interest_from_stream(const Graph& g, std::istream& in) {
    InterestAssignment a;
    a.eta.assign(static_cast<std::size_t>(g.num_vertices()), 0.0);
    std::vector<bool> seen(a.eta.size(), false);
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream row(line);
        Label label;
        double value;
        if (line.empty() || line[0] == '#' || line[0] == '%') continue;
        if (!(row >> label >> value))
            throw std::runtime_error("interest file parse error at line " +
                                     std::to_string(line_no));
        Vertex u = g.id_of(label);
        if (u < 0)
            throw std::runtime_error("interest file references unknown vertex label " +
                                     std::to_string(label));
        if (!(value > 0.0 && value <= 1.0))
            throw std::runtime_error("interest value out of (0,1] for label " +
                                     std::to_string(label));
        a.eta[static_cast<std::size_t>(u)] = value;
        seen[static_cast<std::size_t>(u)] = true;
    }
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        if (!seen[static_cast<std::size_t>(u)])
            throw std::runtime_error("interest file missing vertex label " +
                                     std::to_string(g.label(u)));
    }
    return a;
}

InterestAssignment interest_from_file(const Graph& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open interest file: " + path);
    return interest_from_stream(g, in);
}

ThresholdAssignment thresholds_fixed_ratio(const Graph& g, double rho) {
    if (!(rho > 0.0 && rho <= 1.0))
        throw std::invalid_argument("threshold ratio must lie in (0,1]");
    ThresholdAssignment ta;
    ta.t.resize(static_cast<std::size_t>(g.num_vertices()));
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        auto t = static_cast<std::int32_t>(std::ceil(g.degree(u) * rho));
        ta.t[static_cast<std::size_t>(u)] = std::max(1, t);
    }
    return ta;
}

ThresholdAssignment thresholds_interest_based(const Graph& g,
                                              const InterestAssignment& eta) {
    ThresholdAssignment ta;
    ta.t.resize(static_cast<std::size_t>(g.num_vertices()));
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        double scale = 1.0 - eta.eta[static_cast<std::size_t>(u)];
        auto t = static_cast<std::int32_t>(std::ceil(g.degree(u) * scale));
        ta.t[static_cast<std::size_t>(u)] = std::max(1, t);
    }
    return ta;
}

EdgeProbabilities probs_uniform(const Graph& g, double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("arc probability must lie in [0,1]");
    EdgeProbabilities ep;
    ep.p.assign(static_cast<std::size_t>(g.num_arcs()), p);
    return ep;
}

EdgeProbabilities probs_interest_scaled(const Graph& g, double c,
                                        const InterestAssignment& eta) {
    if (!(c >= 0.0 && c <= 1.0))
        throw std::invalid_argument("probability scale must lie in [0,1]");
    EdgeProbabilities ep;
    ep.p.resize(static_cast<std::size_t>(g.num_arcs()));
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        double pu = c * eta.eta[static_cast<std::size_t>(u)];
        auto base = static_cast<std::size_t>(g.arc_offset(u));
        for (std::size_t j = 0; j < g.neighbors(u).size(); ++j) ep.p[base + j] = pu;
    }
    return ep;
}

} // namespace imax
