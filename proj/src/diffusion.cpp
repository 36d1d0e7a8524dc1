#include "imax/diffusion.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <stdexcept>

#include "imax/rng.hpp"

namespace imax {

SeedSet::SeedSet(std::vector<Vertex> ids) {
    for (Vertex v : ids) insert(v);
}

bool SeedSet::insert(Vertex v) {
    if (contains(v)) return false;
    ids_.push_back(v);
    return true;
}

bool SeedSet::contains(Vertex v) const {
    return std::find(ids_.begin(), ids_.end(), v) != ids_.end();
}

std::vector<Vertex> SeedSet::sorted() const {
    std::vector<Vertex> out = ids_;
    std::sort(out.begin(), out.end());
    return out;
}

double interest_sum(const std::vector<Vertex>& set, const InterestAssignment& eta) {
    double s = 0.0;
    for (Vertex u : set) s += eta.eta[static_cast<std::size_t>(u)];
    return s;
}

namespace {

void check_seeds(const Graph& g, const SeedSet& s) {
    for (Vertex v : s.ids()) {
        if (v < 0 || v >= g.num_vertices())
            throw std::out_of_range("seed id out of range: " + std::to_string(v));
    }
}

std::vector<Vertex> collect_sorted(const std::vector<std::int32_t>& wave) {
    std::vector<Vertex> out;
    for (std::size_t u = 0; u < wave.size(); ++u) {
        if (wave[u] >= 0) out.push_back(static_cast<Vertex>(u));
    }
    return out;
}

} // namespace

DiffusionResult ltm_diffuse(const Graph& g, const ThresholdAssignment& t,
                            const SeedSet& s, const InterestAssignment& eta) {
    check_seeds(g, s);
    const auto n = static_cast<std::size_t>(g.num_vertices());
    DiffusionResult r;
    r.wave.assign(n, -1);

    std::vector<std::int32_t> spreader_neighbors(n, 0);
    std::vector<char> aware_flag(n, 0);
    std::vector<Vertex> frontier;
    for (Vertex v : s.ids()) {
        if (r.wave[static_cast<std::size_t>(v)] < 0) {
            r.wave[static_cast<std::size_t>(v)] = 0;
            frontier.push_back(v);
        }
    }

    std::int32_t round = 0;
    std::vector<Vertex> next;
    while (!frontier.empty()) {
        for (Vertex u : frontier) {
            aware_flag[static_cast<std::size_t>(u)] = 1;
            for (Vertex w : g.neighbors(u)) {
                aware_flag[static_cast<std::size_t>(w)] = 1;
                if (r.wave[static_cast<std::size_t>(w)] >= 0) continue;
                if (++spreader_neighbors[static_cast<std::size_t>(w)] >=
                    t.t[static_cast<std::size_t>(w)]) {
                    r.wave[static_cast<std::size_t>(w)] = round + 1;
                    next.push_back(w);
                }
            }
        }
        frontier.swap(next);
        next.clear();
        if (!frontier.empty()) ++round;
    }

    r.rounds = round;
    r.spreaders = collect_sorted(r.wave);
    for (std::size_t u = 0; u < n; ++u) {
        if (aware_flag[u]) r.aware.push_back(static_cast<Vertex>(u));
    }
    r.interest = interest_sum(r.aware, eta);
    return r;
}

DiffusionResult icm_diffuse(const Graph& g, const EdgeProbabilities& probs,
                            const SeedSet& s, const InterestAssignment& eta,
                            std::uint64_t seed, bool aware_closure) {
    check_seeds(g, s);
    const auto n = static_cast<std::size_t>(g.num_vertices());
    DiffusionResult r;
    r.wave.assign(n, -1);

    RngStream rng(seed);
    std::vector<Vertex> frontier;
    for (Vertex v : s.ids()) {
        if (r.wave[static_cast<std::size_t>(v)] < 0) {
            r.wave[static_cast<std::size_t>(v)] = 0;
            frontier.push_back(v);
        }
    }
    std::sort(frontier.begin(), frontier.end());

    std::int32_t round = 0;
    std::vector<Vertex> next;
    while (!frontier.empty()) {
        for (Vertex u : frontier) {
            auto nb = g.neighbors(u);
            for (std::size_t j = 0; j < nb.size(); ++j) {
                Vertex v = nb[j];
                if (r.wave[static_cast<std::size_t>(v)] >= 0) continue;
                if (rng.u01() < probs.arc(g, u, j)) {
                    r.wave[static_cast<std::size_t>(v)] = round + 1;
                    next.push_back(v);
                }
            }
        }
        // New activations are discovered in source order, which may not be
        // ascending; the next wave must visit sources ascending.
        std::sort(next.begin(), next.end());
        frontier.swap(next);
        next.clear();
        if (!frontier.empty()) ++round;
    }

    r.rounds = round;
    r.spreaders = collect_sorted(r.wave);
    if (aware_closure) {
        std::vector<char> aware_flag(n, 0);
        for (Vertex u : r.spreaders) {
            aware_flag[static_cast<std::size_t>(u)] = 1;
            for (Vertex w : g.neighbors(u)) aware_flag[static_cast<std::size_t>(w)] = 1;
        }
        for (std::size_t u = 0; u < n; ++u) {
            if (aware_flag[u]) r.aware.push_back(static_cast<Vertex>(u));
        }
    } else {
        r.aware = r.spreaders;
    }
    r.interest = interest_sum(r.aware, eta);
    return r;
}

namespace {

IcmEstimate reduce_replicates(const std::vector<double>& interest,
                              const std::vector<double>& aware_counts) {
    IcmEstimate e;
    const auto reps = static_cast<std::int64_t>(interest.size());
    double sum = 0.0, aware_sum = 0.0;
    for (std::int64_t i = 0; i < reps; ++i) {
        sum += interest[static_cast<std::size_t>(i)];
        aware_sum += aware_counts[static_cast<std::size_t>(i)];
    }
    e.mean = sum / static_cast<double>(reps);
    e.mean_aware = aware_sum / static_cast<double>(reps);
    if (reps > 1) {
        double ss = 0.0;
        for (std::int64_t i = 0; i < reps; ++i) {
            double d = interest[static_cast<std::size_t>(i)] - e.mean;
            ss += d * d;
        }
        e.stddev = std::sqrt(ss / static_cast<double>(reps - 1));
    }
    return e;
}

} // namespace

IcmEstimate icm_estimate(const Graph& g, const EdgeProbabilities& probs,
                         const SeedSet& s, const InterestAssignment& eta,
                         std::int64_t reps, std::uint64_t master_seed,
                         bool aware_closure) {
    if (reps < 1) throw std::invalid_argument("icm_estimate: reps must be >= 1");
    std::vector<double> interest(static_cast<std::size_t>(reps));
    std::vector<double> aware_counts(static_cast<std::size_t>(reps));
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < reps; ++i) {
        auto r = icm_diffuse(g, probs, s, eta,
                             derive_seed(master_seed, kIcmReplicateTag,
                                         static_cast<std::uint64_t>(i)),
                             aware_closure);
        interest[static_cast<std::size_t>(i)] = r.interest;
        aware_counts[static_cast<std::size_t>(i)] = static_cast<double>(r.aware.size());
    }
    return reduce_replicates(interest, aware_counts);
}

namespace serial {

IcmEstimate icm_estimate(const Graph& g, const EdgeProbabilities& probs,
                         const SeedSet& s, const InterestAssignment& eta,
                         std::int64_t reps, std::uint64_t master_seed,
                         bool aware_closure) {
    if (reps < 1) throw std::invalid_argument("icm_estimate: reps must be >= 1");
    std::vector<double> interest(static_cast<std::size_t>(reps));
    std::vector<double> aware_counts(static_cast<std::size_t>(reps));
    for (std::int64_t i = 0; i < reps; ++i) {
        auto r = icm_diffuse(g, probs, s, eta,
                             derive_seed(master_seed, kIcmReplicateTag,
                                         static_cast<std::uint64_t>(i)),
                             aware_closure);
        interest[static_cast<std::size_t>(i)] = r.interest;
        aware_counts[static_cast<std::size_t>(i)] = static_cast<double>(r.aware.size());
    }
    return reduce_replicates(interest, aware_counts);
}

} // namespace serial

namespace {

void append_double(std::string& out, double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, res.ptr);
}

void append_label_array(std::string& out, const std::vector<Vertex>& ids,
                        const Graph& g) {
    out += '[';
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(g.label(ids[i]));
    }
    out += ']';
}

} // namespace

std::string trace_json(const DiffusionResult& r, const Graph& g,
                       const SeedSet& seeds, const std::string& spreader_key) {
    std::string out = "{\"seeds\":";
    append_label_array(out, seeds.ids(), g);
    out += ",\"aware\":";
    append_label_array(out, r.aware, g);
    out += ",\"" + spreader_key + "\":";
    append_label_array(out, r.spreaders, g);
    out += ",\"rounds\":" + std::to_string(r.rounds);
    out += ",\"interest\":";
    append_double(out, r.interest);
    out += '}';
    return out;
}

} // namespace imax
