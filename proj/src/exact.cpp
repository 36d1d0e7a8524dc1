#include "imax/exact.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "imax/rng.hpp"

namespace imax {

namespace {

// C(n, k) clamped to int64 max.
std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned __int128>(n - k + i) /
              static_cast<unsigned __int128>(i);
        if (acc > static_cast<unsigned __int128>(
                      std::numeric_limits<std::int64_t>::max()))
            return std::numeric_limits<std::int64_t>::max();
    }
    return static_cast<std::int64_t>(acc);
}

// Lexicographic unranking over k-subsets of {0..n-1}.
std::vector<Vertex> unrank_combination(Vertex n, std::int32_t k, std::int64_t rank) {
    std::vector<Vertex> combo(static_cast<std::size_t>(k));
    Vertex next = 0;
    for (std::int32_t i = 0; i < k; ++i) {
        for (Vertex v = next;; ++v) {
            std::int64_t block = binomial(n - 1 - v, k - 1 - i);
            if (rank < block) {
                combo[static_cast<std::size_t>(i)] = v;
                next = v + 1;
                break;
            }
            rank -= block;
        }
    }
    return combo;
}

bool next_combination(std::vector<Vertex>& combo, Vertex n) {
    const auto k = static_cast<std::int32_t>(combo.size());
    for (std::int32_t i = k - 1; i >= 0; --i) {
        if (combo[static_cast<std::size_t>(i)] < n - k + i) {
            ++combo[static_cast<std::size_t>(i)];
            for (std::int32_t j = i + 1; j < k; ++j)
                combo[static_cast<std::size_t>(j)] =
                    combo[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

double evaluate_subset(const Graph& g, const std::variant<LtmModel, IcmModel>& model,
                       const InterestAssignment& eta, const std::vector<Vertex>& combo) {
    SeedSet s(combo);
    if (const auto* ltm = std::get_if<LtmModel>(&model))
        return ltm_diffuse(g, *ltm->thresholds, s, eta).interest;
    const auto& icm = std::get<IcmModel>(model);
    return serial::icm_estimate(g, *icm.probs, s, eta, icm.eval_reps,
                                icm.master_seed, icm.aware_closure)
        .mean;
}

BruteResult brute_impl(const Graph& g, const std::variant<LtmModel, IcmModel>& model,
                       const InterestAssignment& eta, std::int32_t k,
                       std::int64_t cap, bool parallel) {
    const Vertex n = g.num_vertices();
    k = std::min<std::int32_t>(k, n);
    if (k < 0) throw std::invalid_argument("brute_force_opt: negative k");
    const std::int64_t total = binomial(n, k);
    if (total > cap)
        throw std::runtime_error(
            "brute_force_opt: C(n,k) = " + std::to_string(total) +
            " exceeds the enumeration cap " + std::to_string(cap) +
            "; reduce n or k (or raise the cap)");

    // Fixed stripe count; the merge walks stripes in rank order, so the
    // winner is the lexicographically smallest maximizer for any thread count.
    constexpr std::int64_t kStripes = 64;
    const std::int64_t stripes = std::min<std::int64_t>(kStripes, total);
    std::vector<double> best_value(static_cast<std::size_t>(stripes),
                                   -std::numeric_limits<double>::infinity());
    std::vector<std::vector<Vertex>> best_combo(static_cast<std::size_t>(stripes));

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t sidx = 0; sidx < stripes; ++sidx) {
        const std::int64_t lo = total * sidx / stripes;
        const std::int64_t hi = total * (sidx + 1) / stripes;
        if (lo >= hi) continue;
        auto combo = unrank_combination(n, k, lo);
        for (std::int64_t rank = lo; rank < hi; ++rank) {
            double value = evaluate_subset(g, model, eta, combo);
            if (value > best_value[static_cast<std::size_t>(sidx)]) {
                best_value[static_cast<std::size_t>(sidx)] = value;
                best_combo[static_cast<std::size_t>(sidx)] = combo;
            }
            if (rank + 1 < hi) next_combination(combo, n);
        }
    }

    BruteResult out;
    out.value = -std::numeric_limits<double>::infinity();
    for (std::int64_t sidx = 0; sidx < stripes; ++sidx) {
        if (best_value[static_cast<std::size_t>(sidx)] > out.value) {
            out.value = best_value[static_cast<std::size_t>(sidx)];
            out.seeds = SeedSet(best_combo[static_cast<std::size_t>(sidx)]);
        }
    }
    return out;
}

} // namespace

BruteResult brute_force_opt(const Graph& g,
                            const std::variant<LtmModel, IcmModel>& model,
                            const InterestAssignment& eta, std::int32_t k,
                            std::int64_t cap) {
    return brute_impl(g, model, eta, k, cap, true);
}

namespace serial {
BruteResult brute_force_opt(const Graph& g,
                            const std::variant<LtmModel, IcmModel>& model,
                            const InterestAssignment& eta, std::int32_t k,
                            std::int64_t cap) {
    return brute_impl(g, model, eta, k, cap, false);
}
} // namespace serial

IlpModel ilp_export(const Graph& g, const ThresholdAssignment& t,
                    const InterestAssignment& eta, std::int32_t k,
                    std::int32_t horizon) {
    if (horizon < 1) throw std::invalid_argument("ilp_export: horizon must be >= 1");
    const Vertex n = g.num_vertices();
    IlpModel m;
    m.n = n;
    m.horizon = horizon;
    m.k = k;

    m.var_names.resize(static_cast<std::size_t>(m.num_vars()));
    for (Vertex u = 0; u < n; ++u) {
        for (std::int32_t r = 0; r <= horizon; ++r)
            m.var_names[static_cast<std::size_t>(m.a_var(u, r))] =
                "A_" + std::to_string(g.label(u)) + "_" + std::to_string(r);
        m.var_names[static_cast<std::size_t>(m.i_var(u))] =
            "I_" + std::to_string(g.label(u));
    }

    for (Vertex u = 0; u < n; ++u)
        m.objective.push_back({m.i_var(u), eta.eta[static_cast<std::size_t>(u)]});

    LinearConstraint budget;
    budget.name = "budget";
    for (Vertex u = 0; u < n; ++u) budget.terms.push_back({m.a_var(u, 0), 1.0});
    budget.rhs = static_cast<double>(k);
    m.constraints.push_back(std::move(budget));

    for (Vertex u = 0; u < n; ++u) {
        const auto tu = static_cast<double>(t.t[static_cast<std::size_t>(u)]);
        for (std::int32_t r = 1; r <= horizon; ++r) {
            LinearConstraint c;
            c.name = "thr_" + std::to_string(g.label(u)) + "_" + std::to_string(r);
            c.terms.push_back({m.a_var(u, r), tu});
            c.terms.push_back({m.a_var(u, 0), -tu});
            for (Vertex v : g.neighbors(u)) c.terms.push_back({m.a_var(v, r - 1), -1.0});
            c.rhs = 0.0;
            m.constraints.push_back(std::move(c));
        }
    }

    for (Vertex u = 0; u < n; ++u) {
        for (std::int32_t r = 1; r <= horizon; ++r) {
            LinearConstraint c;
            c.name = "mono_" + std::to_string(g.label(u)) + "_" + std::to_string(r);
            c.terms.push_back({m.a_var(u, r - 1), 1.0});
            c.terms.push_back({m.a_var(u, r), -1.0});
            c.rhs = 0.0;
            m.constraints.push_back(std::move(c));
        }
    }

    for (Vertex v = 0; v < n; ++v) {
        LinearConstraint lo;
        lo.name = "aw_lo_" + std::to_string(g.label(v));
        lo.terms.push_back({m.i_var(v), 1.0});
        lo.terms.push_back({m.a_var(v, 0), -1.0});
        lo.terms.push_back({m.a_var(v, horizon), -1.0});
        for (Vertex u : g.neighbors(v)) lo.terms.push_back({m.a_var(u, horizon), -1.0});
        lo.rhs = 0.0;
        m.constraints.push_back(std::move(lo));

        LinearConstraint hi;
        hi.name = "aw_hi_" + std::to_string(g.label(v));
        hi.terms.push_back({m.a_var(v, 0), 1.0});
        hi.terms.push_back({m.a_var(v, horizon), 1.0});
        for (Vertex u : g.neighbors(v)) hi.terms.push_back({m.a_var(u, horizon), 1.0});
        hi.terms.push_back({m.i_var(v), -static_cast<double>(g.degree(v) + 2)});
        hi.rhs = 0.0;
        m.constraints.push_back(std::move(hi));
    }
    return m;
}

namespace {

std::string format_coef(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void append_terms(std::string& out, const std::vector<LinearTerm>& terms,
                  const std::vector<std::string>& names) {
    std::size_t line_len = out.size() - out.rfind('\n') - 1;
    bool first = true;
    for (const auto& term : terms) {
        std::string piece;
        double mag = std::abs(term.coef);
        if (first) {
            piece = term.coef < 0 ? "-" : "";
        } else {
            piece = term.coef < 0 ? " - " : " + ";
        }
        if (mag != 1.0) piece += format_coef(mag) + " ";
        piece += names[static_cast<std::size_t>(term.var)];
        if (line_len + piece.size() > 200) {
            out += "\n   ";
            line_len = 3;
            if (!first && piece.front() == ' ') piece.erase(0, 1);
        }
        out += piece;
        line_len += piece.size();
        first = false;
    }
}

} // namespace

std::string render_lp(const IlpModel& m) {
    std::string out = "Maximize\n obj: ";
    append_terms(out, m.objective, m.var_names);
    out += "\nSubject To\n";
    for (const auto& c : m.constraints) {
        out += " " + c.name + ": ";
        append_terms(out, c.terms, m.var_names);
        out += " <= " + format_coef(c.rhs) + "\n";
    }
    out += "Binaries\n";
    std::size_t line_len = 0;
    for (std::int32_t v = 0; v < m.num_vars(); ++v) {
        const auto& name = m.var_names[static_cast<std::size_t>(v)];
        if (line_len + name.size() + 1 > 200) {
            out += "\n";
            line_len = 0;
        }
        out += " " + name;
        line_len += name.size() + 1;
    }
    out += "\nEnd\n";
    return out;
}

VerifyResult verify_assignment(const IlpModel& m, const Graph& g,
                               const ThresholdAssignment& t,
                               const InterestAssignment& eta, const SeedSet& s) {
    auto r = ltm_diffuse(g, t, s, eta);

    std::vector<double> x(static_cast<std::size_t>(m.num_vars()), 0.0);
    for (Vertex u = 0; u < m.n; ++u) {
        std::int32_t wave = r.wave[static_cast<std::size_t>(u)];
        if (wave >= 0 && wave <= m.horizon) {
            for (std::int32_t q = wave; q <= m.horizon; ++q)
                x[static_cast<std::size_t>(m.a_var(u, q))] = 1.0;
        }
    }
    for (Vertex u : r.aware) x[static_cast<std::size_t>(m.i_var(u))] = 1.0;

    VerifyResult out;
    out.feasible = true;
    for (const auto& c : m.constraints) {
        double lhs = 0.0;
        for (const auto& term : c.terms)
            lhs += term.coef * x[static_cast<std::size_t>(term.var)];
        if (lhs > c.rhs + 1e-9) {
            out.feasible = false;
            break;
        }
    }
    for (const auto& term : m.objective)
        out.objective += term.coef * x[static_cast<std::size_t>(term.var)];
    return out;
}

McpReduction mcp_reduce(const McpInstance& inst) {
    const auto m = static_cast<Vertex>(inst.subsets.size());
    const auto nu = static_cast<Vertex>(inst.universe.size());
    if (inst.k < 1 || inst.k > m)
        throw std::invalid_argument("mcp_reduce: k must lie in [1, #subsets]");
    if (inst.l < 1 || inst.l > nu)
        throw std::invalid_argument("mcp_reduce: l must lie in [1, |universe|]");

    std::unordered_map<std::string, Vertex> element_id;
    for (Vertex i = 0; i < nu; ++i) {
        if (!element_id.emplace(inst.universe[static_cast<std::size_t>(i)], m + i).second)
            throw std::invalid_argument("mcp_reduce: duplicate universe element");
    }

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex j = 0; j < m; ++j) {
        for (const auto& label : inst.subsets[static_cast<std::size_t>(j)]) {
            auto it = element_id.find(label);
            if (it == element_id.end())
                throw std::invalid_argument("mcp_reduce: subset element '" + label +
                                            "' not in universe");
            edges.emplace_back(j, it->second);
        }
    }

    McpReduction red;
    red.graph = Graph::from_edges(m + nu, edges);
    red.thresholds.t.resize(static_cast<std::size_t>(m + nu));
    for (Vertex u = 0; u < m + nu; ++u)
        red.thresholds.t[static_cast<std::size_t>(u)] =
            std::max<std::int32_t>(1, red.graph.degree(u));
    red.eta.eta.assign(static_cast<std::size_t>(m + nu), 1.0);
    red.k = inst.k;
    red.target = inst.k + inst.l;
    red.vertex_names.reserve(static_cast<std::size_t>(m + nu));
    for (Vertex j = 0; j < m; ++j) red.vertex_names.push_back("S" + std::to_string(j + 1));
    for (Vertex i = 0; i < nu; ++i)
        red.vertex_names.push_back(inst.universe[static_cast<std::size_t>(i)]);
    return red;
}

McpInstance parse_mcp(std::istream& in) {
    McpInstance inst;
    bool saw_universe = false, saw_k = false, saw_l = false;
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string head;
        row >> head;
        if (head.empty()) continue;
        if (head == "universe:") {
            std::string tok;
            while (row >> tok) inst.universe.push_back(tok);
            saw_universe = true;
        } else if (head == "set:") {
            std::vector<std::string> subset;
            std::string tok;
            while (row >> tok) subset.push_back(tok);
            std::sort(subset.begin(), subset.end());
            subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
            inst.subsets.push_back(std::move(subset));
        } else if (head == "k:") {
            if (!(row >> inst.k)) head.clear();
            saw_k = true;
        } else if (head == "l:") {
            if (!(row >> inst.l)) head.clear();
            saw_l = true;
        } else {
            head.clear();
        }
        if (head.empty())
            throw std::runtime_error("mcp file parse error at line " +
                                     std::to_string(line_no));
    }
    if (!saw_universe || !saw_k || !saw_l || inst.subsets.empty())
        throw std::runtime_error(
            "mcp file must provide universe:, at least one set:, k: and l:");
    return inst;
}

} // namespace imax
