#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "imax/assign.hpp"
#include "imax/diffusion.hpp"
#include "imax/graph.hpp"
#include "imax/heuristics.hpp"

namespace imax {

struct BruteResult {
    SeedSet seeds;  // lexicographically smallest among ties, ascending ids
    double value = 0.0;
};

inline constexpr std::int64_t kDefaultEnumerationCap = 2'000'000;

// Exhaustive optimum over all k-subsets in lexicographic order (k is capped
// at n). LTM evaluates exactly; ICM averages eval_reps cascades with the
// same replicate seeds for every subset. Ties resolve to the smallest
// subset. Throws std::runtime_error when C(n,k) exceeds `cap`.
// The enumeration is split into fixed rank stripes processed in parallel and
// merged in stripe order, so the result does not depend on thread count.
BruteResult brute_force_opt(const Graph& g,
                            const std::variant<LtmModel, IcmModel>& model,
                            const InterestAssignment& eta, std::int32_t k,
                            std::int64_t cap = kDefaultEnumerationCap);

struct LinearTerm {
    std::int32_t var;
    double coef;
};

// Constraint of the form  sum(terms) <= rhs.
struct LinearConstraint {
    std::string name;
    std::vector<LinearTerm> terms;
    double rhs;
};

// 0/1 program unrolling LTM diffusion over a fixed horizon. Variables are
// A[u][r] (u is a spreader by round r) for r in 0..H and I[u] (u aware at
// the horizon); the objective maximizes sum eta(u) * I[u].
struct IlpModel {
    Vertex n = 0;
    std::int32_t horizon = 0;
    std::int32_t k = 0;
    std::vector<std::string> var_names;
    std::vector<LinearTerm> objective;
    std::vector<LinearConstraint> constraints;

    std::int32_t a_var(Vertex u, std::int32_t r) const {
        return u * (horizon + 1) + r;
    }
    std::int32_t i_var(Vertex u) const { return n * (horizon + 1) + u; }
    std::int32_t num_vars() const { return n * (horizon + 2); }
};

// Constraint families, in emission order:
//   budget            sum_u A[u][0] <= k
//   thr_u_r           t(u)*(A[u][r] - A[u][0]) - sum_{v in N(u)} A[v][r-1] <= 0
//   mono_u_r          A[u][r-1] - A[u][r] <= 0
//   aw_lo_v           I[v] - A[v][0] - sum_{u in N[v]} A[u][H] <= 0
//   aw_hi_v           A[v][0] + sum_{u in N[v]} A[u][H] - (deg(v)+2)*I[v] <= 0
// Variable names use original vertex labels: A_<label>_<r>, I_<label>.
IlpModel ilp_export(const Graph& g, const ThresholdAssignment& t,
                    const InterestAssignment& eta, std::int32_t k,
                    std::int32_t horizon);

// LP-format text rendering (Maximize / Subject To / Binaries / End);
// byte-stable for a fixed model.
std::string render_lp(const IlpModel& m);

struct VerifyResult {
    bool feasible = false;
    double objective = 0.0;
};

// Builds the assignment induced by simulating LTM from `s` (A[u][r] = 1 iff
// u is a spreader by wave r, I[u] = 1 iff u is aware at the fixed point) and
// checks every constraint of `m` with tolerance 1e-9.
VerifyResult verify_assignment(const IlpModel& m, const Graph& g,
                               const ThresholdAssignment& t,
                               const InterestAssignment& eta, const SeedSet& s);

// Decision instance of the Maximum Coverage Problem.
struct McpInstance {
    std::vector<std::string> universe;
    std::vector<std::vector<std::string>> subsets;
    std::int32_t k = 0;
    std::int32_t l = 0;
};

struct McpReduction {
    Graph graph;  // bipartite: subset vertices 0..m-1, element vertices m..m+|U|-1
    ThresholdAssignment thresholds;  // t = deg, clamped to >= 1
    InterestAssignment eta;          // all ones
    std::int32_t k = 0;
    std::int32_t target = 0;  // k + l
    std::vector<std::string> vertex_names;
};

// Bipartite construction: one vertex per subset and per element, an edge
// (S_j, u_i) iff u_i is in S_j. Elements covered by no subset stay isolated
// (their degree-0 threshold clamps to 1).
McpReduction mcp_reduce(const McpInstance& inst);

// Text format: "universe:" line, one "set:" line per subset, "k:" and "l:"
// lines; '#' lines are comments. Labels are whitespace-separated tokens.
McpInstance parse_mcp(std::istream& in);

namespace serial {
BruteResult brute_force_opt(const Graph& g,
                            const std::variant<LtmModel, IcmModel>& model,
                            const InterestAssignment& eta, std::int32_t k,
                            std::int64_t cap = kDefaultEnumerationCap);
} // namespace serial

} // namespace imax
