#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "imax/exact.hpp"
#include "imax/rng.hpp"
#include "oracles.hpp"

using namespace imax;

namespace {

ThresholdAssignment all_ones(const Graph& g) {
    ThresholdAssignment t;
    t.t.assign(static_cast<std::size_t>(g.num_vertices()), 1);
    return t;
}

ThresholdAssignment degree_thresholds(const Graph& g) {
    ThresholdAssignment t;
    t.t.resize(static_cast<std::size_t>(g.num_vertices()));
    for (Vertex u = 0; u < g.num_vertices(); ++u)
        t.t[static_cast<std::size_t>(u)] = std::max<std::int32_t>(1, g.degree(u));
    return t;
}

std::size_t count_named(const IlpModel& m, const std::string& prefix) {
    std::size_t count = 0;
    for (const auto& c : m.constraints)
        if (c.name.rfind(prefix, 0) == 0) ++count;
    return count;
}

// Maximum feasible objective over every 0/1 assignment of the model.
double exhaustive_model_max(const IlpModel& m) {
    const auto vars = static_cast<std::uint32_t>(m.num_vars());
    REQUIRE(vars <= 20);
    double best = -1.0;
    for (std::uint64_t mask = 0; mask < (1ULL << vars); ++mask) {
        bool ok = true;
        for (const auto& c : m.constraints) {
            double lhs = 0.0;
            for (const auto& term : c.terms)
                if ((mask >> term.var) & 1) lhs += term.coef;
            if (lhs > c.rhs + 1e-9) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        double obj = 0.0;
        for (const auto& term : m.objective)
            if ((mask >> term.var) & 1) obj += term.coef;
        best = std::max(best, obj);
    }
    return best;
}

} // namespace

TEST_CASE("brute force optimum") {
    auto p3 = oracles::path(3);
    auto t1 = all_ones(p3);
    auto eta = interest_constant(p3, 1.0);
    auto best = brute_force_opt(p3, LtmModel{&t1}, eta, 1);
    CHECK(best.seeds.ids() == std::vector<Vertex>{0});  // lexicographic tie
    CHECK(best.value == 3.0);

    auto st = oracles::star(4);
    auto ts = degree_thresholds(st);
    auto es = interest_constant(st, 1.0);
    auto center = brute_force_opt(st, LtmModel{&ts}, es, 1);
    CHECK(center.seeds.ids() == std::vector<Vertex>{0});
    CHECK(center.value == 5.0);

    RngStream rng(71);
    auto g = oracles::random_graph(8, 0.3, rng);
    auto eg = oracles::random_eta(g, rng);
    auto tg = oracles::random_thresholds(g, rng);
    auto everything = brute_force_opt(g, LtmModel{&tg}, eg, 8);
    CHECK(everything.seeds.size() == 8);
    CHECK(everything.value == eg.total());

    CHECK_THROWS_WITH_AS(brute_force_opt(g, LtmModel{&tg}, eg, 4, 10),
                         doctest::Contains("exceeds the enumeration cap"),
                         std::runtime_error);
}

TEST_CASE("brute force parallel equals serial") {
    RngStream rng(73);
    for (int trial = 0; trial < 5; ++trial) {
        auto g = oracles::random_graph(12, 0.3, rng);
        auto tg = oracles::random_thresholds(g, rng);
        // constant eta forces heavy ties; the stripes must still agree
        auto ones = interest_constant(g, 1.0);
        auto par = brute_force_opt(g, LtmModel{&tg}, ones, 3);
        auto ser = serial::brute_force_opt(g, LtmModel{&tg}, ones, 3);
        CHECK(par.value == ser.value);
        CHECK(par.seeds.ids() == ser.seeds.ids());
    }

    auto g = oracles::random_graph(10, 0.35, rng);
    auto eg = oracles::random_eta(g, rng);
    auto probs = probs_uniform(g, 0.5);
    std::variant<LtmModel, IcmModel> icm = IcmModel{&probs, 1, 30, 11, false};
    auto par = brute_force_opt(g, icm, eg, 2);
    auto ser = serial::brute_force_opt(g, icm, eg, 2);
    CHECK(par.value == ser.value);
    CHECK(par.seeds.ids() == ser.seeds.ids());
}

TEST_CASE("ilp model shape") {
    auto p3 = oracles::path(3);
    auto t = all_ones(p3);
    auto eta = interest_constant(p3, 1.0);
    auto m = ilp_export(p3, t, eta, 1, 3);

    CHECK(m.num_vars() == 15);
    CHECK(static_cast<std::size_t>(m.num_vars()) == m.var_names.size());
    CHECK(count_named(m, "budget") == 1);
    CHECK(count_named(m, "thr_") == 9);
    CHECK(count_named(m, "mono_") == 9);
    CHECK(count_named(m, "aw_lo_") == 3);
    CHECK(count_named(m, "aw_hi_") == 3);
    CHECK(m.constraints.size() == 25);
    for (const auto& c : m.constraints)
        for (const auto& term : c.terms) {
            CHECK(term.var >= 0);
            CHECK(term.var < m.num_vars());
        }

    // degenerate single vertex
    auto k1 = Graph::from_edges(1, {});
    InterestAssignment e1;
    e1.eta = {0.25};
    auto m1 = ilp_export(k1, all_ones(k1), e1, 1, 1);
    CHECK(m1.num_vars() == 3);
    REQUIRE(m1.objective.size() == 1);
    CHECK(m1.objective[0].coef == 0.25);
    CHECK(m1.var_names[static_cast<std::size_t>(m1.objective[0].var)] == "I_0");

    CHECK_THROWS_AS(ilp_export(p3, t, eta, 1, 0), std::invalid_argument);
}

TEST_CASE("lp rendering is stable and readable") {
    auto p3 = oracles::path(3);
    auto t = all_ones(p3);
    InterestAssignment eta;
    eta.eta = {0.5, 1.0, 0.125};
    auto m = ilp_export(p3, t, eta, 1, 2);
    auto once = render_lp(m);
    auto twice = render_lp(ilp_export(p3, t, eta, 1, 2));
    CHECK(once == twice);

    CHECK(once.rfind("Maximize\n", 0) == 0);
    CHECK(once.find("obj: 0.5 I_0 + I_1 + 0.125 I_2") != std::string::npos);
    CHECK(once.find("budget: A_0_0 + A_1_0 + A_2_0 <= 1") != std::string::npos);
    CHECK(once.find("thr_0_1: A_0_1 - A_0_0 - A_1_0 <= 0") != std::string::npos);
    CHECK(once.find("mono_0_1: A_0_0 - A_0_1 <= 0") != std::string::npos);
    CHECK(once.find("aw_lo_0: I_0 - A_0_0 - A_0_2 - A_1_2 <= 0") != std::string::npos);
    CHECK(once.find("aw_hi_0: A_0_0 + A_0_2 + A_1_2 - 3 I_0 <= 0") != std::string::npos);
    CHECK(once.find("Binaries\n") != std::string::npos);
    CHECK(once.substr(once.size() - 4) == "End\n");

    // original labels flow into variable names
    std::istringstream relabeled("5 9\n9 7");
    auto rg = load_edge_list(relabeled);
    auto rm = ilp_export(rg, all_ones(rg), interest_constant(rg, 1.0), 1, 1);
    auto text = render_lp(rm);
    CHECK(text.find("A_5_0") != std::string::npos);
    CHECK(text.find("I_7") != std::string::npos);
}

TEST_CASE("verify assignment") {
    auto p3 = oracles::path(3);
    auto t = all_ones(p3);
    auto eta = interest_constant(p3, 1.0);
    auto m = ilp_export(p3, t, eta, 1, 3);

    auto ok = verify_assignment(m, p3, t, eta, SeedSet({0}));
    CHECK(ok.feasible);
    CHECK(ok.objective == 3.0);

    auto over_budget = verify_assignment(m, p3, t, eta, SeedSet({0, 2}));
    CHECK_FALSE(over_budget.feasible);

    auto none = verify_assignment(m, p3, t, eta, SeedSet());
    CHECK(none.feasible);
    CHECK(none.objective == 0.0);
}

TEST_CASE("ltm traces satisfy the exported model") {
    RngStream rng(81);
    for (int trial = 0; trial < 25; ++trial) {
        auto n = static_cast<Vertex>(2 + rng.below(5));
        auto g = oracles::random_graph(n, 0.35, rng);
        auto t = oracles::random_thresholds(g, rng);
        auto eta = oracles::random_eta(g, rng);
        auto m = ilp_export(g, t, eta, 2, n);

        std::vector<Vertex> ids(static_cast<std::size_t>(n));
        for (Vertex u = 0; u < n; ++u) ids[static_cast<std::size_t>(u)] = u;
        for (std::size_t a = 0; a <= ids.size(); ++a) {
            for (std::size_t b = a; b <= ids.size(); ++b) {
                SeedSet s;
                if (a < ids.size()) s.insert(ids[a]);
                if (b < ids.size() && b != a) s.insert(ids[b]);
                if (s.size() > 2) continue;
                auto v = verify_assignment(m, g, t, eta, s);
                auto r = ltm_diffuse(g, t, s, eta);
                CHECK(v.feasible);
                CHECK(std::abs(v.objective - r.interest) <= 1e-9);
            }
        }
    }
}

TEST_CASE("model maximum matches brute force on micro graphs") {
    // one spot check here; the acceptance suite sweeps every n <= 3 graph
    auto p3 = oracles::path(3);
    auto t = all_ones(p3);
    RngStream rng(83);
    auto eta = oracles::random_eta(p3, rng);
    auto m = ilp_export(p3, t, eta, 1, 3);
    auto best = brute_force_opt(p3, LtmModel{&t}, eta, 1);
    CHECK(exhaustive_model_max(m) == best.value);
}

TEST_CASE("mcp reduction") {
    McpInstance inst;
    inst.universe = {"a", "b", "c"};
    inst.subsets = {{"a", "b"}, {"b", "c"}};
    inst.k = 1;
    inst.l = 2;
    auto red = mcp_reduce(inst);

    CHECK(red.graph.num_vertices() == 5);
    CHECK(red.graph.num_edges() == 4);
    CHECK(red.k == 1);
    CHECK(red.target == 3);
    CHECK(red.vertex_names ==
          std::vector<std::string>{"S1", "S2", "a", "b", "c"});
    for (Vertex u = 0; u < red.graph.num_vertices(); ++u) {
        CHECK(red.thresholds.t[u] ==
              std::max<std::int32_t>(1, red.graph.degree(u)));
        CHECK(red.eta.eta[u] == 1.0);
    }

    // seeding S1 reaches S1, a, b: exactly k + l vertices
    auto r = ltm_diffuse(red.graph, red.thresholds, SeedSet({0}), red.eta);
    CHECK(r.aware == std::vector<Vertex>{0, 2, 3});
    CHECK(r.interest == 3.0);

    // an empty subset stays isolated with threshold 1
    McpInstance with_empty = inst;
    with_empty.subsets.push_back({});
    auto red2 = mcp_reduce(with_empty);
    CHECK(red2.graph.degree(2) == 0);
    CHECK(red2.thresholds.t[2] == 1);

    // taking every subset always reaches the all-subsets target
    McpInstance take_all = inst;
    take_all.k = 2;
    take_all.l = 3;
    auto red3 = mcp_reduce(take_all);
    auto opt = brute_force_opt(red3.graph, LtmModel{&red3.thresholds}, red3.eta,
                               red3.k);
    CHECK(opt.value >= static_cast<double>(red3.target));

    McpInstance bad = inst;
    bad.k = 5;
    CHECK_THROWS_AS(mcp_reduce(bad), std::invalid_argument);
    bad = inst;
    bad.l = 9;
    CHECK_THROWS_AS(mcp_reduce(bad), std::invalid_argument);
    bad = inst;
    bad.subsets[0] = {"zz"};
    CHECK_THROWS_AS(mcp_reduce(bad), std::invalid_argument);
    bad = inst;
    bad.universe = {"a", "a", "b"};
    CHECK_THROWS_AS(mcp_reduce(bad), std::invalid_argument);
}

TEST_CASE("mcp file parsing") {
    std::istringstream good(
        "# toy instance\n"
        "universe: a b c\n"
        "set: a b\n"
        "set: b c\n"
        "k: 1\n"
        "l: 2\n");
    auto inst = parse_mcp(good);
    CHECK(inst.universe == std::vector<std::string>{"a", "b", "c"});
    CHECK(inst.subsets.size() == 2);
    CHECK(inst.k == 1);
    CHECK(inst.l == 2);

    std::istringstream bad("universe: a\nwhat: 3\n");
    CHECK_THROWS_WITH_AS(parse_mcp(bad), doctest::Contains("line 2"),
                         std::runtime_error);

    std::istringstream incomplete("universe: a\nset: a\nk: 1\n");
    CHECK_THROWS_AS(parse_mcp(incomplete), std::runtime_error);
}
