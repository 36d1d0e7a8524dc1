#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "imax/assign.hpp"
#include "imax/graph.hpp"
#include "imax/rng.hpp"
#include "oracles.hpp"

using namespace imax;

namespace {

Graph from_text(const std::string& text) {
    std::istringstream in(text);
    return load_edge_list(in);
}

} // namespace

TEST_CASE("edge list loading") {
    auto g = from_text("0 1\n1 2");
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 2);
    auto nb = g.neighbors(1);
    REQUIRE(nb.size() == 2);
    CHECK(nb[0] == 0);
    CHECK(nb[1] == 2);

    // reverse duplicate merged, self-loop dropped
    auto h = from_text("0 1\n1 0\n0 0");
    CHECK(h.num_vertices() == 2);
    CHECK(h.num_edges() == 1);

    // first-seen label remap, comments skipped
    auto r = from_text("# c\n5 9\n9 7");
    CHECK(r.num_vertices() == 3);
    CHECK(r.num_edges() == 2);
    CHECK(r.id_of(5) == 0);
    CHECK(r.id_of(9) == 1);
    CHECK(r.id_of(7) == 2);
    CHECK(r.label(0) == 5);
    CHECK(r.id_of(1234) == -1);

    auto p = from_text("% comment\n0 1\n\n  \n1 2");
    CHECK(p.num_edges() == 2);
}

TEST_CASE("edge list parse errors") {
    CHECK_THROWS_WITH_AS(from_text("0 x"), doctest::Contains("line 1"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(from_text("0 1\n1 2 3"), doctest::Contains("line 2"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(from_text("0 -1"), doctest::Contains("line 1"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(from_text(""), doctest::Contains("empty graph"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(from_text("# only comments\n"),
                         doctest::Contains("empty graph"), std::runtime_error);
}

TEST_CASE("structural invariants on random graphs") {
    RngStream rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        auto n = static_cast<Vertex>(2 + rng.below(14));
        auto g = oracles::random_graph(n, 0.3, rng);

        std::int64_t degree_sum = 0;
        for (Vertex u = 0; u < g.num_vertices(); ++u) {
            auto nb = g.neighbors(u);
            degree_sum += g.degree(u);
            CHECK(std::is_sorted(nb.begin(), nb.end()));
            for (Vertex v : nb) {
                CHECK(v != u);
                CHECK(g.has_edge(v, u));
            }
        }
        CHECK(degree_sum == 2 * g.num_edges());
    }
}

TEST_CASE("serialize and reload preserves dense ids") {
    RngStream rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        auto n = static_cast<Vertex>(1 + rng.below(12));
        auto g = oracles::random_graph(n, 0.25, rng);  // isolated vertices likely

        std::ostringstream out;
        g.write_edge_list(out);
        auto h = from_text(out.str());

        REQUIRE(h.num_vertices() == g.num_vertices());
        CHECK(h.num_edges() == g.num_edges());
        for (Vertex u = 0; u < g.num_vertices(); ++u) {
            CHECK(h.label(u) == g.label(u));
            auto a = g.neighbors(u);
            auto b = h.neighbors(u);
            REQUIRE(a.size() == b.size());
            CHECK(std::equal(a.begin(), a.end(), b.begin()));
        }
    }

    // shuffled labels keep their dense ids through the round trip
    auto g = from_text("7 3\n3 9\n100 7\n4 4");
    std::ostringstream out;
    g.write_edge_list(out);
    auto h = from_text(out.str());
    REQUIRE(h.num_vertices() == 5);
    CHECK(h.label(0) == 7);
    CHECK(h.label(1) == 3);
    CHECK(h.label(2) == 9);
    CHECK(h.label(3) == 100);
    CHECK(h.label(4) == 4);  // self-loop-only vertex survives
}

TEST_CASE("interest assignment") {
    auto g = oracles::path(3);
    auto eta = interest_constant(g, 1.0);
    CHECK(eta.eta == std::vector<double>{1.0, 1.0, 1.0});
    CHECK_THROWS_AS(interest_constant(g, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(interest_constant(g, 1.5), std::invalid_argument);

    auto a = interest_random(g, 42);
    auto b = interest_random(g, 42);
    CHECK(a.eta == b.eta);
    CHECK(a.eta != interest_random(g, 43).eta);

    // draws land in (0,1] with mean near 1/2
    auto wide = Graph::from_edges(10000, {});
    auto draws = interest_random(wide, 7);
    double sum = 0.0;
    for (double e : draws.eta) {
        CHECK(e > 0.0);
        CHECK(e <= 1.0);
        sum += e;
    }
    double mean = sum / static_cast<double>(draws.eta.size());
    CHECK(mean > 0.45);
    CHECK(mean < 0.55);
}

TEST_CASE("interest from file") {
    auto g = from_text("5 9\n9 7");
    std::istringstream good("5 0.5\n9 1.0\n7 0.25\n");
    auto eta = interest_from_stream(g, good);
    CHECK(eta.eta == std::vector<double>{0.5, 1.0, 0.25});

    std::istringstream missing("5 0.5\n9 1.0\n");
    CHECK_THROWS_WITH_AS(interest_from_stream(g, missing),
                         doctest::Contains("missing vertex label 7"),
                         std::runtime_error);

    std::istringstream out_of_range("5 0.5\n9 1.5\n7 0.25\n");
    CHECK_THROWS_WITH_AS(interest_from_stream(g, out_of_range),
                         doctest::Contains("out of (0,1]"), std::runtime_error);

    std::istringstream unknown("5 0.5\n9 1.0\n7 0.25\n8 0.5\n");
    CHECK_THROWS_WITH_AS(interest_from_stream(g, unknown),
                         doctest::Contains("unknown vertex label"),
                         std::runtime_error);
}

TEST_CASE("threshold mechanisms") {
    auto p3 = oracles::path(3);
    auto t = thresholds_fixed_ratio(p3, 0.5);
    CHECK(t.t == std::vector<std::int32_t>{1, 1, 1});

    // deg(0) = 4 in a 4-leaf star
    auto st = oracles::star(4);
    InterestAssignment eta;
    eta.eta = {0.25, 1.0, 1.0, 1.0, 1.0};
    auto ti = thresholds_interest_based(st, eta);
    CHECK(ti.t[0] == 3);  // ceil(4 * 0.75)
    CHECK(ti.t[1] == 1);  // clamp: ceil(1 * 0) = 0 -> 1

    // isolated vertices get t = 1
    auto lone = Graph::from_edges(2, {});
    auto tl = thresholds_fixed_ratio(lone, 0.5);
    CHECK(tl.t == std::vector<std::int32_t>{1, 1});

    CHECK_THROWS_AS(thresholds_fixed_ratio(p3, 0.0), std::invalid_argument);

    // 1 <= t <= max(1, deg) for any rho <= 1
    RngStream rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = oracles::random_graph(static_cast<Vertex>(2 + rng.below(10)), 0.4, rng);
        double rho = rng.u01_open_closed();
        auto tt = thresholds_fixed_ratio(g, rho);
        for (Vertex u = 0; u < g.num_vertices(); ++u) {
            CHECK(tt.t[u] >= 1);
            CHECK(tt.t[u] <= std::max<std::int32_t>(1, g.degree(u)));
        }
    }
}

TEST_CASE("edge probabilities") {
    auto p3 = oracles::path(3);
    auto uni = probs_uniform(p3, 0.5);
    for (double p : uni.p) CHECK(p == 0.5);

    InterestAssignment custom;
    custom.eta = {0.8, 0.5, 0.5};
    auto scaled = probs_interest_scaled(p3, 0.5, custom);
    for (std::size_t j = 0; j < p3.neighbors(0).size(); ++j)
        CHECK(scaled.arc(p3, 0, j) == 0.5 * 0.8);

    // eta == 1 collapses to the uniform rule, and values are exact per arc
    RngStream rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = oracles::random_graph(static_cast<Vertex>(2 + rng.below(10)), 0.4, rng);
        auto ones = interest_constant(g, 1.0);
        double c = rng.u01();
        CHECK(probs_interest_scaled(g, c, ones).p == probs_uniform(g, c).p);

        auto re = oracles::random_eta(g, rng);
        auto ps = probs_interest_scaled(g, c, re);
        for (Vertex u = 0; u < g.num_vertices(); ++u)
            for (std::size_t j = 0; j < g.neighbors(u).size(); ++j)
                CHECK(ps.arc(g, u, j) == c * re.eta[static_cast<std::size_t>(u)]);
    }
}

TEST_CASE("graph statistics") {
    auto s = graph_stats(oracles::complete(3));
    CHECK(s.nodes == 3);
    CHECK(s.edges == 3);
    CHECK(s.density == 1.0);
    CHECK(s.avg_degree == 2.0);
    CHECK(s.avg_clustering == 1.0);

    auto p3 = graph_stats(oracles::path(3));
    CHECK(p3.density == doctest::Approx(2.0 / 3.0));
    CHECK(p3.avg_degree == doctest::Approx(4.0 / 3.0));
    CHECK(p3.avg_clustering == 0.0);

    auto karate = load_edge_list_file(std::string(TEST_DATA_DIR) + "/karate.txt");
    auto ks = graph_stats(karate);
    CHECK(ks.nodes == 34);
    CHECK(ks.edges == 78);
    CHECK(ks.density == doctest::Approx(0.139).epsilon(0.005));
    CHECK(ks.avg_clustering == doctest::Approx(0.571).epsilon(0.005));

    // bounds + serial/parallel agreement
    RngStream rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = oracles::random_graph(static_cast<Vertex>(1 + rng.below(30)), 0.2, rng);
        auto st = graph_stats(g);
        CHECK(st.density >= 0.0);
        CHECK(st.density <= 1.0);
        CHECK(st.avg_degree ==
              2.0 * static_cast<double>(st.edges) / static_cast<double>(st.nodes));
        CHECK(st.avg_clustering == serial::avg_clustering(g));
    }
}
