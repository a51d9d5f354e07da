#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include <json.hpp>

#include "polyprism/error.hpp"
#include "polyprism/graph.hpp"

using namespace polyprism;

namespace {

Graph random_graph(std::mt19937& rng, std::size_t order, double density) {
    std::bernoulli_distribution coin(density);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < order; ++a)
        for (Vertex b = a + 1; b < order; ++b)
            if (coin(rng)) edges.emplace_back(a, b);
    return Graph(order, edges);
}

std::map<std::size_t, std::size_t> degree_histogram(const Graph& g) {
    std::map<std::size_t, std::size_t> h;
    for (Vertex v = 0; v < g.order(); ++v) ++h[g.degree(v)];
    return h;
}

}  // namespace

TEST_CASE("graph construction rejects loops and duplicates") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidParameter);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidParameter);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidParameter);
    CHECK_THROWS_AS(Graph(2, {{0, 1}}, {"a"}), InvalidParameter);

    const Graph g(4, {{2, 1}, {0, 3}, {1, 0}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(2, 1));
    CHECK_FALSE(g.adjacent(2, 3));
    std::size_t total = 0;
    for (Vertex v = 0; v < g.order(); ++v) total += g.degree(v);
    CHECK(total == 2 * g.size());
}

TEST_CASE("linear polyomino chain sizes and labels") {
    CHECK_THROWS_AS(linear_polyomino(0), InvalidParameter);
    for (std::size_t n = 1; n <= 30; ++n) {
        const Graph b = linear_polyomino(n);
        CHECK(b.order() == 2 * n + 2);
        CHECK(b.size() == 3 * n + 1);
        CHECK(b.is_connected());
    }
    const Graph square = linear_polyomino(1);
    for (Vertex v = 0; v < 4; ++v) CHECK(square.degree(v) == 2);
    CHECK(linear_polyomino(3).order() == 8);
    CHECK(linear_polyomino(3).size() == 10);

    const Graph b2 = linear_polyomino(2);
    CHECK(b2.label(0) == "u1");
    CHECK(b2.label(3) == "v1");
    CHECK(b2.adjacent(0, 3));  // u1 - v1
    CHECK(b2.adjacent(4, 5));  // v2 - v3
}

TEST_CASE("strong prism sizes and degree pattern") {
    CHECK_THROWS_AS(strong_prism_polyomino(0), InvalidParameter);
    for (std::size_t n = 1; n <= 30; ++n) {
        const Graph g = strong_prism_polyomino(n);
        CHECK(g.order() == 4 * n + 4);
        CHECK(g.size() == 14 * n + 6);
        CHECK(g.is_connected());
    }
    const Graph g1 = strong_prism_polyomino(1);
    CHECK(g1.size() == 20);
    CHECK(degree_histogram(g1) == std::map<std::size_t, std::size_t>{{5, 8}});

    const Graph g2 = strong_prism_polyomino(2);
    CHECK(g2.order() == 12);
    CHECK(g2.size() == 34);
    for (std::size_t n = 2; n <= 12; ++n) {
        const auto h = degree_histogram(strong_prism_polyomino(n));
        CHECK(h == std::map<std::size_t, std::size_t>{{5, 8}, {7, 4 * n - 4}});
    }

    CHECK(g2.label(0) == "u1");
    CHECK(g2.label(6) == "u'1");
    CHECK(g2.label(10) == "v'2");
}

TEST_CASE("strong prism matches the generic strong product with K2") {
    const Graph k2 = standard_graph(GraphFamily::complete, 2);
    for (std::size_t n = 1; n <= 12; ++n) {
        const Graph direct = strong_prism_polyomino(n);
        const Graph product = strong_product(linear_polyomino(n), k2);
        CHECK(direct.order() == product.order());
        // id(x, y) = y * |B_n| + x is already the primed/unprimed order
        CHECK(direct.edges() == product.edges());
    }
}

TEST_CASE("strong product identities") {
    const Graph k1 = standard_graph(GraphFamily::complete, 1);
    const Graph c5 = standard_graph(GraphFamily::cycle, 5);
    const Graph same = strong_product(c5, k1);
    CHECK(same.edges() == c5.edges());

    const Graph k2 = standard_graph(GraphFamily::complete, 2);
    const Graph k4 = strong_product(k2, k2);
    CHECK(k4.order() == 4);
    CHECK(k4.size() == 6);

    CHECK_THROWS_AS(strong_product(Graph(0, {}), k2), InvalidParameter);
}

TEST_CASE("strong product degree law on random graphs") {
    std::mt19937 rng(20261018);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> size(1, 6);
        const Graph g = random_graph(rng, size(rng), 0.5);
        const Graph h = random_graph(rng, size(rng), 0.5);
        const Graph p = strong_product(g, h);
        REQUIRE(p.order() == g.order() * h.order());
        for (Vertex y = 0; y < h.order(); ++y) {
            for (Vertex x = 0; x < g.order(); ++x) {
                const std::size_t dg = g.degree(x);
                const std::size_t dh = h.degree(y);
                CHECK(p.degree(y * g.order() + x) == dg * dh + dg + dh);
            }
        }
    }
}

TEST_CASE("standard graphs") {
    CHECK(standard_graph(GraphFamily::path, 3).size() == 2);
    CHECK(standard_graph(GraphFamily::complete, 4).size() == 6);
    const Graph c4 = standard_graph(GraphFamily::cycle, 4);
    CHECK(c4.order() == 4);
    CHECK(c4.size() == 4);
    CHECK_THROWS_AS(standard_graph(GraphFamily::cycle, 2), InvalidParameter);
    CHECK_THROWS_AS(standard_graph(GraphFamily::path, 0), InvalidParameter);

    // C4 relabelled u1 u2 v2 v1 is B_1
    const std::vector<Vertex> to_square{0, 1, 3, 2};
    std::vector<Edge> mapped;
    for (const auto& [a, b] : c4.edges()) mapped.emplace_back(to_square[a], to_square[b]);
    CHECK(Graph(4, mapped).edges() == linear_polyomino(1).edges());

    CHECK_FALSE(Graph(4, {{0, 1}, {2, 3}}).is_connected());
    CHECK(parse_family("prism-polyomino") == GraphFamily::prism_polyomino);
    CHECK_THROWS_AS(parse_family("star"), InvalidParameter);
}

TEST_CASE("prism pairing is the primed twin involution") {
    const auto pairing = prism_pairing(3);
    const Graph g = strong_prism_polyomino(3);
    REQUIRE(pairing.size() == g.order());
    for (Vertex x = 0; x < g.order(); ++x) {
        CHECK(pairing[pairing[x]] == x);
        CHECK(g.adjacent(x, pairing[x]));
    }
    for (const auto& [a, b] : g.edges()) CHECK(g.adjacent(pairing[a], pairing[b]));
}

TEST_CASE("json and dot export") {
    const Graph g = strong_prism_polyomino(2);
    const auto doc = nlohmann::json::parse(to_json(g));
    CHECK(doc["nodes"].size() == 12);
    CHECK(doc["edges"].size() == 34);
    CHECK(doc["nodes"][6]["label"] == "u'1");
    CHECK(doc["edges"][0]["source"] == 0);

    const std::string dot = to_dot(standard_graph(GraphFamily::cycle, 4), "C4");
    CHECK(dot.find("graph C4 {") == 0);
    CHECK(std::count(dot.begin(), dot.end(), '-') == 8);
}
