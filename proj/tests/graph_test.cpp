#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "repdet/graph.hpp"

using namespace repdet;

namespace {

// Pair-label definition of the interaction graph, enumerated directly:
// intra-cloud edges (i,j)-(i,k) and inter-cloud edges (i,j)-(j,i).
std::set<std::pair<std::int64_t, std::int64_t>> expected_selection_edges(std::int64_t n) {
    auto flat = [n](std::int64_t i, std::int64_t j) {  // 1-based pair -> 0-based row
        return (i - 1) * (n - 1) + (j < i ? j - 1 : j - 2);
    };
    std::set<std::pair<std::int64_t, std::int64_t>> edges;
    auto add = [&](std::int64_t a, std::int64_t b) { edges.insert(std::minmax(a, b)); };
    for (std::int64_t i = 1; i <= n; ++i)
        for (std::int64_t j = 1; j <= n; ++j)
            for (std::int64_t k = j + 1; k <= n; ++k)
                if (j != i && k != i) add(flat(i, j), flat(i, k));
    for (std::int64_t i = 1; i <= n; ++i)
        for (std::int64_t j = i + 1; j <= n; ++j) add(flat(i, j), flat(j, i));
    return edges;
}

Graph single_vertex() {
    Graph g;
    g.vertex_count = 1;
    return g;
}

}  // namespace

TEST_CASE("complete_graph basic shapes") {
    Graph k4 = complete_graph(4);
    CHECK(k4.vertex_count == 4);
    CHECK(k4.edges.size() == 6);
    for (auto d : k4.degrees()) CHECK(d == 3);

    Graph k2 = complete_graph(2);
    CHECK(k2.edges == std::vector<std::pair<std::int64_t, std::int64_t>>{{0, 1}});
}

TEST_CASE("complete_graph edge count matches the brute-force pair census") {
    Graph k7 = complete_graph(7);
    std::int64_t pairs = 0;
    for (std::int64_t u = 0; u < 7; ++u)
        for (std::int64_t v = 0; v < 7; ++v)
            if (u < v) ++pairs;
    CHECK(static_cast<std::int64_t>(k7.edges.size()) == pairs);
    CHECK(pairs == 21);
    CHECK(k7.regular_degree() == 6);
}

TEST_CASE("complete_graph rejects n < 2") {
    CHECK_THROWS_AS(complete_graph(1), std::invalid_argument);
    CHECK_THROWS_AS(complete_graph(0), std::invalid_argument);
    CHECK_THROWS_AS(complete_graph(-3), std::invalid_argument);
}

TEST_CASE("canonical rotation maps port labelled j to cloud j's port labelled i") {
    const std::int64_t n = 5;
    Rotation rot = canonical_rotation_complete(n);
    for (std::int64_t i = 1; i <= n; ++i) {
        for (std::int64_t j = 1; j <= n; ++j) {
            if (i == j) continue;
            std::int64_t p = j < i ? j - 1 : j - 2;  // 0-based rank of label j at cloud i
            PortTarget t = rot.at(i - 1, p);
            CHECK(t.cloud == j - 1);
            std::int64_t q = i < j ? i - 1 : i - 2;
            CHECK(t.port == q);
        }
    }
    // (cloud 1, port labelled 2) -> (cloud 2, port labelled 1)
    CHECK(rot.at(0, 0) == PortTarget{1, 0});
}

TEST_CASE("canonical rotation is an involution on all ports") {
    for (std::int64_t n : {2, 3, 5, 9}) {
        Rotation rot = canonical_rotation_complete(n);
        CHECK(rot.is_involution());
        for (std::int64_t c = 0; c < n; ++c)
            for (std::int64_t p = 0; p < n - 1; ++p) {
                PortTarget t = rot.at(c, p);
                CHECK(rot.at(t.cloud, t.port) == PortTarget{c, p});
            }
    }
}

TEST_CASE("replacement product of K4 and K3 reproduces the 12-vertex model graph") {
    Graph g = replacement_product(complete_graph(4), complete_graph(3), canonical_rotation_complete(4));
    CHECK(g.vertex_count == 12);
    CHECK(g.regular_degree() == 3);
    std::set<std::pair<std::int64_t, std::int64_t>> edges(g.edges.begin(), g.edges.end());
    CHECK(edges == expected_selection_edges(4));
}

TEST_CASE("replacement product with single-vertex clouds degenerates to the outer edge") {
    Graph g = replacement_product(complete_graph(2), single_vertex(), canonical_rotation_complete(2));
    CHECK(g.vertex_count == 2);
    CHECK(g.edges == std::vector<std::pair<std::int64_t, std::int64_t>>{{0, 1}});
}

TEST_CASE("replacement product of K5 and K4 degree census") {
    Graph g = replacement_product(complete_graph(5), complete_graph(4), canonical_rotation_complete(5));
    CHECK(g.vertex_count == 20);
    CHECK(g.edges.size() == 40);
    std::vector<std::int64_t> census(20, 0);
    for (const auto& [u, v] : g.edges) {
        ++census[static_cast<std::size_t>(u)];
        ++census[static_cast<std::size_t>(v)];
    }
    for (auto d : census) CHECK(d == 4);
}

TEST_CASE("replacement product rejects malformed inputs") {
    // path on 3 vertices is not regular
    Graph path;
    path.vertex_count = 3;
    path.edges = {{0, 1}, {1, 2}};
    CHECK_THROWS_AS(replacement_product(path, single_vertex(), canonical_rotation_complete(2)),
                    std::invalid_argument);

    // cloud size must equal the outer degree
    CHECK_THROWS_AS(
        replacement_product(complete_graph(4), complete_graph(2), canonical_rotation_complete(4)),
        std::invalid_argument);

    // tampered rotation is no longer an involution
    Rotation bad = canonical_rotation_complete(4);
    bad.targets[0] = PortTarget{2, 2};
    CHECK_THROWS_AS(replacement_product(complete_graph(4), complete_graph(3), bad),
                    std::invalid_argument);

    // an involution whose targets miss a neighbour: clouds 0 and 1 pair up
    // twice while cloud 2 wires to itself
    Rotation skewed;
    skewed.cloud_count = 3;
    skewed.ports_per_cloud = 2;
    skewed.targets = {{1, 0}, {1, 1}, {0, 0}, {0, 1}, {2, 1}, {2, 0}};
    CHECK(skewed.is_involution());
    CHECK_THROWS_AS(replacement_product(complete_graph(3), complete_graph(2), skewed),
                    std::invalid_argument);
}

TEST_CASE("covariance selection graph shapes and labels") {
    Graph g2 = covariance_selection_graph(2);
    CHECK(g2.vertex_count == 2);
    CHECK(g2.edges.size() == 1);
    CHECK(g2.labels == std::vector<std::string>{"(1,2)", "(2,1)"});

    Graph g6 = covariance_selection_graph(6);
    CHECK(g6.vertex_count == 30);
    CHECK(g6.regular_degree() == 5);

    Graph g4 = covariance_selection_graph(4);
    CHECK(g4.labels[0] == "(1,2)");
    CHECK(g4.labels[11] == "(4,3)");

    CHECK_THROWS_AS(covariance_selection_graph(1), std::invalid_argument);
}

TEST_CASE("covariance selection graph equals the pair-label edge enumeration") {
    for (std::int64_t n : {2, 3, 4, 5, 7}) {
        Graph g = covariance_selection_graph(n);
        CHECK(g.vertex_count == n * (n - 1));
        std::set<std::pair<std::int64_t, std::int64_t>> edges(g.edges.begin(), g.edges.end());
        CHECK(edges == expected_selection_edges(n));
    }
}

TEST_CASE("has_edge sees both orientations") {
    Graph g = covariance_selection_graph(4);
    CHECK(g.has_edge(0, 3));
    CHECK(g.has_edge(3, 0));
    CHECK_FALSE(g.has_edge(0, 4));
    CHECK_FALSE(g.has_edge(2, 2));
}
