#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "graph.hpp"

using namespace booktri;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (double(rng() >> 11) * 0x1.0p-53 < p) g.set_edge(u, v, true);
    return g;
}

Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.set_edge(v, (v + 1) % n, true);
    return g;
}

Graph relabeled(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) h.set_edge(perm[size_t(u)], perm[size_t(v)], true);
    return h;
}

}  // namespace

TEST_CASE("edges are symmetric, loop-free and removable") {
    Graph g(5);
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 0);
    g.set_edge(1, 3, true);
    CHECK(g.has_edge(1, 3));
    CHECK(g.has_edge(3, 1));
    CHECK(g.edge_count() == 1);
    CHECK(g.degree(1) == 1);
    CHECK(g.degree(3) == 1);
    CHECK(g.neighbors(1) == std::vector<int>{3});
    g.set_edge(1, 3, false);
    CHECK(g.edge_count() == 0);
    CHECK_THROWS_AS(g.set_edge(2, 2, true), std::invalid_argument);
    CHECK_THROWS_AS(g.has_edge(0, 5), std::out_of_range);
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
    CHECK_THROWS_AS(Graph(257), std::invalid_argument);
}

TEST_CASE("prism pattern has the nine fixed edges") {
    const PatternGraph& p = prism_pattern();
    CHECK(p.k == 6);
    CHECK(p.edge_count() == 9);
    int expected[9][2] = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4},
                          {2, 5}, {3, 4}, {4, 5}, {3, 5}};
    for (auto& e : expected) CHECK(p.has_edge(e[0], e[1]));
    CHECK_FALSE(p.has_edge(0, 4));
    CHECK_FALSE(p.has_edge(0, 5));
    CHECK_FALSE(p.has_edge(1, 3));
    CHECK_FALSE(p.has_edge(1, 5));
    CHECK_FALSE(p.has_edge(2, 3));
    CHECK_FALSE(p.has_edge(2, 4));
}

TEST_CASE("the twelve prism automorphisms are distinct adjacency-preserving maps") {
    const auto& autos = prism_automorphisms();
    const PatternGraph& p = prism_pattern();
    CHECK(autos.size() == 12);
    std::set<std::array<int, 6>> seen(autos.begin(), autos.end());
    CHECK(seen.size() == 12);
    for (const auto& perm : autos) {
        std::set<int> image(perm.begin(), perm.end());
        CHECK(image.size() == 6);
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                CHECK(p.has_edge(i, j) == p.has_edge(perm[size_t(i)], perm[size_t(j)]));
    }
    CHECK(seen.count({0, 1, 2, 3, 4, 5}) == 1);
}

TEST_CASE("complete bipartite and empty constructions") {
    CHECK(empty_graph(7).edge_count() == 0);
    Graph k33 = complete_bipartite(3, 3);
    CHECK(k33.edge_count() == 9);
    for (int v = 0; v < 6; ++v) CHECK(k33.degree(v) == 3);
    Graph star = complete_bipartite(1, 9);
    CHECK(star.degree(0) == 9);
    CHECK(star.edge_count() == 9);
}

TEST_CASE("prism blow-up with unit sizes is the prism itself") {
    Graph g = blowup(prism_pattern(), {1, 1, 1, 1, 1, 1});
    CHECK(g.order() == 6);
    CHECK(g.edge_count() == 9);
    const PatternGraph& p = prism_pattern();
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) CHECK(g.has_edge(i, j) == p.has_edge(i, j));
}

TEST_CASE("blow-up parts are independent sets joined completely across pattern edges") {
    std::vector<int64_t> sizes = {2, 3, 0, 1, 2, 4};
    Graph g = blowup(prism_pattern(), sizes);
    CHECK(g.order() == 12);
    std::vector<int> part_of;
    for (int i = 0; i < 6; ++i)
        for (int64_t c = 0; c < sizes[size_t(i)]; ++c) part_of.push_back(i);
    for (int u = 0; u < 12; ++u)
        for (int v = u + 1; v < 12; ++v)
            CHECK(g.has_edge(u, v) ==
                  prism_pattern().has_edge(part_of[size_t(u)], part_of[size_t(v)]));
    CHECK_THROWS_AS(blowup(prism_pattern(), {0, 0, 0, 0, 0, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(blowup(prism_pattern(), {-1, 1, 1, 1, 1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(blowup(prism_pattern(), {300, 1, 1, 1, 1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(blowup(prism_pattern(), {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("extremal blow-up sizes and degrees") {
    Graph g = construct_s_bn(12, 2);
    CHECK(g.order() == 12);
    CHECK(g.edge_count() == 36);
    for (int v = 0; v < 12; ++v) CHECK(g.degree(v) == 6);

    Graph h = construct_s_bn(13, 3);
    CHECK(h.order() == 13);
    CHECK(h.edge_count() == 42);  // floor(169/4)

    CHECK_THROWS_AS(construct_s_bn(13, 2), std::invalid_argument);
    CHECK_THROWS_AS(construct_s_bn(12, 4), std::invalid_argument);
}

TEST_CASE("graph6 round trip across the short and long forms") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + int(rng() % 90);
        Graph g = random_graph(rng, n, 0.4);
        Graph back = parse_graph6(write_graph6(g));
        CHECK(back == g);
    }
}

TEST_CASE("graph6 parser is strict") {
    CHECK(parse_graph6(">>graph6<<DQc").order() == 5);
    CHECK(parse_graph6("DQc").order() == 5);
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("D"), std::invalid_argument);       // truncated
    CHECK_THROWS_AS(parse_graph6("DQcc"), std::invalid_argument);    // too long
    CHECK_THROWS_AS(parse_graph6("DQ\x1f"), std::invalid_argument);  // bad char
    CHECK_THROWS_AS(parse_graph6("?"), std::invalid_argument);       // n = 0
    // C? is K1-bar on 4 vertices; C~ has all six bits set and no padding room
    CHECK(parse_graph6("C?").edge_count() == 0);
    CHECK(parse_graph6("C~").edge_count() == 6);
    // 5-vertex codes carry 10 bits in 12 slots; nonzero padding is rejected
    CHECK_THROWS_AS(parse_graph6("D?A"), std::invalid_argument);
}

TEST_CASE("graph6 of the 12-vertex extremal blow-up is stable") {
    CHECK(write_graph6(construct_s_bn(12, 2)) == "K]~uE?rKo^`}");
}

TEST_CASE("isomorphism accepts relabelings and rejects structural differences") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + int(rng() % 20);
        Graph g = random_graph(rng, n, 0.5);
        std::vector<int> perm(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) perm[size_t(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(is_isomorphic_small(g, relabeled(g, perm)));
    }
    // C6 and two disjoint triangles are both 2-regular on 6 vertices
    Graph two_triangles(6);
    for (int base : {0, 3})
        for (int i = 0; i < 3; ++i)
            two_triangles.set_edge(base + i, base + (i + 1) % 3, true);
    CHECK_FALSE(is_isomorphic_small(cycle(6), two_triangles));
    CHECK(is_isomorphic_small(cycle(5), cycle(5)));
    Graph path(5);
    for (int v = 0; v + 1 < 5; ++v) path.set_edge(v, v + 1, true);
    CHECK_FALSE(is_isomorphic_small(cycle(5), path));
    CHECK_FALSE(is_isomorphic_small(cycle(5), cycle(6)));
}
