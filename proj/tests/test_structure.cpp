#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "graph.hpp"
#include "invariants.hpp"
#include "structure.hpp"

using namespace booktri;

namespace {

Graph with_extra_vertex(const Graph& base, const std::vector<int>& nbrs) {
    Graph g(base.order() + 1);
    for (int u = 0; u < base.order(); ++u)
        for (int v = u + 1; v < base.order(); ++v)
            if (base.has_edge(u, v)) g.set_edge(u, v, true);
    for (int v : nbrs) g.set_edge(base.order(), v, true);
    return g;
}

std::vector<int> range_vec(int lo, int hi) {
    std::vector<int> out;
    for (int v = lo; v < hi; ++v) out.push_back(v);
    return out;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

// The clean six-part decomposition of a 24-vertex extremal blow-up with one
// appended vertex left in the exceptional set.
DecompositionResult handmade_decomposition() {
    DecompositionResult dec;
    dec.ok = true;
    for (int i = 0; i < 6; ++i) dec.parts[size_t(i)] = range_vec(4 * i, 4 * i + 4);
    dec.exceptional = {24};
    dec.b_effective = 4;
    return dec;
}

}  // namespace

TEST_CASE("degree-deviant seed set") {
    CHECK(compute_r0(construct_s_bn(12, 2), 0.05).empty());
    CHECK(compute_r0(complete_bipartite(6, 6), 0.05).empty());
    std::vector<int> all = compute_r0(complete_bipartite(1, 9), 0.1);
    CHECK(all == range_vec(0, 10));
    CHECK(compute_r0(construct_s_bn(12, 2), 0.0) == range_vec(0, 12));
}

TEST_CASE("anchor triangle selection minimizes neighborhood density") {
    Graph s = construct_s_bn(12, 2);
    auto anchor = select_good_triangle(s, {}, 0.02);
    REQUIRE(anchor.has_value());
    CHECK(*anchor == std::array<int, 3>{0, 2, 4});

    auto shifted = select_good_triangle(s, {0}, 0.02);
    REQUIRE(shifted.has_value());
    CHECK(*shifted == std::array<int, 3>{1, 2, 4});

    CHECK_FALSE(select_good_triangle(complete_bipartite(6, 6), {}, 0.02));

    Graph k5(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) k5.set_edge(u, v, true);
    CHECK_FALSE(select_good_triangle(k5, {}, 0.02));
}

TEST_CASE("exact recovery of an unperturbed extremal blow-up") {
    Graph s = construct_s_bn(24, 4);
    DecompositionResult dec = decompose_prism(s, StabilityParams{});
    REQUIRE(dec.ok);
    CHECK(dec.b_effective == 4);
    CHECK(dec.exceptional.empty());
    CHECK(dec.r0_size == 0);
    for (int i = 0; i < 6; ++i) {
        CHECK(as_set(dec.parts[size_t(i)]) == as_set(range_vec(4 * i, 4 * i + 4)));
        CHECK(dec.size_deviation[size_t(i)] == 0.0);
    }
    CHECK(dec.edges_inside_parts == 0);
    CHECK(dec.edges_non_prism_pairs == 0);
    CHECK(dec.min_prism_edge_degree == 4);
    CHECK(dec.relabeling == std::array<int, 6>{0, 1, 2, 3, 4, 5});
    CHECK_FALSE(dec.orientation_swapped);
    CHECK(dec.orientation_vote == 16);
    CHECK(dec.orientation_ambiguous == 0);
    CHECK(dec.orientation_outliers == 0);
    CHECK(dec.overlap_w2w3 == 0);
    CHECK(dec.overlap_w5w6 == 0);

    DecompositionResult small = decompose_prism(construct_s_bn(12, 2),
                                                StabilityParams{});
    REQUIRE(small.ok);
    CHECK(small.exceptional.empty());
    for (int i = 0; i < 6; ++i)
        CHECK(as_set(small.parts[size_t(i)]) == as_set(range_vec(2 * i, 2 * i + 2)));
}

TEST_CASE("decomposition reports an honest failure step") {
    DecompositionResult bip = decompose_prism(complete_bipartite(12, 12),
                                              StabilityParams{});
    CHECK_FALSE(bip.ok);
    CHECK(bip.failed_step == "no_first_anchor");

    DecompositionResult thin = decompose_prism(construct_s_bn(21, 5),
                                               StabilityParams{});
    CHECK_FALSE(thin.ok);
    CHECK(thin.failed_step == "no_second_anchor");
}

TEST_CASE("decomposition yields a partition of the vertex set") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 12; ++trial) {
        int64_t n = 20 + int64_t(rng() % 21);
        int64_t lo = (n + 5) / 6, hi = n / 4;
        if (4 * hi == n) --hi;
        if (hi < lo) continue;
        int64_t b = lo + int64_t(rng() % uint64_t(hi - lo + 1));
        Graph g = construct_s_bn(int(n), int(b));
        // two random perturbing flips
        for (int k = 0; k < 2; ++k) {
            int u = int(rng() % uint64_t(n));
            int v = int(rng() % uint64_t(n));
            if (u != v) g.set_edge(u, v, !g.has_edge(u, v));
        }
        DecompositionResult dec = decompose_prism(g, StabilityParams{});
        if (!dec.ok) continue;
        std::vector<int> seen;
        for (const auto& part : dec.parts)
            seen.insert(seen.end(), part.begin(), part.end());
        seen.insert(seen.end(), dec.exceptional.begin(), dec.exceptional.end());
        std::sort(seen.begin(), seen.end());
        CHECK(seen == range_vec(0, int(n)));
    }
}

TEST_CASE("a clean decomposition classifies an empty exceptional set trivially") {
    Graph s = construct_s_bn(12, 2);
    DecompositionResult dec = decompose_prism(s, StabilityParams{});
    REQUIRE(dec.ok);
    ExceptionalSplit split = classify_exceptional(s, dec, StabilityParams{});
    CHECK(split.r1.empty());
    CHECK(split.r2.empty());
    CHECK(split.r3.empty());
    CHECK(split.phi.empty());
    CHECK(split.phi_violations.empty());
    CHECK(split.a == std::array<int64_t, 6>{2, 2, 2, 2, 2, 2});
    CHECK(split.r == 0);
}

TEST_CASE("high-degree exceptional vertices are slotted by forbidden parts") {
    Graph base = construct_s_bn(24, 4);
    StabilityParams params;
    params.tau1 = 0.02;

    // Neighbors exactly the three parts a slot-4 vertex may see.
    Graph g = with_extra_vertex(
        base, concat(range_vec(0, 4), range_vec(16, 24)));
    ExceptionalSplit split = classify_exceptional(g, handmade_decomposition(),
                                                  params);
    CHECK(split.r1.empty());
    CHECK(split.r2.empty());
    CHECK(split.r3 == std::vector<int>{24});
    REQUIRE(split.phi.count(24) == 1);
    CHECK(split.phi.at(24) == 3);
    CHECK(split.phi_violations.empty());
    CHECK(split.phi_multi.empty());
    CHECK(split.a == std::array<int64_t, 6>{4, 4, 4, 5, 4, 4});
    CHECK(split.r == 0);

    // A vertex adjacent to everything violates every slot's forbidden parts.
    Graph noisy = with_extra_vertex(base, range_vec(0, 24));
    ExceptionalSplit bad = classify_exceptional(noisy, handmade_decomposition(),
                                                params);
    CHECK(bad.r3 == std::vector<int>{24});
    CHECK(bad.phi_violations == std::vector<int>{24});
    CHECK(bad.phi.count(24) == 0);
    CHECK(bad.a == std::array<int64_t, 6>{4, 4, 4, 4, 4, 4});

    // Low degree lands in the first range and only bumps r.
    Graph sparse = with_extra_vertex(base, range_vec(0, 4));
    ExceptionalSplit low = classify_exceptional(sparse, handmade_decomposition(),
                                                params);
    CHECK(low.r1 == std::vector<int>{24});
    CHECK(low.r == 1);
    CHECK(low.a == std::array<int64_t, 6>{4, 4, 4, 4, 4, 4});

    // Mid-range degree is counted in r but still receives a slot.
    Graph mid = with_extra_vertex(
        base, concat(range_vec(0, 4), concat(range_vec(16, 20),
                                             range_vec(20, 22))));
    ExceptionalSplit middling = classify_exceptional(mid, handmade_decomposition(),
                                                     params);
    CHECK(middling.r2 == std::vector<int>{24});
    CHECK(middling.r == 1);
    REQUIRE(middling.phi.count(24) == 1);
    CHECK(middling.phi.at(24) == 3);
    CHECK(middling.a == std::array<int64_t, 6>{4, 4, 4, 4, 4, 4});
}

TEST_CASE("certificates canonicalize the sizes and evaluate the functions") {
    ExceptionalSplit split;
    split.a = {3, 2, 2, 2, 2, 1};
    split.r = 0;
    Certificate cert = evaluate_certificate(split, 2);
    CHECK(cert.canonical_a == std::array<Rational, 6>{3, 2, 2, 2, 1, 2});
    CHECK(cert.b == 2);
    CHECK(cert.r == 0);
    CHECK(cert.f == 0);
    CHECK(cert.h1 == 0);
    CHECK(cert.h2 == -2);
    CHECK(cert.f_nonpositive);
    CHECK(cert.h1_nonnegative);
    CHECK_FALSE(cert.h2_nonnegative);

    ExceptionalSplit balanced;
    balanced.a = {2, 2, 2, 2, 2, 2};
    balanced.r = 6;
    Certificate withr = evaluate_certificate(balanced, 2);
    CHECK(withr.canonical_a == std::array<Rational, 6>{2, 2, 2, 2, 2, 2});
    CHECK(withr.f == 0);
    CHECK(withr.h1 == -6);
    CHECK(withr.h2 == -6);
    CHECK(withr.f_nonpositive);
    CHECK_FALSE(withr.h1_nonnegative);
}

TEST_CASE("parameter validation rejects nonsense") {
    StabilityParams bad;
    bad.tau0 = -0.1;
    CHECK_THROWS_AS(decompose_prism(construct_s_bn(24, 4), bad),
                    std::invalid_argument);
    StabilityParams bad2;
    bad2.c0 = 0.5;
    CHECK_THROWS_AS(decompose_prism(construct_s_bn(24, 4), bad2),
                    std::invalid_argument);
}
