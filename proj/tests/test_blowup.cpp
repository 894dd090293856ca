#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "blowup.hpp"
#include "calculus.hpp"
#include "graph.hpp"
#include "invariants.hpp"
#include "json_io.hpp"

using namespace booktri;

namespace {

PatternGraph single_edge() {
    PatternGraph p;
    p.k = 2;
    p.add_edge(0, 1);
    return p;
}

PatternGraph triangle_pattern() {
    PatternGraph p;
    p.k = 3;
    p.add_edge(0, 1);
    p.add_edge(1, 2);
    p.add_edge(0, 2);
    return p;
}

PartVector to_part_vector(const Sizes6& a) {
    PartVector v;
    for (int i = 0; i < 6; ++i) v.a[size_t(i)] = Rational(a[size_t(i)]);
    return v;
}

std::vector<int64_t> to_sizes(const Sizes6& a) {
    return std::vector<int64_t>(a.begin(), a.end());
}

}  // namespace

TEST_CASE("closed-form counts on small patterns") {
    CHECK(blowup_edges(prism_pattern(), {1, 1, 1, 1, 1, 1}) == 9);
    CHECK(blowup_edges(single_edge(), {5, 7}) == 35);
    CHECK(blowup_triangles(prism_pattern(), {2, 2, 2, 2, 2, 2}) == 16);
    CHECK(blowup_triangles(triangle_pattern(), {3, 4, 5}) == 60);
    CHECK(blowup_triangles(single_edge(), {5, 7}) == 0);
    CHECK(blowup_book_number(prism_pattern(), {3, 3, 0, 3, 3, 1}) == 3);
    CHECK(blowup_book_number(single_edge(), {5, 7}) == 0);
    // The edge opposite the largest triangle part carries the biggest book.
    CHECK(blowup_book_number(triangle_pattern(), {3, 4, 5}) == 5);
}

TEST_CASE("closed forms agree with counting on constructed blow-ups") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 400; ++trial) {
        PatternGraph p;
        p.k = 1 + int(rng() % 6);
        for (int i = 0; i < p.k; ++i)
            for (int j = i + 1; j < p.k; ++j)
                if (rng() % 2) p.add_edge(i, j);
        std::vector<int64_t> sizes(size_t(p.k));
        int64_t total = 0;
        for (auto& s : sizes) {
            s = int64_t(rng() % 7);
            total += s;
        }
        if (total == 0) {
            sizes[0] = 1;
            total = 1;
        }
        Graph g = blowup(p, sizes);
        INFO("trial=" << trial);
        CHECK(blowup_edges(p, sizes) == edge_count(g));
        CHECK(blowup_triangles(p, sizes) == triangle_count(g));
        CHECK(blowup_book_number(p, sizes) == book_number(g));
    }
}

TEST_CASE("prism blow-up counts match the part-vector polynomials") {
    for (int64_t n = 0; n <= 14; ++n)
        enumerate_part_vectors(n, [&](const Sizes6& a) {
            PartVector v = to_part_vector(a);
            CHECK(Rational(blowup_edges(prism_pattern(), to_sizes(a))) == s_fn(v));
            CHECK(Rational(blowup_triangles(prism_pattern(), to_sizes(a))) ==
                  t_fn(v));
        });
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 300; ++trial) {
        Sizes6 a;
        for (auto& x : a) x = int64_t(rng() % 30);
        PartVector v = to_part_vector(a);
        CHECK(Rational(blowup_edges(prism_pattern(), to_sizes(a))) == s_fn(v));
        CHECK(Rational(blowup_triangles(prism_pattern(), to_sizes(a))) == t_fn(v));
    }
}

TEST_CASE("part-vector enumeration is complete, lexicographic and sums to n") {
    auto count = [](int64_t n) {
        int64_t c = 0;
        Sizes6 prev{};
        bool first = true;
        enumerate_part_vectors(n, [&](const Sizes6& a) {
            ++c;
            int64_t sum = 0;
            for (int64_t x : a) {
                CHECK(x >= 0);
                sum += x;
            }
            CHECK(sum == n);
            if (!first) CHECK(prev < a);
            prev = a;
            first = false;
        });
        return c;
    };
    CHECK(count(0) == 1);
    CHECK(count(1) == 6);
    CHECK(count(2) == 21);
    CHECK(count(12) == 6188);
    for (int64_t n = 3; n <= 10; ++n) {
        int64_t expect = (n + 1) * (n + 2) * (n + 3) * (n + 4) * (n + 5) / 120;
        CHECK(count(n) == expect);
    }
}

TEST_CASE("automorphism orbits of part vectors") {
    std::vector<Sizes6> fixed = part_vector_orbit({2, 2, 2, 2, 2, 2});
    REQUIRE(fixed.size() == 1);
    CHECK(fixed[0] == Sizes6{2, 2, 2, 2, 2, 2});

    std::vector<Sizes6> orb = part_vector_orbit({3, 3, 0, 3, 3, 1});
    CHECK(orb.size() == 6);
    CHECK(std::is_sorted(orb.begin(), orb.end()));
    CHECK(std::count(orb.begin(), orb.end(), Sizes6{3, 3, 0, 3, 3, 1}) == 1);
    CHECK(std::count(orb.begin(), orb.end(), Sizes6{3, 3, 1, 3, 3, 0}) == 1);
    for (const Sizes6& img : orb) {
        Sizes6 sorted_img = img;
        std::sort(sorted_img.begin(), sorted_img.end());
        CHECK(sorted_img == Sizes6{0, 1, 3, 3, 3, 3});
        std::vector<Sizes6> again = part_vector_orbit(img);
        CHECK(again == orb);
    }

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        Sizes6 a;
        for (auto& x : a) x = int64_t(rng() % 5);
        std::vector<Sizes6> o = part_vector_orbit(a);
        CHECK(12 % o.size() == 0);
        CHECK(std::count(o.begin(), o.end(), a) == 1);
    }
}

TEST_CASE("balanced complete-bipartite part vectors are recognized") {
    CHECK(is_balanced_bipartite_vector({6, 6, 0, 0, 0, 0}));
    CHECK(is_balanced_bipartite_vector({0, 0, 6, 0, 0, 6}));
    CHECK(is_balanced_bipartite_vector({6, 0, 0, 6, 0, 0}));
    CHECK(is_balanced_bipartite_vector({6, 2, 0, 4, 0, 0}));
    CHECK(is_balanced_bipartite_vector({4, 6, 0, 0, 2, 0}));
    CHECK_FALSE(is_balanced_bipartite_vector({2, 2, 2, 2, 2, 2}));
    CHECK_FALSE(is_balanced_bipartite_vector({5, 7, 0, 0, 0, 0}));
    CHECK_FALSE(is_balanced_bipartite_vector({0, 6, 0, 6, 0, 0}));
    CHECK_FALSE(is_balanced_bipartite_vector({12, 0, 0, 0, 0, 0}));
}

TEST_CASE("class verification confirms the conjectured minimum") {
    BlowupVerdict v12 = verify_conjecture_blowups(12, 2);
    CHECK(v12.vectors_scanned == 6188);
    CHECK(v12.bound == 16);
    CHECK(v12.has_positive_admissible);
    CHECK(v12.min_t == 16);
    REQUIRE(v12.minimizers.size() == 1);
    CHECK(v12.minimizers[0] == Sizes6{2, 2, 2, 2, 2, 2});
    CHECK(v12.minimizer_count == 1);
    CHECK(v12.minimizer_orbits == 1);
    CHECK(v12.minimizers_are_extremal_orbit);
    CHECK(v12.t0_all_balanced_bipartite);
    CHECK(v12.t0_violations.empty());
    CHECK(v12.t0_admissible > 0);
    CHECK(v12.conjecture_holds_in_class);

    BlowupVerdict v13 = verify_conjecture_blowups(13, 3);
    CHECK(v13.bound == 9);
    CHECK(v13.min_t == 9);
    CHECK(v13.minimizers_are_extremal_orbit);
    CHECK(v13.minimizer_orbits == 1);
    CHECK(v13.minimizer_count == 6);
    CHECK(v13.conjecture_holds_in_class);
    std::vector<Sizes6> expect = part_vector_orbit({3, 3, 0, 3, 3, 1});
    CHECK(v13.minimizers == expect);

    BlowupVerdict v24 = verify_conjecture_blowups(24, 4);
    CHECK(v24.bound == 128);
    CHECK(v24.min_t == 128);
    CHECK(v24.minimizers_are_extremal_orbit);
    CHECK(v24.conjecture_holds_in_class);

    CHECK_THROWS_AS(verify_conjecture_blowups(12, 3), std::invalid_argument);
    CHECK_THROWS_AS(verify_conjecture_blowups(13, 2), std::invalid_argument);
    CHECK_THROWS_AS(verify_conjecture_blowups(8, 1), std::invalid_argument);
}

TEST_CASE("verdicts are independent of the worker count") {
    nlohmann::json one = verify_conjecture_blowups(14, 3, 1);
    nlohmann::json four = verify_conjecture_blowups(14, 3, 4);
    nlohmann::json def = verify_conjecture_blowups(14, 3, 0);
    CHECK(one.dump() == four.dump());
    CHECK(one.dump() == def.dump());
}
