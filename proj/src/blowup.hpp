#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace booktri {

using Sizes6 = std::array<int64_t, 6>;

int64_t blowup_edges(const PatternGraph& h, const std::vector<int64_t>& sizes);
int64_t blowup_triangles(const PatternGraph& h, const std::vector<int64_t>& sizes);

// Max over pattern edges uv with both parts nonempty of the total size of
// their common pattern neighborhood; 0 when no pattern edge has both parts
// nonempty.
int64_t blowup_book_number(const PatternGraph& h, const std::vector<int64_t>& sizes);

// All C(n+5,5) ordered compositions of n into six nonnegative parts, in
// lexicographic order.
template <typename Fn>
void enumerate_part_vectors(int64_t n, Fn&& fn) {
    Sizes6 a{};
    for (a[0] = 0; a[0] <= n; ++a[0])
        for (a[1] = 0; a[0] + a[1] <= n; ++a[1])
            for (a[2] = 0; a[0] + a[1] + a[2] <= n; ++a[2])
                for (a[3] = 0; a[0] + a[1] + a[2] + a[3] <= n; ++a[3]) {
                    int64_t used = a[0] + a[1] + a[2] + a[3];
                    for (a[4] = 0; used + a[4] <= n; ++a[4]) {
                        a[5] = n - used - a[4];
                        fn(a);
                    }
                }
}

struct BlowupVerdict {
    int64_t n = 0;
    int64_t b = 0;
    int64_t vectors_scanned = 0;
    int64_t admissible = 0;
    int64_t bound = 0;
    bool has_positive_admissible = false;
    int64_t min_t = 0;
    std::vector<Sizes6> minimizers;       // raw vectors achieving min_t, lexicographic
    int64_t minimizer_count = 0;          // total, even beyond the stored cap
    int64_t minimizer_orbits = 0;         // distinct up to the 12 pattern automorphisms
    int64_t t0_admissible = 0;
    bool t0_all_balanced_bipartite = true;
    std::vector<Sizes6> t0_violations;    // first few offenders, if any
    bool minimizers_are_extremal_orbit = false;
    bool conjecture_holds_in_class = false;
};

// The 12 automorphism images of a part vector, sorted and deduplicated.
std::vector<Sizes6> part_vector_orbit(const Sizes6& a);

// True when the nonzero parts split into two sides forming a complete
// bipartite pattern with side sums floor(n/2) and ceil(n/2).
bool is_balanced_bipartite_vector(const Sizes6& a);

// Exhaustive scan of all compositions of n; requires integer n/6 <= b < n/4.
// workers = 0 picks the hardware concurrency.
BlowupVerdict verify_conjecture_blowups(int64_t n, int64_t b, int workers = 0);

}  // namespace booktri
