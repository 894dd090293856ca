#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "calculus.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace booktri {

struct StabilityParams {
    double tau0 = 0.05;     // degree-deviation fraction for the initial exceptional set
    double tau_tri = 0.02;  // anchor-triangle neighborhood density fraction
    double c0 = 2.0;        // multiplier on tau0 in the half-degree tests
    double tau1 = 0.15;     // bad-set fraction for pairing and orientation
    double c1 = 2.0;        // multiplier on tau1 in the exceptional-degree split
    int64_t b = -1;         // book bound; -1 means use book_number(g)
    bool iterate_bad_sets = false;
};

// Vertices whose degree deviates from n/2 by at least tau0 * n.
std::vector<int> compute_r0(const Graph& g, double tau0);

// A triangle disjoint from `excluded` whose three common-neighborhood edge
// counts are all at most tau_tri * n^2, minimizing the maximum count with
// lexicographic tie-break; nullopt when no triangle qualifies.
std::optional<std::array<int, 3>> select_good_triangle(const Graph& g,
                                                       const std::vector<int>& excluded,
                                                       double tau_tri);

struct DecompositionResult {
    bool ok = false;
    std::string failed_step;  // "no_first_anchor" or "no_second_anchor" when !ok

    std::array<std::vector<int>, 6> parts;  // W_1..W_6 (0-indexed slots)
    std::vector<int> exceptional;           // R
    std::array<int, 3> anchor1{-1, -1, -1};
    std::array<int, 3> anchor2{-1, -1, -1};

    int64_t b_effective = 0;
    int r0_size = 0;
    int overlap_w2w3 = 0;
    int overlap_w5w6 = 0;
    int b1_removed = 0;
    int b2_removed = 0;
    int orientation_vote = 0;       // aligned minus swapped voters
    bool orientation_swapped = false;
    int orientation_ambiguous = 0;  // voters whose two side counts tie, sent to R
    int orientation_outliers = 0;   // voters against the majority, sent to R
    std::array<int, 6> relabeling{0, 1, 2, 3, 4, 5};  // applied part permutation

    std::array<double, 6> size_deviation{};  // |W_i| - n/6
    int64_t edges_inside_parts = 0;
    int64_t edges_non_prism_pairs = 0;
    int min_prism_edge_degree = -1;
};

// The two-anchor pipeline: seed exceptional set, first anchor triangle and
// its neighborhood split, half-degree fourth part, second anchor inside it,
// mirrored split, bad-set removal, pairing orientation by majority vote, and
// a canonical relabeling of the six parts.
DecompositionResult decompose_prism(const Graph& g, const StabilityParams& params);

struct ExceptionalSplit {
    std::vector<int> r1, r2, r3;
    std::map<int, int> phi;                     // vertex -> part slot in [0,6)
    std::vector<int> phi_violations;            // vertices with no valid slot
    std::vector<std::pair<int, int>> phi_multi; // vertices with several candidates + chosen slot
    std::array<int64_t, 6> a{};                 // augmented part sizes
    int64_t r = 0;                              // |R_1| + |R_2|
};

// Degree-threshold split of the exceptional set, the zero-forbidden-part
// assignment for its upper ranges, and the augmented part sizes.
ExceptionalSplit classify_exceptional(const Graph& g, const DecompositionResult& dec,
                                      const StabilityParams& params);

struct Certificate {
    std::array<Rational, 6> canonical_a{};
    Rational b;
    int64_t r = 0;
    Rational f;
    Rational h1;
    Rational h2;
    bool f_nonpositive = false;
    bool h1_nonnegative = false;
    bool h2_nonnegative = false;
};

// Evaluates the three vector functions on the automorphism image of the
// augmented sizes with a_1 maximal and a_2 >= a_3 (lex-least such image).
Certificate evaluate_certificate(const ExceptionalSplit& split, int64_t b);

}  // namespace booktri
