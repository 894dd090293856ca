#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace booktri {

struct InvariantReport {
    int n = 0;
    int64_t e = 0;
    int64_t t = 0;
    int64_t b = 0;
    int64_t k4 = 0;
    int64_t k4_iso3 = 0;
    int64_t degree_sq_sum = 0;
    std::vector<int> degrees;  // ascending
};

int64_t edge_count(const Graph& g);
int codegree(const Graph& g, int u, int v);
int64_t triangle_count(const Graph& g);

// Largest number of triangles sharing a common edge; 0 when no edge lies in
// a triangle.
int64_t book_number(const Graph& g);

int64_t k4_count(const Graph& g);

// Induced triangle-plus-isolated-vertex count: for each triangle, the number
// of vertices adjacent to none of its three corners.
int64_t k4_iso3_count(const Graph& g);

// lhs = (6t - sum d(v)^2 + n*e) * b(G),  rhs = n*t + 8*k4 + 2*k4_iso3.
struct BnCheck {
    int64_t lhs = 0;
    int64_t rhs = 0;
    bool holds = false;
};
BnCheck bn_inequality(const Graph& g);

InvariantReport compute_invariants(const Graph& g);

using Triple = std::array<Rational, 3>;

// Returns back sorted nonincreasing; with front sorted nonincreasing this
// pairing maximizes front[0]*x + front[1]*y + front[2]*z over the six
// permutations of back.
Triple rearrange_desc(const Triple& front, const Triple& back);

// (front_i - front_j)(back_i - back_j) >= 0 for all i < j.
bool rearrange_equality_holds(const Triple& front, const Triple& back);

// Cross-validation: does the dot product of the pairing as given equal the
// maximum over all six permutations of back?
bool rearrange_equality_brute(const Triple& front, const Triple& back);

}  // namespace booktri
