#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace booktri {

// Simple undirected graph on [0, n) backed by bit rows (64-bit blocks).
// Adjacency stays symmetric and loop-free through set_edge; n is fixed at
// construction. Row pointers are stable, so counting kernels can work on
// raw blocks.
class Graph {
public:
    static constexpr int kMaxVertices = 256;

    explicit Graph(int n);

    int order() const { return n_; }
    int stride() const { return stride_; }

    bool has_edge(int u, int v) const {
        check_pair(u, v);
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }
    void set_edge(int u, int v, bool present);

    const uint64_t* row(int v) const { return bits_.data() + size_t(v) * stride_; }

    int degree(int v) const;
    int64_t edge_count() const;
    int codegree(int u, int v) const;  // |N(u) ∩ N(v)|
    std::vector<int> neighbors(int v) const;

    bool operator==(const Graph&) const = default;

private:
    void check_pair(int u, int v) const;
    uint64_t* mutable_row(int v) { return bits_.data() + size_t(v) * stride_; }

    int n_;
    int stride_;
    std::vector<uint64_t> bits_;
};

// Loop-free pattern graph on at most 8 vertices; rows are 8-bit masks.
struct PatternGraph {
    int k = 0;
    std::array<uint8_t, 8> adj{};

    bool has_edge(int i, int j) const { return (adj[i] >> j) & 1; }
    void add_edge(int i, int j) {
        assert(i != j && i >= 0 && j >= 0 && i < k && j < k);
        adj[i] |= uint8_t(1u << j);
        adj[j] |= uint8_t(1u << i);
    }
    int edge_count() const;
};

// The 3-prism: two triangles {0,1,2} and {3,4,5} joined by the perfect
// matching 0-3, 1-4, 2-5.
const PatternGraph& prism_pattern();

// All 12 prism automorphisms as position maps p with p[i] = image of i.
const std::vector<std::array<int, 6>>& prism_automorphisms();

Graph empty_graph(int n);
Graph complete_bipartite(int p, int q);

// Blow-up: replaces pattern vertex i by an independent set of sizes[i]
// vertices (part-major vertex order), complete bipartite across each
// pattern edge. Zero-size parts are allowed; the total must be in [1, 256].
Graph blowup(const PatternGraph& h, const std::vector<int64_t>& sizes);

// The prism blow-up with part sizes (b, b, floor((n-4b)/2), b, b,
// ceil((n-4b)/2)). Requires an integer b with n/6 <= b <= n/4.
Graph construct_s_bn(int n, int b);

std::string write_graph6(const Graph& g);

// Strict parser: exact length, chars in [63,126], zero padding bits.
// Accepts the optional ">>graph6<<" prefix. Codes with n > 256 (or n = 0)
// are rejected since graphs that large cannot be constructed here.
Graph parse_graph6(const std::string& line);

// Backtracking isomorphism test with degree/neighborhood color refinement.
// Both graphs must have at most 64 vertices.
bool is_isomorphic_small(const Graph& a, const Graph& b);

}  // namespace booktri
