#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rational.hpp"

namespace booktri {

// b^2 (n - 4b); may be nonpositive outside the conjectured range.
int64_t conjecture_bound(int64_t n, int64_t b);

// (alpha (1 - alpha) - delta) n^2 / 4; requires 1/2 < alpha < 1 and delta > 0.
Rational mubayi_bound(int64_t n, const Rational& alpha, const Rational& delta);

struct ScanConfig {
    int n = 7;
    int64_t edge_min = 0;
    bool check_rademacher = false;
    bool check_edwards = false;
    bool check_bn = false;
    int chunks = 1;  // 0 picks hardware concurrency
};

struct ScanViolation {
    std::string check;
    std::string graph6;
};

struct ScanReport {
    ScanConfig cfg;
    int64_t masks_total = 0;
    int64_t graphs_checked = 0;
    int64_t rademacher_violations = 0;
    int64_t edwards_violations = 0;
    int64_t bn_violations = 0;
    std::vector<ScanViolation> examples;  // first offenders per check
};

// Iterates every edge subset of K_n (n <= 8) with at least edge_min edges
// and evaluates the enabled predicates.
ScanReport exhaustive_scan(const ScanConfig& cfg);

struct AnnealConfig {
    int n = 12;
    int64_t b = 2;
    uint64_t seed = 0;
    int64_t iters = 1000000;
    int restarts = 8;
    int workers = 0;  // 0 picks hardware concurrency
    double t_start = 2.0;
    double t_end = 0.01;
};

struct RestartOutcome {
    int restart = 0;
    std::string init_kind;
    bool found_feasible = false;
    int64_t best_t = -1;
    std::string best_graph6;
    int bipartite_hits = 0;
    int64_t audits = 0;
    int64_t accepted = 0;
};

struct SearchReport {
    int n = 0;
    int64_t b = 0;
    uint64_t seed = 0;
    int64_t iterations = 0;
    int restarts = 0;
    int64_t bound = 0;
    int64_t best_t = -1;  // least triangle count over feasible non-bipartite incumbents
    std::string best_graph;
    bool counterexample_found = false;
    int64_t excluded_bipartite_hits = 0;
    int64_t audits_performed = 0;
    std::vector<RestartOutcome> per_restart;
    std::string note;
};

// Simulated annealing over single-edge flips minimizing the triangle count,
// with the edge floor enforced by rejection, the book cap by penalty early
// and rejection late, and periodic full-recount audits of the incremental
// state. Deterministic for fixed (n, b, seed, iters, restarts).
SearchReport anneal_min_triangles(const AnnealConfig& cfg);

SearchReport anneal_min_triangles(int n, int64_t b, uint64_t seed, int64_t iters);

}  // namespace booktri
