#include "search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "graph.hpp"
#include "invariants.hpp"

namespace booktri {

namespace {

constexpr int kExampleCap = 8;

int resolve_workers(int requested, int upper) {
    int w = requested > 0 ? requested
                          : int(std::thread::hardware_concurrency());
    if (w < 1) w = 1;
    return std::min(w, std::max(1, upper));
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    uint64_t span = uint64_t(hi - lo) + 1;
    return lo + int(rng() % span);
}

double uniform01(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

int64_t conjecture_bound(int64_t n, int64_t b) { return b * b * (n - 4 * b); }

Rational mubayi_bound(int64_t n, const Rational& alpha, const Rational& delta) {
    if (!(alpha > Rational(1, 2) && alpha < 1))
        throw std::invalid_argument("alpha must lie strictly between 1/2 and 1");
    if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
    return (alpha * (1 - alpha) - delta) * Rational(n) * Rational(n) / 4;
}

namespace {

struct ScanChunk {
    int64_t graphs_checked = 0;
    int64_t rademacher_violations = 0;
    int64_t edwards_violations = 0;
    int64_t bn_violations = 0;
    std::vector<ScanViolation> examples;
};

std::string mask_graph6(int n, const std::vector<std::array<int, 2>>& edges,
                        uint64_t mask) {
    Graph g(n);
    for (uint64_t m = mask; m; m &= m - 1) {
        int k = std::countr_zero(m);
        g.set_edge(edges[k][0], edges[k][1], true);
    }
    return write_graph6(g);
}

void scan_range(const ScanConfig& cfg,
                const std::vector<std::array<int, 2>>& edges, uint64_t lo,
                uint64_t hi, ScanChunk& out) {
    const int n = cfg.n;
    const int half_n = n / 2;
    std::array<uint8_t, 8> above{};
    for (int p = 0; p < 8; ++p) above[p] = uint8_t(~((2u << p) - 1));

    for (uint64_t mask = lo; mask < hi; ++mask) {
        int e = std::popcount(mask);
        if (e < cfg.edge_min) continue;
        ++out.graphs_checked;

        std::array<uint8_t, 8> rows{};
        for (uint64_t m = mask; m; m &= m - 1) {
            int k = std::countr_zero(m);
            rows[edges[k][0]] |= uint8_t(1u << edges[k][1]);
            rows[edges[k][1]] |= uint8_t(1u << edges[k][0]);
        }

        int t3 = 0;
        int book = 0;
        for (uint64_t m = mask; m; m &= m - 1) {
            int k = std::countr_zero(m);
            int cd = std::popcount(
                unsigned(rows[edges[k][0]] & rows[edges[k][1]]));
            t3 += cd;
            book = std::max(book, cd);
        }
        int t = t3 / 3;

        if (cfg.check_rademacher && t < half_n) {
            ++out.rademacher_violations;
            if (out.rademacher_violations <= kExampleCap)
                out.examples.push_back(
                    {"rademacher", mask_graph6(n, edges, mask)});
        }
        if (cfg.check_edwards && 6 * book < n) {
            ++out.edwards_violations;
            if (out.edwards_violations <= kExampleCap)
                out.examples.push_back({"edwards", mask_graph6(n, edges, mask)});
        }
        if (cfg.check_bn) {
            int deg_sq = 0;
            for (int v = 0; v < n; ++v) {
                int d = std::popcount(unsigned(rows[v]));
                deg_sq += d * d;
            }
            int k4_6 = 0;
            for (uint64_t m = mask; m; m &= m - 1) {
                int k = std::countr_zero(m);
                uint8_t common = rows[edges[k][0]] & rows[edges[k][1]];
                for (uint8_t c = common; c; c &= uint8_t(c - 1)) {
                    int p = std::countr_zero(unsigned(c));
                    k4_6 += std::popcount(unsigned(common & rows[p] & above[p]));
                }
            }
            int k4 = k4_6 / 6;
            int iso3 = 0;
            for (int i = 0; i < n; ++i) {
                for (uint8_t mj = uint8_t(rows[i] & above[i]); mj;
                     mj &= uint8_t(mj - 1)) {
                    int j = std::countr_zero(unsigned(mj));
                    for (uint8_t mk = uint8_t(rows[i] & rows[j] & above[j]); mk;
                         mk &= uint8_t(mk - 1)) {
                        int k = std::countr_zero(unsigned(mk));
                        iso3 += n - std::popcount(
                                         unsigned(rows[i] | rows[j] | rows[k]));
                    }
                }
            }
            int64_t lhs = int64_t(6 * t - deg_sq + n * e) * book;
            int64_t rhs = int64_t(n) * t + 8 * int64_t(k4) + 2 * int64_t(iso3);
            if (lhs < rhs) {
                ++out.bn_violations;
                if (out.bn_violations <= kExampleCap)
                    out.examples.push_back({"bn", mask_graph6(n, edges, mask)});
            }
        }
    }
}

}  // namespace

ScanReport exhaustive_scan(const ScanConfig& cfg) {
    if (cfg.n < 1 || cfg.n > 8)
        throw std::invalid_argument("exhaustive scan handles 1 <= n <= 8");
    if (cfg.edge_min < 0)
        throw std::invalid_argument("edge_min must be nonnegative");

    std::vector<std::array<int, 2>> edges;
    for (int i = 0; i < cfg.n; ++i)
        for (int j = i + 1; j < cfg.n; ++j) edges.push_back({i, j});
    const int m = int(edges.size());
    const uint64_t total = uint64_t(1) << m;

    int chunks = cfg.chunks > 0 ? cfg.chunks
                                : int(std::thread::hardware_concurrency());
    if (chunks < 1) chunks = 1;
    chunks = int(std::min<uint64_t>(uint64_t(chunks), total));

    std::vector<ScanChunk> parts(chunks);
    if (chunks == 1) {
        scan_range(cfg, edges, 0, total, parts[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(chunks);
        for (int c = 0; c < chunks; ++c) {
            uint64_t lo = total / chunks * c + std::min<uint64_t>(c, total % chunks);
            uint64_t len = total / chunks + (uint64_t(c) < total % chunks ? 1 : 0);
            pool.emplace_back(scan_range, std::cref(cfg), std::cref(edges), lo,
                              lo + len, std::ref(parts[c]));
        }
        for (auto& th : pool) th.join();
    }

    ScanReport report;
    report.cfg = cfg;
    report.masks_total = int64_t(total);
    int64_t kept_rademacher = 0, kept_edwards = 0, kept_bn = 0;
    for (const ScanChunk& part : parts) {
        report.graphs_checked += part.graphs_checked;
        report.rademacher_violations += part.rademacher_violations;
        report.edwards_violations += part.edwards_violations;
        report.bn_violations += part.bn_violations;
        for (const ScanViolation& v : part.examples) {
            int64_t* kept = v.check == "rademacher" ? &kept_rademacher
                            : v.check == "edwards"  ? &kept_edwards
                                                    : &kept_bn;
            if (*kept < kExampleCap) {
                ++*kept;
                report.examples.push_back(v);
            }
        }
    }
    return report;
}

namespace {

struct AnnealState {
    int n = 0;
    int64_t b = 0;
    int64_t emin = 0;
    std::array<uint64_t, 64> rows{};
    std::vector<int16_t> codeg;
    int64_t e = 0;
    int64_t t = 0;
    int64_t viol = 0;  // adjacent pairs with codegree above b
};

void recount(AnnealState& st) {
    const int n = st.n;
    st.codeg.assign(size_t(n) * n, 0);
    st.e = 0;
    st.t = 0;
    st.viol = 0;
    int64_t t3 = 0;
    for (int u = 0; u < n; ++u) {
        st.e += std::popcount(st.rows[u]);
        for (int v = u + 1; v < n; ++v) {
            auto cd = int16_t(std::popcount(st.rows[u] & st.rows[v]));
            st.codeg[size_t(u) * n + v] = cd;
            st.codeg[size_t(v) * n + u] = cd;
            if ((st.rows[u] >> v) & 1) {
                t3 += cd;
                if (cd > st.b) ++st.viol;
            }
        }
    }
    st.e /= 2;
    st.t = t3 / 3;
}

bool states_agree(const AnnealState& a, const AnnealState& b) {
    return a.e == b.e && a.t == b.t && a.viol == b.viol && a.codeg == b.codeg;
}

Graph rows_to_graph(int n, const std::array<uint64_t, 64>& rows) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (uint64_t m = rows[u] >> (u + 1) << (u + 1); m; m &= m - 1)
            g.set_edge(u, std::countr_zero(m), true);
    return g;
}

std::array<uint64_t, 64> graph_to_rows(const Graph& g) {
    std::array<uint64_t, 64> rows{};
    for (int v = 0; v < g.order(); ++v) rows[size_t(v)] = g.row(v)[0];
    return rows;
}

void repair_edge_floor(AnnealState& st, std::mt19937_64& rng) {
    int64_t e = 0;
    for (int u = 0; u < st.n; ++u) e += std::popcount(st.rows[u]);
    e /= 2;
    while (e < st.emin) {
        int u = uniform_int(rng, 0, st.n - 1);
        int v = uniform_int(rng, 0, st.n - 2);
        if (v >= u) ++v;
        if ((st.rows[u] >> v) & 1) continue;
        st.rows[u] |= uint64_t(1) << v;
        st.rows[v] |= uint64_t(1) << u;
        ++e;
    }
}

RestartOutcome run_restart(const AnnealConfig& cfg, int restart) {
    std::mt19937_64 rng(cfg.seed ^ (0x9E3779B97F4A7C15ULL * uint64_t(restart + 1)));

    AnnealState st;
    st.n = cfg.n;
    st.b = cfg.b;
    st.emin = int64_t(cfg.n) * cfg.n / 4;

    RestartOutcome out;
    out.restart = restart;
    if (restart % 2 == 0) {
        st.rows = graph_to_rows(construct_s_bn(cfg.n, int(cfg.b)));
        if (restart == 0) {
            out.init_kind = "extremal";
        } else {
            out.init_kind = "extremal_perturbed";
            for (int k = 0; k < 2 * restart; ++k) {
                int u = uniform_int(rng, 0, cfg.n - 1);
                int v = uniform_int(rng, 0, cfg.n - 2);
                if (v >= u) ++v;
                st.rows[u] ^= uint64_t(1) << v;
                st.rows[v] ^= uint64_t(1) << u;
            }
        }
    } else {
        out.init_kind = "random_dense";
        for (int u = 0; u < cfg.n; ++u)
            for (int v = u + 1; v < cfg.n; ++v)
                if (uniform01(rng) < 0.55) {
                    st.rows[u] |= uint64_t(1) << v;
                    st.rows[v] |= uint64_t(1) << u;
                }
    }
    repair_edge_floor(st, rng);
    recount(st);

    bool found = false;
    int64_t best_t = 0;
    std::array<uint64_t, 64> best_rows{};
    bool t0_seen = false;
    std::array<uint64_t, 64> t0_rows{};
    auto note_incumbent = [&] {
        if (st.viol != 0) return;
        if (st.t == 0) {
            if (!t0_seen) {
                t0_seen = true;
                t0_rows = st.rows;
            }
        } else if (!found || st.t < best_t) {
            found = true;
            best_t = st.t;
            best_rows = st.rows;
        }
    };
    note_incumbent();

    const double lambda = double(cfg.n);
    const int64_t late_from = cfg.iters * 7 / 10;
    const double ratio = cfg.t_end / cfg.t_start;
    uint64_t next_audit = 1;

    for (int64_t k = 0; k < cfg.iters; ++k) {
        double temp = cfg.t_start * std::pow(ratio, double(k) / double(cfg.iters));
        int u = uniform_int(rng, 0, cfg.n - 1);
        int v = uniform_int(rng, 0, cfg.n - 2);
        if (v >= u) ++v;
        bool present = (st.rows[u] >> v) & 1;
        double r = uniform01(rng);  // drawn unconditionally to keep the
                                    // stream aligned across proposal fates
        if (!(present && st.e == st.emin)) {
            int delta = present ? -1 : 1;
            int64_t cd_uv = st.codeg[size_t(u) * st.n + v];
            int64_t dt = delta * cd_uv;
            int64_t dv = present ? -(cd_uv > st.b ? 1 : 0)
                                 : (cd_uv > st.b ? 1 : 0);
            uint64_t around_v = st.rows[v] & ~(uint64_t(1) << u);
            for (uint64_t m = around_v; m; m &= m - 1) {
                int w = std::countr_zero(m);
                if (!((st.rows[u] >> w) & 1)) continue;
                int64_t c = st.codeg[size_t(u) * st.n + w];
                dv += (c + delta > st.b ? 1 : 0) - (c > st.b ? 1 : 0);
            }
            uint64_t around_u = st.rows[u] & ~(uint64_t(1) << v);
            for (uint64_t m = around_u; m; m &= m - 1) {
                int w = std::countr_zero(m);
                if (!((st.rows[v] >> w) & 1)) continue;
                int64_t c = st.codeg[size_t(v) * st.n + w];
                dv += (c + delta > st.b ? 1 : 0) - (c > st.b ? 1 : 0);
            }

            bool late = k >= late_from;
            bool reject = late && dv > 0;
            if (!reject) {
                double energy = double(dt) + (late ? 0.0 : lambda * double(dv));
                bool accept = energy <= 0.0 || r < std::exp(-energy / temp);
                if (accept) {
                    st.rows[u] ^= uint64_t(1) << v;
                    st.rows[v] ^= uint64_t(1) << u;
                    st.e += delta;
                    st.t += dt;
                    st.viol += dv;
                    for (uint64_t m = around_v; m; m &= m - 1) {
                        int w = std::countr_zero(m);
                        st.codeg[size_t(u) * st.n + w] =
                            int16_t(st.codeg[size_t(u) * st.n + w] + delta);
                        st.codeg[size_t(w) * st.n + u] =
                            st.codeg[size_t(u) * st.n + w];
                    }
                    for (uint64_t m = around_u; m; m &= m - 1) {
                        int w = std::countr_zero(m);
                        st.codeg[size_t(v) * st.n + w] =
                            int16_t(st.codeg[size_t(v) * st.n + w] + delta);
                        st.codeg[size_t(w) * st.n + v] =
                            st.codeg[size_t(v) * st.n + w];
                    }
                    ++out.accepted;
                    note_incumbent();
                }
            }
        }

        if (uint64_t(k + 1) == next_audit || k + 1 == cfg.iters) {
            if (uint64_t(k + 1) == next_audit) next_audit <<= 1;
            AnnealState fresh = st;
            recount(fresh);
            if (!states_agree(st, fresh))
                throw std::logic_error(
                    "incremental search state diverged from a full recount");
            ++out.audits;
        }
    }

    if (t0_seen) {
        Graph g = rows_to_graph(cfg.n, t0_rows);
        Graph reference = complete_bipartite(cfg.n / 2, cfg.n - cfg.n / 2);
        if (edge_count(g) < st.emin || !is_isomorphic_small(g, reference))
            throw std::logic_error(
                "triangle-free incumbent is not the balanced complete "
                "bipartite graph");
        out.bipartite_hits = 1;
    }
    if (found) {
        out.found_feasible = true;
        out.best_t = best_t;
        Graph g = rows_to_graph(cfg.n, best_rows);
        out.best_graph6 = write_graph6(g);
        Graph back = parse_graph6(out.best_graph6);
        InvariantReport inv = compute_invariants(back);
        if (inv.e < st.emin || inv.b > cfg.b || inv.t != best_t)
            throw std::logic_error(
                "recorded incumbent failed re-verification from its code");
    }
    return out;
}

}  // namespace

SearchReport anneal_min_triangles(const AnnealConfig& cfg) {
    if (cfg.n < 4 || cfg.n > 64)
        throw std::invalid_argument("annealing handles 4 <= n <= 64");
    if (6 * cfg.b < cfg.n || 4 * cfg.b >= cfg.n)
        throw std::invalid_argument("b must satisfy n/6 <= b < n/4");
    if (cfg.iters < 1) throw std::invalid_argument("iters must be positive");
    if (cfg.restarts < 1)
        throw std::invalid_argument("restarts must be positive");

    std::vector<RestartOutcome> outcomes(cfg.restarts);
    int workers = resolve_workers(cfg.workers, cfg.restarts);
    if (workers == 1) {
        for (int r = 0; r < cfg.restarts; ++r) outcomes[r] = run_restart(cfg, r);
    } else {
        std::vector<std::thread> pool;
        std::exception_ptr failure;
        std::mutex failure_mu;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (int r = w; r < cfg.restarts; r += workers)
                        outcomes[r] = run_restart(cfg, r);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mu);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    SearchReport report;
    report.n = cfg.n;
    report.b = cfg.b;
    report.seed = cfg.seed;
    report.iterations = cfg.iters;
    report.restarts = cfg.restarts;
    report.bound = conjecture_bound(cfg.n, cfg.b);
    report.per_restart = outcomes;
    report.note =
        "stochastic search evidence; the absence of a counterexample is not "
        "a proof";
    for (const RestartOutcome& out : outcomes) {
        report.excluded_bipartite_hits += out.bipartite_hits;
        report.audits_performed += out.audits;
        if (out.found_feasible &&
            (report.best_t < 0 || out.best_t < report.best_t)) {
            report.best_t = out.best_t;
            report.best_graph = out.best_graph6;
        }
    }
    report.counterexample_found = report.best_t >= 0 && report.best_t < report.bound;
    return report;
}

SearchReport anneal_min_triangles(int n, int64_t b, uint64_t seed,
                                  int64_t iters) {
    AnnealConfig cfg;
    cfg.n = n;
    cfg.b = b;
    cfg.seed = seed;
    cfg.iters = iters;
    return anneal_min_triangles(cfg);
}

}  // namespace booktri
