#include "structure.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>

#include "invariants.hpp"

namespace booktri {
namespace {

using Mask = std::vector<uint64_t>;

Mask empty_mask(const Graph& g) { return Mask(g.stride(), 0); }

void mask_add(Mask& m, int v) { m[v >> 6] |= 1ULL << (v & 63); }
void mask_remove(Mask& m, int v) { m[v >> 6] &= ~(1ULL << (v & 63)); }
bool mask_has(const Mask& m, int v) { return (m[v >> 6] >> (v & 63)) & 1u; }

int mask_count(const Mask& m) {
    int c = 0;
    for (uint64_t w : m) c += std::popcount(w);
    return c;
}

int count_in(const Graph& g, int v, const Mask& m) {
    const uint64_t* row = g.row(v);
    int c = 0;
    for (size_t i = 0; i < m.size(); ++i) c += std::popcount(row[i] & m[i]);
    return c;
}

std::vector<int> mask_list(const Mask& m, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (mask_has(m, v)) out.push_back(v);
    return out;
}

void validate_params(const StabilityParams& p) {
    auto frac = [](double x) { return x > 0.0 && x < 1.0; };
    if (!frac(p.tau0) || !frac(p.tau_tri) || !frac(p.tau1))
        throw std::invalid_argument("threshold fractions must lie in (0, 1)");
    if (p.c0 < 1.0 || p.c1 < 1.0)
        throw std::invalid_argument("threshold multipliers must be at least 1");
}

// Number of edges inside the common neighborhood of an adjacent pair,
// memoized per ordered pair index.
class PairDensity {
public:
    explicit PairDensity(const Graph& g)
        : g_(g), cache_(size_t(g.order()) * g.order(), -1) {}

    int64_t operator()(int u, int v) {
        if (u > v) std::swap(u, v);
        int64_t& slot = cache_[size_t(u) * g_.order() + v];
        if (slot >= 0) return slot;
        const int stride = g_.stride();
        Mask common(stride);
        for (int i = 0; i < stride; ++i) common[i] = g_.row(u)[i] & g_.row(v)[i];
        int64_t edges = 0;
        for (int blk = 0; blk < stride; ++blk) {
            uint64_t bits = common[blk];
            while (bits) {
                int w = blk * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                const uint64_t* rw = g_.row(w);
                for (int i = blk; i < stride; ++i) {
                    uint64_t m = common[i];
                    if (i == blk) m &= ~((w % 64 == 63) ? ~0ULL : ((2ULL << (w % 64)) - 1));
                    edges += std::popcount(rw[i] & m);
                }
            }
        }
        slot = edges;
        return edges;
    }

private:
    const Graph& g_;
    std::vector<int64_t> cache_;
};

constexpr int kPatternEdges[9][2] = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5},
                                     {3, 5}, {0, 3}, {1, 4}, {2, 5}};
constexpr int kNonPatternPairs[6][2] = {{0, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 3}, {2, 4}};

bool pattern_edge(int i, int j) { return prism_pattern().has_edge(i, j); }

}  // namespace

std::vector<int> compute_r0(const Graph& g, double tau0) {
    const int n = g.order();
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        double dev = std::abs(2.0 * g.degree(v) - n);
        if (dev >= 2.0 * tau0 * n) out.push_back(v);
    }
    return out;
}

std::optional<std::array<int, 3>> select_good_triangle(const Graph& g,
                                                       const std::vector<int>& excluded,
                                                       double tau_tri) {
    const int n = g.order();
    const int stride = g.stride();
    Mask allowed(stride, 0);
    for (int v = 0; v < n; ++v) mask_add(allowed, v);
    for (int v : excluded) mask_remove(allowed, v);

    PairDensity density(g);
    const double limit = tau_tri * double(n) * double(n);
    std::optional<std::array<int, 3>> best;
    int64_t best_score = -1;

    for (int u = 0; u < n; ++u) {
        if (!mask_has(allowed, u)) continue;
        for (int v = u + 1; v < n; ++v) {
            if (!mask_has(allowed, v) || !g.has_edge(u, v)) continue;
            Mask common(stride);
            for (int i = 0; i < stride; ++i)
                common[i] = g.row(u)[i] & g.row(v)[i] & allowed[i];
            for (int blk = v >> 6; blk < stride; ++blk) {
                uint64_t bits = common[blk];
                if (blk == (v >> 6))
                    bits &= ~((v % 64 == 63) ? ~0ULL : ((2ULL << (v % 64)) - 1));
                while (bits) {
                    int w = blk * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    int64_t score = std::max({density(u, v), density(u, w), density(v, w)});
                    if (double(score) > limit) continue;
                    if (best_score < 0 || score < best_score) {
                        best_score = score;
                        best = std::array<int, 3>{u, v, w};
                    }
                }
            }
        }
    }
    return best;
}

DecompositionResult decompose_prism(const Graph& g, const StabilityParams& params) {
    validate_params(params);
    const int n = g.order();
    const int stride = g.stride();
    DecompositionResult res;
    res.b_effective = params.b >= 0 ? params.b : book_number(g);

    std::vector<int> r0 = compute_r0(g, params.tau0);
    res.r0_size = int(r0.size());
    Mask r0_mask = empty_mask(g);
    for (int v : r0) mask_add(r0_mask, v);

    auto anchor1 = select_good_triangle(g, r0, params.tau_tri);
    if (!anchor1) {
        res.failed_step = "no_first_anchor";
        return res;
    }
    const auto [x1, x2, x3] = *anchor1;

    Mask a_mask(stride), b_mask(stride);
    for (int i = 0; i < stride; ++i) a_mask[i] = g.row(x1)[i] & ~r0_mask[i];
    for (int v = 0; v < n; ++v)
        if (!mask_has(a_mask, v) && !mask_has(r0_mask, v)) mask_add(b_mask, v);

    Mask w2(stride), w3(stride), overlap23(stride);
    for (int i = 0; i < stride; ++i) {
        w2[i] = a_mask[i] & g.row(x3)[i];
        w3[i] = a_mask[i] & g.row(x2)[i];
        overlap23[i] = w2[i] & w3[i];
        w2[i] &= ~overlap23[i];
        w3[i] &= ~overlap23[i];
    }
    res.overlap_w2w3 = mask_count(overlap23);

    const double half_threshold = (0.5 - params.c0 * params.tau0) * n;
    Mask w4(stride);
    for (int v = 0; v < n; ++v) {
        if (!mask_has(a_mask, v) || mask_has(w2, v) || mask_has(w3, v) ||
            mask_has(overlap23, v))
            continue;
        if (double(count_in(g, v, b_mask)) >= half_threshold) mask_add(w4, v);
    }

    // Second anchor: one vertex in W4, the edge in B, all three pair
    // densities within the limit; minimize the max density, ties
    // lexicographic on (u, v, w).
    PairDensity density(g);
    const double limit = params.tau_tri * double(n) * double(n);
    int sx4 = -1, sx5 = -1, sx6 = -1;
    int64_t best_score = -1;
    for (int u = 0; u < n; ++u) {
        if (!mask_has(w4, u)) continue;
        Mask nb(stride);
        for (int i = 0; i < stride; ++i) nb[i] = g.row(u)[i] & b_mask[i];
        for (int v = 0; v < n; ++v) {
            if (!mask_has(nb, v)) continue;
            for (int blk = v >> 6; blk < stride; ++blk) {
                uint64_t bits = nb[blk] & g.row(v)[blk];
                if (blk == (v >> 6))
                    bits &= ~((v % 64 == 63) ? ~0ULL : ((2ULL << (v % 64)) - 1));
                while (bits) {
                    int w = blk * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    int64_t score = std::max({density(u, v), density(u, w), density(v, w)});
                    if (double(score) > limit) continue;
                    if (best_score < 0 || score < best_score) {
                        best_score = score;
                        sx4 = u;
                        sx5 = v;
                        sx6 = w;
                    }
                }
            }
        }
    }
    if (sx4 < 0) {
        res.failed_step = "no_second_anchor";
        res.anchor1 = {x1, x2, x3};
        return res;
    }
    int x4 = sx4, x5 = sx5, x6 = sx6;

    Mask bp(stride);
    for (int i = 0; i < stride; ++i) bp[i] = b_mask[i] & g.row(x4)[i];
    Mask w5(stride), w6(stride), overlap56(stride);
    for (int i = 0; i < stride; ++i) {
        w5[i] = bp[i] & g.row(x6)[i];
        w6[i] = bp[i] & g.row(x5)[i];
        overlap56[i] = w5[i] & w6[i];
        w5[i] &= ~overlap56[i];
        w6[i] &= ~overlap56[i];
    }
    res.overlap_w5w6 = mask_count(overlap56);

    Mask w1(stride);
    for (int v = 0; v < n; ++v) {
        if (!mask_has(bp, v) || mask_has(w5, v) || mask_has(w6, v) || mask_has(overlap56, v))
            continue;
        if (double(count_in(g, v, a_mask)) >= half_threshold) mask_add(w1, v);
    }

    std::array<Mask, 6> parts{w1, w2, w3, w4, w5, w6};

    // Bad-set removal on the four paired parts.
    const double tau1n = params.tau1 * n;
    const double sparse_limit = (1.0 / 6.0 - params.tau1) * n;
    for (;;) {
        std::vector<int> bad1, bad2;
        auto scan_pair_big = [&](const Mask& side, const Mask& o1, const Mask& o2) {
            for (int v = 0; v < n; ++v)
                if (mask_has(side, v) && double(count_in(g, v, o1)) >= tau1n &&
                    double(count_in(g, v, o2)) >= tau1n)
                    bad1.push_back(v);
        };
        scan_pair_big(parts[1], parts[4], parts[5]);
        scan_pair_big(parts[2], parts[4], parts[5]);
        scan_pair_big(parts[4], parts[1], parts[2]);
        scan_pair_big(parts[5], parts[1], parts[2]);
        auto scan_pair_small = [&](const Mask& side, const Mask& mate) {
            for (int v = 0; v < n; ++v)
                if (mask_has(side, v) && double(count_in(g, v, mate)) <= sparse_limit)
                    bad2.push_back(v);
        };
        scan_pair_small(parts[1], parts[2]);
        scan_pair_small(parts[2], parts[1]);
        scan_pair_small(parts[4], parts[5]);
        scan_pair_small(parts[5], parts[4]);

        int removed = 0;
        for (int v : bad1)
            for (auto& p : parts)
                if (mask_has(p, v)) {
                    mask_remove(p, v);
                    ++removed;
                }
        res.b1_removed += removed;
        int removed2 = 0;
        for (int v : bad2)
            for (auto& p : parts)
                if (mask_has(p, v)) {
                    mask_remove(p, v);
                    ++removed2;
                }
        res.b2_removed += removed2;
        if (!params.iterate_bad_sets || (removed == 0 && removed2 == 0)) break;
    }

    // Pairing orientation: every vertex of the four paired parts votes for
    // the matching whose forbidden side it sees strictly less of; a count
    // tie is ambiguous. The comparison is relative because a forbidden side
    // smaller than any absolute cutoff would otherwise look sparse from
    // both orientations. Ambiguous vertices and minority voters leave for
    // the exceptional set.
    {
        struct Voter {
            int v;
            int slot;
            int vote;  // +1 aligned with current labels, -1 swapped, 0 ambiguous
        };
        std::vector<Voter> voters;
        auto vote_side = [&](int slot, const Mask& aligned_zero, const Mask& swapped_zero) {
            for (int v = 0; v < n; ++v) {
                if (!mask_has(parts[slot], v)) continue;
                int64_t ac = count_in(g, v, aligned_zero);
                int64_t sc = count_in(g, v, swapped_zero);
                int vote = (ac == sc) ? 0 : (ac < sc ? +1 : -1);
                voters.push_back({v, slot, vote});
            }
        };
        // Canonical matching pairs parts (2,5) and (3,6): the sparse side of
        // part 2 is 6, of part 3 is 5, of part 5 is 3, of part 6 is 2.
        vote_side(1, parts[5], parts[4]);
        vote_side(2, parts[4], parts[5]);
        vote_side(4, parts[2], parts[1]);
        vote_side(5, parts[1], parts[2]);

        int sum = 0;
        for (const Voter& v : voters) sum += v.vote;
        res.orientation_vote = sum;
        res.orientation_swapped = sum < 0;
        const int majority = sum < 0 ? -1 : +1;
        for (const Voter& vt : voters) {
            if (vt.vote == 0) {
                mask_remove(parts[vt.slot], vt.v);
                ++res.orientation_ambiguous;
            } else if (vt.vote != majority) {
                mask_remove(parts[vt.slot], vt.v);
                ++res.orientation_outliers;
            }
        }
        if (res.orientation_swapped) {
            std::swap(parts[4], parts[5]);
            std::swap(x5, x6);
        }
    }

    // Canonical relabeling: the automorphism image minimizing the
    // (sizes, least-vertex-ids) key.
    std::array<int, 6> sizes{}, minid{};
    for (int i = 0; i < 6; ++i) {
        sizes[i] = mask_count(parts[i]);
        minid[i] = n;
        auto lst = mask_list(parts[i], n);
        if (!lst.empty()) minid[i] = lst.front();
    }
    const auto& autos = prism_automorphisms();
    int best_auto = 0;
    std::array<int, 12> best_key{};
    bool have = false;
    for (size_t ai = 0; ai < autos.size(); ++ai) {
        const auto& perm = autos[ai];
        std::array<int, 12> key{};
        for (int i = 0; i < 6; ++i) {
            key[perm[i]] = sizes[i];
            key[6 + perm[i]] = minid[i];
        }
        if (!have || key < best_key) {
            have = true;
            best_key = key;
            best_auto = int(ai);
        }
    }
    const auto& sigma = autos[best_auto];
    res.relabeling = sigma;
    std::array<Mask, 6> final_parts;
    std::array<int, 6> anchor_vertices{x1, x2, x3, x4, x5, x6};
    std::array<int, 6> final_anchors{};
    for (int i = 0; i < 6; ++i) {
        final_parts[sigma[i]] = parts[i];
        final_anchors[sigma[i]] = anchor_vertices[i];
    }
    res.anchor1 = {final_anchors[0], final_anchors[1], final_anchors[2]};
    res.anchor2 = {final_anchors[3], final_anchors[4], final_anchors[5]};

    Mask covered(stride);
    for (int i = 0; i < 6; ++i) {
        res.parts[i] = mask_list(final_parts[i], n);
        for (size_t w = 0; w < covered.size(); ++w) covered[w] |= final_parts[i][w];
    }
    for (int v = 0; v < n; ++v)
        if (!mask_has(covered, v)) res.exceptional.push_back(v);

    for (int i = 0; i < 6; ++i) {
        res.size_deviation[i] = double(res.parts[i].size()) - double(n) / 6.0;
        int64_t inside = 0;
        for (int v : res.parts[i]) inside += count_in(g, v, final_parts[i]);
        res.edges_inside_parts += inside / 2;
    }
    for (const auto& pr : kNonPatternPairs)
        for (int v : res.parts[pr[0]])
            res.edges_non_prism_pairs += count_in(g, v, final_parts[pr[1]]);

    res.min_prism_edge_degree = -1;
    for (const auto& e : kPatternEdges)
        for (int dir = 0; dir < 2; ++dir) {
            int from = e[dir], to = e[1 - dir];
            for (int v : res.parts[from]) {
                int d = count_in(g, v, final_parts[to]);
                if (res.min_prism_edge_degree < 0 || d < res.min_prism_edge_degree)
                    res.min_prism_edge_degree = d;
            }
        }

    res.ok = true;
    return res;
}

ExceptionalSplit classify_exceptional(const Graph& g, const DecompositionResult& dec,
                                      const StabilityParams& params) {
    validate_params(params);
    const int n = g.order();
    const int stride = g.stride();
    ExceptionalSplit out;

    std::array<Mask, 6> part_masks;
    part_masks.fill(Mask(stride, 0));
    for (int i = 0; i < 6; ++i)
        for (int v : dec.parts[i]) mask_add(part_masks[i], v);

    const double t_lo = (1.0 / 3.0 + params.c1 * params.tau1) * n;
    const double t_hi = (5.0 / 12.0 + params.c1 * params.tau1) * n;

    std::array<int64_t, 6> counts{};
    for (int i = 0; i < 6; ++i) counts[i] = int64_t(dec.parts[i].size());

    for (int v : dec.exceptional) {
        double d = g.degree(v);
        if (d < t_lo) {
            out.r1.push_back(v);
            continue;
        }
        bool high = d >= t_hi;
        (high ? out.r3 : out.r2).push_back(v);

        std::vector<int> candidates;
        for (int i = 0; i < 6; ++i) {
            bool ok = true;
            for (int j = 0; j < 6 && ok; ++j) {
                if (j != i && pattern_edge(i, j)) continue;
                ok = count_in(g, v, part_masks[j]) == 0;
            }
            if (ok) candidates.push_back(i);
        }
        if (candidates.empty()) {
            out.phi_violations.push_back(v);
            continue;
        }
        int chosen = candidates[0];
        if (candidates.size() > 1) {
            int64_t best = -1;
            for (int i : candidates) {
                int64_t s = 0;
                for (int j = 0; j < 6; ++j)
                    if (j != i && pattern_edge(i, j)) s += count_in(g, v, part_masks[j]);
                if (s > best) {
                    best = s;
                    chosen = i;
                }
            }
            out.phi_multi.emplace_back(v, chosen);
        }
        out.phi[v] = chosen;
        if (high) ++counts[chosen];
    }

    out.a = counts;
    out.r = int64_t(out.r1.size() + out.r2.size());
    return out;
}

Certificate evaluate_certificate(const ExceptionalSplit& split, int64_t b) {
    Certificate cert;
    cert.b = b;
    cert.r = split.r;

    const auto& autos = prism_automorphisms();
    std::array<int64_t, 6> best{};
    bool have = false;
    int64_t maxv = *std::max_element(split.a.begin(), split.a.end());
    for (const auto& perm : autos) {
        std::array<int64_t, 6> img{};
        for (int i = 0; i < 6; ++i) img[perm[i]] = split.a[i];
        if (img[0] != maxv || img[1] < img[2]) continue;
        if (!have || img < best) {
            have = true;
            best = img;
        }
    }

    PartVector v;
    for (int i = 0; i < 6; ++i) {
        v.a[i] = Rational(best[i]);
        cert.canonical_a[i] = v.a[i];
    }
    cert.f = f_fn(v, cert.b);
    cert.h1 = h1_fn(v, split.r);
    cert.h2 = h2_fn(v, cert.b, split.r);
    cert.f_nonpositive = cert.f <= 0;
    cert.h1_nonnegative = cert.h1 >= 0;
    cert.h2_nonnegative = cert.h2 >= 0;
    return cert;
}

}  // namespace booktri
