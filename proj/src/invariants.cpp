#include "invariants.hpp"

#include <algorithm>
#include <bit>

namespace booktri {
namespace {

// Iterates the set bits of row[w] for w > v.
template <typename Fn>
void for_each_above(const uint64_t* row, int stride, int v, Fn&& fn) {
    int word = v >> 6;
    uint64_t cur = row[word] & ~((v % 64 == 63) ? ~0ULL : ((2ULL << (v % 64)) - 1));
    for (int blk = word; blk < stride; ++blk) {
        uint64_t bits = (blk == word) ? cur : row[blk];
        while (bits) {
            int w = blk * 64 + std::countr_zero(bits);
            bits &= bits - 1;
            fn(w);
        }
    }
}

int popcount_and(const uint64_t* a, const uint64_t* b, int stride) {
    int c = 0;
    for (int i = 0; i < stride; ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

}  // namespace

int64_t edge_count(const Graph& g) { return g.edge_count(); }

int codegree(const Graph& g, int u, int v) { return g.codegree(u, v); }

int64_t triangle_count(const Graph& g) {
    const int n = g.order();
    const int stride = g.stride();
    int64_t sum = 0;  // counts each triangle three times
    for (int u = 0; u < n; ++u) {
        const uint64_t* ru = g.row(u);
        for_each_above(ru, stride, u, [&](int v) {
            sum += popcount_and(ru, g.row(v), stride);
        });
    }
    return sum / 3;
}

int64_t book_number(const Graph& g) {
    const int n = g.order();
    const int stride = g.stride();
    int best = 0;
    for (int u = 0; u < n; ++u) {
        const uint64_t* ru = g.row(u);
        for_each_above(ru, stride, u, [&](int v) {
            best = std::max(best, popcount_and(ru, g.row(v), stride));
        });
    }
    return best;
}

int64_t k4_count(const Graph& g) {
    const int n = g.order();
    const int stride = g.stride();
    std::vector<uint64_t> common(stride);
    int64_t sum = 0;  // counts each K4 once per edge, i.e. six times
    for (int u = 0; u < n; ++u) {
        const uint64_t* ru = g.row(u);
        for_each_above(ru, stride, u, [&](int v) {
            const uint64_t* rv = g.row(v);
            bool any = false;
            for (int i = 0; i < stride; ++i) {
                common[i] = ru[i] & rv[i];
                any |= common[i] != 0;
            }
            if (!any) return;
            // Edges inside the common neighborhood.
            for (int blk = 0; blk < stride; ++blk) {
                uint64_t bits = common[blk];
                while (bits) {
                    int w = blk * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    const uint64_t* rw = g.row(w);
                    for (int i = blk; i < stride; ++i) {
                        uint64_t mask = common[i];
                        if (i == blk) mask &= ~((w % 64 == 63) ? ~0ULL : ((2ULL << (w % 64)) - 1));
                        sum += std::popcount(rw[i] & mask);
                    }
                }
            }
        });
    }
    return sum / 6;
}

int64_t k4_iso3_count(const Graph& g) {
    const int n = g.order();
    const int stride = g.stride();
    std::vector<uint64_t> common(stride);
    int64_t sum = 0;
    for (int u = 0; u < n; ++u) {
        const uint64_t* ru = g.row(u);
        for_each_above(ru, stride, u, [&](int v) {
            const uint64_t* rv = g.row(v);
            for (int i = 0; i < stride; ++i) common[i] = ru[i] & rv[i];
            // Each triangle {u,v,w} with u < v < w is visited once.
            for (int blk = v >> 6; blk < stride; ++blk) {
                uint64_t bits = common[blk];
                if (blk == (v >> 6))
                    bits &= ~((v % 64 == 63) ? ~0ULL : ((2ULL << (v % 64)) - 1));
                while (bits) {
                    int w = blk * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    const uint64_t* rw = g.row(w);
                    int covered = 0;
                    for (int i = 0; i < stride; ++i)
                        covered += std::popcount(ru[i] | rv[i] | rw[i]);
                    sum += n - covered;
                }
            }
        });
    }
    return sum;
}

BnCheck bn_inequality(const Graph& g) {
    const int n = g.order();
    const int64_t e = g.edge_count();
    const int64_t t = triangle_count(g);
    const int64_t b = book_number(g);
    int64_t dsq = 0;
    for (int v = 0; v < n; ++v) {
        int64_t d = g.degree(v);
        dsq += d * d;
    }
    BnCheck out;
    out.lhs = (6 * t - dsq + int64_t(n) * e) * b;
    out.rhs = int64_t(n) * t + 8 * k4_count(g) + 2 * k4_iso3_count(g);
    out.holds = out.lhs >= out.rhs;
    return out;
}

InvariantReport compute_invariants(const Graph& g) {
    InvariantReport rep;
    rep.n = g.order();
    rep.e = g.edge_count();
    rep.t = triangle_count(g);
    rep.b = book_number(g);
    rep.k4 = k4_count(g);
    rep.k4_iso3 = k4_iso3_count(g);
    rep.degrees.resize(rep.n);
    for (int v = 0; v < rep.n; ++v) rep.degrees[v] = g.degree(v);
    std::sort(rep.degrees.begin(), rep.degrees.end());
    rep.degree_sq_sum = 0;
    for (int d : rep.degrees) rep.degree_sq_sum += int64_t(d) * d;
    return rep;
}

Triple rearrange_desc(const Triple& front, const Triple& back) {
    (void)front;
    Triple out = back;
    std::sort(out.begin(), out.end(), [](const Rational& x, const Rational& y) { return x > y; });
    return out;
}

bool rearrange_equality_holds(const Triple& front, const Triple& back) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if ((front[i] - front[j]) * (back[i] - back[j]) < 0) return false;
    return true;
}

bool rearrange_equality_brute(const Triple& front, const Triple& back) {
    Triple sorted = rearrange_desc(front, back);
    Rational given = front[0] * back[0] + front[1] * back[1] + front[2] * back[2];
    Rational best = front[0] * sorted[0] + front[1] * sorted[1] + front[2] * sorted[2];
    return given == best;
}

}  // namespace booktri
