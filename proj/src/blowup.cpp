#include "blowup.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <thread>

namespace booktri {
namespace {

void check_sizes(const PatternGraph& h, const std::vector<int64_t>& sizes) {
    if (int(sizes.size()) != h.k)
        throw std::invalid_argument("sizes length must equal the pattern order");
    for (int64_t s : sizes)
        if (s < 0) throw std::invalid_argument("part sizes must be nonnegative");
}

struct ChunkResult {
    int64_t scanned = 0;
    int64_t admissible = 0;
    bool has_positive = false;
    int64_t min_t = 0;
    std::vector<Sizes6> minimizers;
    int64_t minimizer_count = 0;
    int64_t t0_admissible = 0;
    std::vector<Sizes6> t0_violations;
};

constexpr int kMinimizerCap = 64;
constexpr int kViolationCap = 8;

// Same composition order as enumerate_part_vectors, restricted to a range
// of first coordinates.
ChunkResult scan_first_range(int64_t n, int64_t b, int64_t lo, int64_t hi) {
    ChunkResult res;
    const int64_t floor_quarter = n * n / 4;
    Sizes6 a{};
    for (a[0] = lo; a[0] <= hi; ++a[0])
        for (a[1] = 0; a[0] + a[1] <= n; ++a[1])
            for (a[2] = 0; a[0] + a[1] + a[2] <= n; ++a[2])
                for (a[3] = 0; a[0] + a[1] + a[2] + a[3] <= n; ++a[3]) {
                    int64_t used = a[0] + a[1] + a[2] + a[3];
                    for (a[4] = 0; used + a[4] <= n; ++a[4]) {
                        a[5] = n - used - a[4];
                        ++res.scanned;
                        int64_t s = a[0] * a[1] + a[1] * a[2] + a[0] * a[2] +
                                    a[0] * a[3] + a[1] * a[4] + a[2] * a[5] +
                                    a[3] * a[4] + a[4] * a[5] + a[3] * a[5];
                        if (s < floor_quarter) continue;
                        int64_t book = 0;
                        if (a[0] && a[1]) book = std::max(book, a[2]);
                        if (a[1] && a[2]) book = std::max(book, a[0]);
                        if (a[0] && a[2]) book = std::max(book, a[1]);
                        if (a[3] && a[4]) book = std::max(book, a[5]);
                        if (a[4] && a[5]) book = std::max(book, a[3]);
                        if (a[3] && a[5]) book = std::max(book, a[4]);
                        if (book > b) continue;
                        ++res.admissible;
                        int64_t t = a[0] * a[1] * a[2] + a[3] * a[4] * a[5];
                        if (t == 0) {
                            ++res.t0_admissible;
                            if (!(s == floor_quarter && is_balanced_bipartite_vector(a)) &&
                                int(res.t0_violations.size()) < kViolationCap)
                                res.t0_violations.push_back(a);
                            continue;
                        }
                        if (!res.has_positive || t < res.min_t) {
                            res.has_positive = true;
                            res.min_t = t;
                            res.minimizers.clear();
                            res.minimizer_count = 0;
                        }
                        if (t == res.min_t) {
                            ++res.minimizer_count;
                            if (int(res.minimizers.size()) < kMinimizerCap)
                                res.minimizers.push_back(a);
                        }
                    }
                }
    return res;
}

}  // namespace

int64_t blowup_edges(const PatternGraph& h, const std::vector<int64_t>& sizes) {
    check_sizes(h, sizes);
    int64_t sum = 0;
    for (int i = 0; i < h.k; ++i)
        for (int j = i + 1; j < h.k; ++j)
            if (h.has_edge(i, j)) sum += sizes[i] * sizes[j];
    return sum;
}

int64_t blowup_triangles(const PatternGraph& h, const std::vector<int64_t>& sizes) {
    check_sizes(h, sizes);
    int64_t sum = 0;
    for (int i = 0; i < h.k; ++i)
        for (int j = i + 1; j < h.k; ++j) {
            if (!h.has_edge(i, j)) continue;
            uint8_t common = h.adj[i] & h.adj[j];
            for (int w = j + 1; w < h.k; ++w)
                if ((common >> w) & 1) sum += sizes[i] * sizes[j] * sizes[w];
        }
    return sum;
}

int64_t blowup_book_number(const PatternGraph& h, const std::vector<int64_t>& sizes) {
    check_sizes(h, sizes);
    int64_t best = 0;
    for (int i = 0; i < h.k; ++i)
        for (int j = i + 1; j < h.k; ++j) {
            if (!h.has_edge(i, j) || sizes[i] < 1 || sizes[j] < 1) continue;
            uint8_t common = h.adj[i] & h.adj[j];
            int64_t pages = 0;
            for (int w = 0; w < h.k; ++w)
                if ((common >> w) & 1) pages += sizes[w];
            best = std::max(best, pages);
        }
    return best;
}

std::vector<Sizes6> part_vector_orbit(const Sizes6& a) {
    std::set<Sizes6> images;
    for (const auto& perm : prism_automorphisms()) {
        Sizes6 img{};
        for (int i = 0; i < 6; ++i) img[perm[i]] = a[i];
        images.insert(img);
    }
    return {images.begin(), images.end()};
}

bool is_balanced_bipartite_vector(const Sizes6& a) {
    const PatternGraph& p = prism_pattern();
    std::vector<int> live;
    int64_t n = 0;
    for (int i = 0; i < 6; ++i) {
        if (a[i] > 0) live.push_back(i);
        n += a[i];
    }
    const int m = int(live.size());
    for (int mask = 0; mask < (1 << m); ++mask) {
        int64_t side = 0;
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            bool in_x = (mask >> i) & 1;
            if (in_x) side += a[live[i]];
            for (int j = i + 1; j < m && ok; ++j) {
                bool same = in_x == bool((mask >> j) & 1);
                bool edge = p.has_edge(live[i], live[j]);
                ok = same ? !edge : edge;
            }
        }
        if (ok && (side == n / 2 || side == n - n / 2)) return true;
    }
    return false;
}

BlowupVerdict verify_conjecture_blowups(int64_t n, int64_t b, int workers) {
    if (b < 0 || 6 * b < n || 4 * b >= n)
        throw std::invalid_argument("blow-up verification requires n/6 <= b < n/4");
    if (n < 1 || n > 100000) throw std::invalid_argument("n out of supported range");

    int hw = int(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    int w = workers > 0 ? workers : hw;
    w = int(std::min<int64_t>(w, n + 1));

    std::vector<ChunkResult> parts(w);
    if (w == 1) {
        parts[0] = scan_first_range(n, b, 0, n);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(w);
        for (int i = 0; i < w; ++i) {
            int64_t lo = (n + 1) * i / w;
            int64_t hi = (n + 1) * (i + 1) / w - 1;
            pool.emplace_back([&parts, i, n, b, lo, hi] {
                parts[i] = scan_first_range(n, b, lo, hi);
            });
        }
        for (auto& th : pool) th.join();
    }

    BlowupVerdict v;
    v.n = n;
    v.b = b;
    v.bound = b * b * (n - 4 * b);
    bool t0_ok = true;
    for (const ChunkResult& c : parts) {
        v.vectors_scanned += c.scanned;
        v.admissible += c.admissible;
        v.t0_admissible += c.t0_admissible;
        for (const auto& bad : c.t0_violations) {
            t0_ok = false;
            if (int(v.t0_violations.size()) < kViolationCap) v.t0_violations.push_back(bad);
        }
        if (!c.has_positive) continue;
        if (!v.has_positive_admissible || c.min_t < v.min_t) {
            v.has_positive_admissible = true;
            v.min_t = c.min_t;
            v.minimizers.clear();
            v.minimizer_count = 0;
        }
        if (c.min_t == v.min_t) {
            v.minimizer_count += c.minimizer_count;
            for (const auto& m : c.minimizers)
                if (int(v.minimizers.size()) < kMinimizerCap) v.minimizers.push_back(m);
        }
    }
    t0_ok = t0_ok && v.t0_violations.empty();
    v.t0_all_balanced_bipartite = t0_ok;

    std::sort(v.minimizers.begin(), v.minimizers.end());

    std::set<Sizes6> canon;
    for (const auto& m : v.minimizers) {
        auto orbit = part_vector_orbit(m);
        canon.insert(orbit.front());
    }
    v.minimizer_orbits = int64_t(canon.size());

    Sizes6 ext{};
    {
        int64_t half = (n - 4 * b) / 2;
        ext = {b, b, half, b, b, n - 4 * b - half};
    }
    auto orbit = part_vector_orbit(ext);
    v.minimizers_are_extremal_orbit =
        v.minimizer_count == int64_t(v.minimizers.size()) &&
        std::equal(orbit.begin(), orbit.end(), v.minimizers.begin(), v.minimizers.end());
    v.conjecture_holds_in_class = v.has_positive_admissible && v.min_t == v.bound &&
                                  v.minimizers_are_extremal_orbit && v.t0_all_balanced_bipartite;
    return v;
}

}  // namespace booktri
