#include "graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace booktri {

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in [1, " +
                                    std::to_string(kMaxVertices) + "], got " +
                                    std::to_string(n));
    stride_ = (n + 63) / 64;
    bits_.assign(size_t(n) * stride_, 0);
}

void Graph::check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("vertex index out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
}

void Graph::set_edge(int u, int v, bool present) {
    check_pair(u, v);
    uint64_t bu = uint64_t(1) << (v & 63), bv = uint64_t(1) << (u & 63);
    if (present) {
        mutable_row(u)[v >> 6] |= bu;
        mutable_row(v)[u >> 6] |= bv;
    } else {
        mutable_row(u)[v >> 6] &= ~bu;
        mutable_row(v)[u >> 6] &= ~bv;
    }
    assert(has_edge(u, v) == present && has_edge(v, u) == present);
    assert(((row(u)[u >> 6] >> (u & 63)) & 1u) == 0);
}

int Graph::degree(int v) const {
    const uint64_t* r = row(v);
    int d = 0;
    for (int i = 0; i < stride_; ++i) d += std::popcount(r[i]);
    return d;
}

int64_t Graph::edge_count() const {
    int64_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

int Graph::codegree(int u, int v) const {
    const uint64_t* ru = row(u);
    const uint64_t* rv = row(v);
    int d = 0;
    for (int i = 0; i < stride_; ++i) d += std::popcount(ru[i] & rv[i]);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    const uint64_t* r = row(v);
    for (int i = 0; i < stride_; ++i) {
        uint64_t w = r[i];
        while (w) {
            out.push_back(i * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

int PatternGraph::edge_count() const {
    int twice = 0;
    for (int i = 0; i < k; ++i) twice += std::popcount(unsigned(adj[i]));
    return twice / 2;
}

const PatternGraph& prism_pattern() {
    static const PatternGraph p = [] {
        PatternGraph g;
        g.k = 6;
        const int edges[9][2] = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4},
                                 {2, 5}, {3, 4}, {4, 5}, {3, 5}};
        for (auto [a, b] : edges) g.add_edge(a, b);
        return g;
    }();
    return p;
}

const std::vector<std::array<int, 6>>& prism_automorphisms() {
    static const std::vector<std::array<int, 6>> autos = [] {
        const PatternGraph& p = prism_pattern();
        std::vector<std::array<int, 6>> out;
        std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
        do {
            bool ok = true;
            for (int i = 0; i < 6 && ok; ++i)
                for (int j = i + 1; j < 6 && ok; ++j)
                    if (p.has_edge(i, j) != p.has_edge(perm[i], perm[j])) ok = false;
            if (ok) out.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    }();
    return autos;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_bipartite(int p, int q) {
    if (p < 0 || q < 0 || p + q < 1)
        throw std::invalid_argument("complete_bipartite needs nonnegative sides, at least one vertex");
    Graph g(p + q);
    for (int u = 0; u < p; ++u)
        for (int v = p; v < p + q; ++v) g.set_edge(u, v, true);
    return g;
}

Graph blowup(const PatternGraph& h, const std::vector<int64_t>& sizes) {
    if (h.k < 1 || size_t(h.k) != sizes.size())
        throw std::invalid_argument("blowup needs one size per pattern vertex");
    int64_t total = 0;
    for (int64_t s : sizes) {
        if (s < 0) throw std::invalid_argument("blowup part sizes must be nonnegative");
        total += s;
    }
    if (total < 1 || total > Graph::kMaxVertices)
        throw std::invalid_argument("blowup order must be in [1, 256], got " +
                                    std::to_string(total));
    std::vector<int> start(h.k + 1, 0);
    for (int i = 0; i < h.k; ++i) start[i + 1] = start[i] + int(sizes[i]);
    Graph g{int(total)};
    for (int i = 0; i < h.k; ++i)
        for (int j = i + 1; j < h.k; ++j) {
            if (!h.has_edge(i, j)) continue;
            for (int u = start[i]; u < start[i + 1]; ++u)
                for (int v = start[j]; v < start[j + 1]; ++v) g.set_edge(u, v, true);
        }
    return g;
}

Graph construct_s_bn(int n, int b) {
    if (n < 1 || n > Graph::kMaxVertices)
        throw std::invalid_argument("order must be in [1, 256]");
    if (b < 0 || 6 * b < n || 4 * b > n)
        throw std::invalid_argument("need an integer b with n/6 <= b <= n/4");
    int64_t m = n - 4 * b;
    return blowup(prism_pattern(), {b, b, m / 2, b, b, m - m / 2});
}

namespace {

constexpr const char* kG6Header = ">>graph6<<";

void append_bits(std::string& out, const std::vector<bool>& bits) {
    for (size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (size_t j = 0; j < 6; ++j) {
            v <<= 1;
            if (i + j < bits.size() && bits[i + j]) v |= 1;
        }
        out += char(v + 63);
    }
}

}  // namespace

std::string write_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out += char(n + 63);
    } else {
        out += '~';
        out += char(((n >> 12) & 63) + 63);
        out += char(((n >> 6) & 63) + 63);
        out += char((n & 63) + 63);
    }
    std::vector<bool> bits;
    bits.reserve(size_t(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
    append_bits(out, bits);
    return out;
}

Graph parse_graph6(const std::string& line) {
    std::string s = line;
    if (s.rfind(kG6Header, 0) == 0) s = s.substr(std::string(kG6Header).size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw std::invalid_argument("empty graph6 code");
    for (char c : s)
        if (c < 63 || c > 126)
            throw std::invalid_argument("invalid graph6 character");

    size_t pos = 0;
    long n;
    if (s[0] != '~') {
        n = s[0] - 63;
        pos = 1;
    } else {
        if (s.size() >= 2 && s[1] == '~')
            throw std::invalid_argument("graph6 codes beyond 258047 vertices are not supported");
        if (s.size() < 4) throw std::invalid_argument("truncated graph6 order");
        n = (long(s[1] - 63) << 12) | (long(s[2] - 63) << 6) | long(s[3] - 63);
        pos = 4;
    }
    if (n < 1)
        throw std::invalid_argument("graph6 code with zero vertices is not supported");
    if (n > Graph::kMaxVertices)
        throw std::invalid_argument("graph6 order " + std::to_string(n) +
                                    " exceeds the supported maximum of 256");

    size_t nbits = size_t(n) * (n - 1) / 2;
    size_t want = (nbits + 5) / 6;
    if (s.size() - pos != want)
        throw std::invalid_argument("graph6 code has wrong length: expected " +
                                    std::to_string(want + pos) + " characters, got " +
                                    std::to_string(s.size()));
    Graph g{int(n)};
    size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int c = s[pos + bit / 6] - 63;
            if ((c >> (5 - bit % 6)) & 1) g.set_edge(i, j, true);
        }
    for (size_t extra = nbits; extra < want * 6; ++extra) {
        int c = s[pos + extra / 6] - 63;
        if ((c >> (5 - extra % 6)) & 1)
            throw std::invalid_argument("graph6 code has nonzero padding bits");
    }
    return g;
}

namespace {

// Shared color refinement: returns stable per-vertex colors with ids
// comparable across the two graphs.
bool refine_colors(const Graph& a, const Graph& b, std::vector<int>& ca,
                   std::vector<int>& cb) {
    int na = a.order(), nb = b.order();
    ca.assign(na, 0);
    cb.assign(nb, 0);
    for (int v = 0; v < na; ++v) ca[v] = a.degree(v);
    for (int v = 0; v < nb; ++v) cb[v] = b.degree(v);
    for (int round = 0; round < na + 2; ++round) {
        using Sig = std::pair<int, std::vector<int>>;
        auto signature = [](const Graph& g, const std::vector<int>& col, int v) {
            std::vector<int> ns;
            for (int u : g.neighbors(v)) ns.push_back(col[u]);
            std::sort(ns.begin(), ns.end());
            return Sig{col[v], std::move(ns)};
        };
        std::map<Sig, int> ids;
        std::vector<Sig> sa(na), sb(nb);
        for (int v = 0; v < na; ++v) sa[v] = signature(a, ca, v);
        for (int v = 0; v < nb; ++v) sb[v] = signature(b, cb, v);
        for (const auto& s : sa) ids.emplace(s, 0);
        for (const auto& s : sb) ids.emplace(s, 0);
        int next = 0;
        for (auto& [sig, id] : ids) id = next++;
        std::vector<int> na2(na), nb2(nb);
        for (int v = 0; v < na; ++v) na2[v] = ids[sa[v]];
        for (int v = 0; v < nb; ++v) nb2[v] = ids[sb[v]];
        bool stable = (na2 == ca && nb2 == cb);
        ca.swap(na2);
        cb.swap(nb2);
        if (stable) break;
    }
    std::vector<int> ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    return ha == hb;
}

bool extend_mapping(const Graph& a, const Graph& b, const std::vector<int>& order,
                    const std::vector<int>& ca, const std::vector<int>& cb,
                    std::vector<int>& phi, std::vector<bool>& used, size_t depth) {
    if (depth == order.size()) return true;
    int u = order[depth];
    for (int cand = 0; cand < b.order(); ++cand) {
        if (used[cand] || cb[cand] != ca[u]) continue;
        bool ok = true;
        for (size_t i = 0; i < depth && ok; ++i) {
            int w = order[i];
            if (a.has_edge(u, w) != b.has_edge(cand, phi[w])) ok = false;
        }
        if (!ok) continue;
        phi[u] = cand;
        used[cand] = true;
        if (extend_mapping(a, b, order, ca, cb, phi, used, depth + 1)) return true;
        used[cand] = false;
    }
    return false;
}

}  // namespace

bool is_isomorphic_small(const Graph& a, const Graph& b) {
    if (a.order() > 64 || b.order() > 64)
        throw std::invalid_argument("isomorphism test supports at most 64 vertices");
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> ca, cb;
    if (!refine_colors(a, b, ca, cb)) return false;

    int n = a.order();
    int top = *std::max_element(ca.begin(), ca.end());
    std::vector<int> count(top + 1, 0);
    for (int c : ca) ++count[c];
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (count[ca[x]] != count[ca[y]]) return count[ca[x]] < count[ca[y]];
        if (ca[x] != ca[y]) return ca[x] < ca[y];
        return x < y;
    });
    std::vector<int> phi(n, -1);
    std::vector<bool> used(n, false);
    return extend_mapping(a, b, order, ca, cb, phi, used, 0);
}

}  // namespace booktri
