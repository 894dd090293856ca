#include "calculus.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace booktri {
namespace {

constexpr int kPrismEdges[9][2] = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4},
                                   {2, 5}, {3, 4}, {4, 5}, {3, 5}};

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

std::string vec_str(const PartVector& v) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < 6; ++i) os << (i ? "," : "") << rational_str(v.a[i]);
    os << ")";
    return os.str();
}

int64_t uniform_int(std::mt19937_64& rng, int64_t lo, int64_t hi) {
    return lo + int64_t(rng() % uint64_t(hi - lo + 1));
}

}  // namespace

Rational PartVector::norm1() const {
    Rational s = 0;
    for (const auto& x : a) s += x;
    return s;
}

Rational PartVector::max_entry() const { return *std::max_element(a.begin(), a.end()); }

bool PartVector::is_integral() const {
    for (const auto& x : a)
        if (!is_integer(x)) return false;
    return true;
}

PartVector make_part_vector(const std::array<Rational, 6>& entries) {
    for (const auto& x : entries)
        if (x < 0) throw std::invalid_argument("part vector entries must be nonnegative");
    return PartVector{entries};
}

Rational s_fn(const PartVector& v) {
    Rational s = 0;
    for (const auto& e : kPrismEdges) s += v.a[e[0]] * v.a[e[1]];
    return s;
}

Rational t_fn(const PartVector& v) {
    return v.a[0] * v.a[1] * v.a[2] + v.a[3] * v.a[4] * v.a[5];
}

Rational floor_quarter_norm_sq(const PartVector& v) {
    Rational n1 = v.norm1();
    return Rational(rfloor(n1 * n1 / 4));
}

Rational f_fn(const PartVector& v, const Rational& b) {
    Rational n1 = v.norm1();
    return t_fn(v) - v.a[0] * (s_fn(v) - floor_quarter_norm_sq(v)) - b * b * (n1 - 4 * b);
}

Rational h1_fn(const PartVector& v, int64_t r) {
    return s_fn(v) - floor_quarter_norm_sq(v) - v.norm1() * r / 12;
}

Rational h2_fn(const PartVector& v, const Rational& b, int64_t r) {
    return s_fn(v) - v.a[2] * (v.a[0] - b) - floor_quarter_norm_sq(v) - v.norm1() * r / 12;
}

PartVector extremal_vector(int64_t n, int64_t b) {
    require(b >= 0 && 6 * b >= n && 4 * b <= n, "extremal vector requires n/6 <= b <= n/4");
    int64_t m = n - 4 * b;
    PartVector v;
    v.a = {Rational(b), Rational(b), Rational(m / 2),
           Rational(b), Rational(b), Rational(m - m / 2)};
    return v;
}

PartVector sort_back_triple(const PartVector& v) {
    PartVector out = v;
    std::sort(out.a.begin() + 3, out.a.end(),
              [](const Rational& x, const Rational& y) { return x > y; });
    return out;
}

std::string adjust_terminal_name(AdjustTerminal t) {
    switch (t) {
        case AdjustTerminal::A2Reached: return "a2_reached";
        case AdjustTerminal::Stalled: return "stalled";
        case AdjustTerminal::FloorHit: return "floor_hit";
    }
    return "unknown";
}

AdjustmentTrace adjust_a2_to_a1(const PartVector& v, const Rational& b) {
    require(v.is_integral(), "adjustment requires integer entries");
    const Rational a1 = v.a[0];
    require(a1 == v.max_entry(), "adjustment requires a1 maximal");
    require(v.a[0] >= v.a[1] && v.a[1] >= v.a[2], "adjustment requires a1 >= a2 >= a3");
    require(v.a[3] >= v.a[4] && v.a[4] >= v.a[5], "adjustment requires a4 >= a5 >= a6");
    require(a1 >= b + 1, "adjustment requires a1 >= b + 1");

    AdjustmentTrace tr;
    tr.initial = v;
    tr.b = b;
    tr.initial_f = f_fn(v, b);
    tr.initial_h2 = h2_fn(v, b, 0);

    PartVector cur = v;
    bool swapped = false;
    const int64_t cap = 4 * to_int64(a1) + 8;

    auto record = [&](const char* label) {
        tr.steps.push_back({label, cur, f_fn(cur, b), h2_fn(cur, b, 0)});
        if (int64_t(tr.steps.size()) > cap)
            throw std::logic_error("adjustment exceeded its step bound");
    };

    for (;;) {
        if (cur.a[1] == a1) {
            tr.status = AdjustTerminal::A2Reached;
            break;
        }
        if (cur.a[4] == a1) {
            if (!swapped) {
                std::swap(cur.a[3], cur.a[4]);
                swapped = true;
                record("swap45");
                continue;
            }
            tr.status = AdjustTerminal::Stalled;
            break;
        }
        if (cur.a[4] - cur.a[5] >= cur.a[1] - cur.a[2]) {
            if (cur.a[2] == 0) {
                tr.status = AdjustTerminal::FloorHit;
                break;
            }
            cur.a[1] += 1;
            cur.a[2] -= 1;
            record("inc23");
        } else {
            if (cur.a[5] == 0) {
                tr.status = AdjustTerminal::FloorHit;
                break;
            }
            cur.a[4] += 1;
            cur.a[5] -= 1;
            record("inc56");
        }
    }
    tr.terminal = cur;
    return tr;
}

PartVector equalize_a4_a5(const PartVector& v) {
    require(v.a[0] == v.a[1], "equalize requires a1 = a2");
    require(v.a[0] == v.max_entry(), "equalize requires a1 = a2 = max entry");
    require(v.a[5] <= v.a[3] && v.a[5] <= v.a[4], "equalize requires a6 minimal among entries 4-6");
    PartVector out = v;
    Rational mid = (v.a[3] + v.a[4]) / 2;
    out.a[3] = mid;
    out.a[4] = mid;
    return out;
}

PartVector case1_transform(const PartVector& v, const Rational& b) {
    PartVector out = v;
    out.a[2] = v.a[2] + v.a[3] + v.a[4] - 4 * b + 2 * v.a[0];
    out.a[3] = 2 * b - v.a[0];
    out.a[4] = 2 * b - v.a[0];
    for (const auto& x : out.a)
        if (x < 0) throw std::invalid_argument("case-1 transform produced a negative entry");
    return out;
}

PartVector case2_transform(const PartVector& v) {
    PartVector out = v;
    out.a[2] = v.a[2] + v.a[3] + v.a[4] - 2 * v.a[0];
    out.a[3] = v.a[0];
    out.a[4] = v.a[0];
    if (out.a[2] < 0) throw std::invalid_argument("case-2 transform produced a negative third entry");
    return out;
}

IdentitySuiteReport delta_identity_suite(uint64_t seed, int64_t trials) {
    require(trials >= 1, "identity suite requires trials >= 1");
    IdentitySuiteReport rep;
    rep.seed = seed;
    rep.trials = trials;
    rep.checks = {{"collapsed_vector_f", 0, 0, {}},
                  {"replace_back_triple", 0, 0, {}},
                  {"case1_f_delta", 0, 0, {}},
                  {"case2_h2_delta", 0, 0, {}},
                  {"equalize_f_h2_delta", 0, 0, {}}};
    std::mt19937_64 rng(seed);

    auto note = [&](IdentityCheck& c, const PartVector& v, const Rational& lhs,
                    const Rational& rhs) {
        ++c.checked;
        if (lhs != rhs) {
            ++c.mismatches;
            if (c.first_mismatches.size() < 4) {
                std::ostringstream os;
                os << "a=" << vec_str(v) << " lhs=" << rational_str(lhs)
                   << " rhs=" << rational_str(rhs);
                c.first_mismatches.push_back(os.str());
            }
        }
    };

    for (int64_t trial = 0; trial < trials; ++trial) {
        // Collapsed vector: F of (a1,a1,ceil(m/2),a1,a1,floor(m/2)) against
        // its closed form in a1, n1, b.
        {
            int64_t a1 = uniform_int(rng, 0, 12);
            int64_t n1 = 4 * a1 + uniform_int(rng, 0, 30);
            Rational b(uniform_int(rng, 0, 48), uniform_int(rng, 1, 4));
            int64_t m = n1 - 4 * a1;
            PartVector w;
            w.a = {Rational(a1), Rational(a1), Rational(m - m / 2),
                   Rational(a1), Rational(a1), Rational(m / 2)};
            Rational lhs = f_fn(w, b);
            Rational rhs = (b - a1) * (4 * Rational(a1) * a1 + 4 * b * b + 4 * b * a1 -
                                       Rational(a1) * n1 - b * n1);
            note(rep.checks[0], w, lhs, rhs);
        }
        // Replacing the back triple by the collapsed vector: F difference
        // against the four-term closed form.
        {
            PartVector p;
            for (;;) {
                int64_t a1 = uniform_int(rng, 1, 12);
                int64_t a2 = uniform_int(rng, 0, a1);
                int64_t a3 = uniform_int(rng, 0, a2);
                int64_t a4 = uniform_int(rng, 0, a1);
                int64_t a5 = uniform_int(rng, 0, a4);
                int64_t a6 = uniform_int(rng, 0, a5);
                if (a2 + a3 + a4 + a5 + a6 < 3 * a1) continue;
                p.a = {Rational(a1), Rational(a2), Rational(a3),
                       Rational(a4), Rational(a5), Rational(a6)};
                break;
            }
            Rational b(uniform_int(rng, 0, 24), uniform_int(rng, 1, 4));
            int64_t n1 = to_int64(p.norm1());
            int64_t a1v = to_int64(p.a[0]);
            int64_t m = n1 - 4 * a1v;
            PartVector w;
            w.a = {Rational(a1v), Rational(a1v), Rational(m - m / 2),
                   Rational(a1v), Rational(a1v), Rational(m / 2)};
            Rational lhs = f_fn(w, b) - f_fn(p, b);
            Rational d = p.a[2] + p.a[1] + p.a[4] + p.a[3] - 3 * p.a[0] - p.a[5];
            Rational rhs = p.a[0] * (p.a[1] - p.a[0]) * (p.a[4] - p.a[5]) -
                           p.a[3] * (p.a[0] - p.a[4]) * (p.a[0] - p.a[5]) -
                           p.a[0] * (p.a[0] - p.a[3]) * (p.a[0] - p.a[5]) -
                           p.a[0] * Rational(rfloor(d * d / 4));
            note(rep.checks[1], p, lhs, rhs);
        }
        // Case-1 transform: F difference against its closed form.
        {
            int64_t a1 = uniform_int(rng, 1, 12);
            int64_t a3 = uniform_int(rng, 0, a1);
            int64_t h = uniform_int(rng, 0, 2 * a1);  // 2*a4
            Rational a4(h, 2);
            Rational a6(uniform_int(rng, 0, h), 2);
            int64_t u = uniform_int(rng, 0, a3 + h);
            Rational b(2 * a1 + u, 4);
            PartVector p;
            p.a = {Rational(a1), Rational(a1), Rational(a3), a4, a4, a6};
            Rational lhs = f_fn(case1_transform(p, b), b) - f_fn(p, b);
            Rational rhs = (p.a[0] - 2 * b + p.a[3]) * (2 * b + p.a[3] - p.a[0]) *
                           (p.a[0] - p.a[5]);
            note(rep.checks[2], p, lhs, rhs);
        }
        // Case-2 transform: H2 difference against its closed form.
        {
            int64_t a1 = uniform_int(rng, 1, 12);
            int64_t h = uniform_int(rng, a1, 2 * a1);  // 2*a4
            Rational a4(h, 2);
            int64_t lo = 2 * a1 - h;  // smallest a3 keeping the new third entry nonnegative
            if (lo < 0) lo = 0;
            int64_t a3 = uniform_int(rng, lo, a1);
            Rational a6(uniform_int(rng, 0, h), 2);
            Rational b(uniform_int(rng, 0, 8 * a1), 4);
            int64_t r = uniform_int(rng, 0, 20);
            PartVector p;
            p.a = {Rational(a1), Rational(a1), Rational(a3), a4, a4, a6};
            Rational lhs = h2_fn(case2_transform(p), b, r) - h2_fn(p, b, r);
            Rational rhs = (p.a[0] - p.a[3]) * (p.a[0] - 2 * b + p.a[3]);
            note(rep.checks[3], p, lhs, rhs);
        }
        // Averaging a4 and a5: F and H2 differences against their closed
        // forms.
        {
            int64_t a1 = uniform_int(rng, 1, 12);
            int64_t a3 = uniform_int(rng, 0, a1);
            int64_t h4 = uniform_int(rng, 0, 2 * a1);
            int64_t h5 = uniform_int(rng, 0, 2 * a1);
            Rational a4(h4, 2);
            Rational a5(h5, 2);
            Rational a6(uniform_int(rng, 0, std::min(h4, h5)), 2);
            Rational b(uniform_int(rng, 0, 8 * a1), 4);
            int64_t r = uniform_int(rng, 0, 20);
            PartVector p;
            p.a = {Rational(a1), Rational(a1), Rational(a3), a4, a5, a6};
            PartVector q = equalize_a4_a5(p);
            Rational gap = (a4 - a5) * (a4 - a5) / 4;
            note(rep.checks[4], p, f_fn(q, b) - f_fn(p, b), gap * (a6 - a1));
            note(rep.checks[4], p, h2_fn(q, b, r) - h2_fn(p, b, r), gap);
        }
    }
    for (const auto& c : rep.checks) rep.total_mismatches += c.mismatches;
    return rep;
}

}  // namespace booktri
