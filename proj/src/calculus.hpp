#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rational.hpp"

namespace booktri {

// Six part sizes, 0-indexed internally (entry i holds a_{i+1}).
struct PartVector {
    std::array<Rational, 6> a{};

    Rational norm1() const;
    Rational max_entry() const;
    bool is_integral() const;
};

// Throws std::invalid_argument if any entry is negative.
PartVector make_part_vector(const std::array<Rational, 6>& entries);

struct CalculusParams {
    Rational b;
    int64_t r = 0;
    Rational n1;
};

Rational s_fn(const PartVector& v);                              // sum of products over the 9 pattern edges
Rational t_fn(const PartVector& v);                              // a1 a2 a3 + a4 a5 a6
Rational floor_quarter_norm_sq(const PartVector& v);             // floor(norm1^2 / 4)
Rational f_fn(const PartVector& v, const Rational& b);
Rational h1_fn(const PartVector& v, int64_t r);
Rational h2_fn(const PartVector& v, const Rational& b, int64_t r);

// (b, b, floor((n-4b)/2), b, b, ceil((n-4b)/2)); requires n/6 <= b <= n/4.
PartVector extremal_vector(int64_t n, int64_t b);

// Entries 4-6 sorted nonincreasing; entries 1-3 untouched.
PartVector sort_back_triple(const PartVector& v);

enum class AdjustTerminal { A2Reached, Stalled, FloorHit };

std::string adjust_terminal_name(AdjustTerminal t);

struct AdjustStep {
    std::string label;  // "inc23", "inc56", "swap45"
    PartVector vec;
    Rational f;
    Rational h2;
};

// F/H2 along the trace are evaluated with r = 0; the norm is preserved by
// every move, so the -norm*r/12 term is constant and monotonicity is
// unaffected by the choice of r.
struct AdjustmentTrace {
    PartVector initial;
    Rational initial_f;
    Rational initial_h2;
    Rational b;
    std::vector<AdjustStep> steps;
    PartVector terminal;
    AdjustTerminal status = AdjustTerminal::A2Reached;
};

// One-unit shifts raising a2 (from a3) or a5 (from a6), with the entry-4/5
// swap once a5 reaches a1, until a2 = a1 or no legal move remains.
// Requires: integer entries; a1 = max; a1 >= a2 >= a3; a4 >= a5 >= a6;
// a1 >= b + 1.  Moves that would drive an entry negative are illegal
// (terminal status FloorHit); a second arrival of a5 at a1 with a2 < a1
// leaves no legal move (Stalled).
AdjustmentTrace adjust_a2_to_a1(const PartVector& v, const Rational& b);

// Entries 4 and 5 replaced by their midpoint. Requires a1 = a2 = max entry
// and a6 minimal among entries 4-6.
PartVector equalize_a4_a5(const PartVector& v);

// (a1, a2, a3+a4+a5-4b+2a1, 2b-a1, 2b-a1, a6); rejects negative results.
PartVector case1_transform(const PartVector& v, const Rational& b);

// (a1, a2, a3+a4+a5-2a1, a1, a1, a6); rejects a negative third entry.
PartVector case2_transform(const PartVector& v);

struct IdentityCheck {
    std::string name;
    int64_t checked = 0;
    int64_t mismatches = 0;
    std::vector<std::string> first_mismatches;  // at most 4 descriptions
};

struct IdentitySuiteReport {
    uint64_t seed = 0;
    int64_t trials = 0;
    std::vector<IdentityCheck> checks;
    int64_t total_mismatches = 0;
};

// Randomized dual evaluation (definition vs closed form) of the replacement,
// case-1, case-2 and collapsed-vector identities.
IdentitySuiteReport delta_identity_suite(uint64_t seed, int64_t trials);

}  // namespace booktri
