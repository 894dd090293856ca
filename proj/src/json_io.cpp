#include "json_io.hpp"

#include <utility>
#include <vector>

namespace booktri {

namespace {

using nlohmann::json;

json rationals_to_json(const std::array<Rational, 6>& a) {
    json out = json::array();
    for (const Rational& x : a) out.push_back(rational_str(x));
    return out;
}

}  // namespace

void to_json(json& j, const PartVector& v) { j = rationals_to_json(v.a); }

void to_json(json& j, const InvariantReport& r) {
    j = json{{"n", r.n},
             {"e", r.e},
             {"t", r.t},
             {"b", r.b},
             {"k4", r.k4},
             {"k4_iso3", r.k4_iso3},
             {"degree_sq_sum", r.degree_sq_sum},
             {"degrees", r.degrees}};
}

void to_json(json& j, const BnCheck& c) {
    j = json{{"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}};
}

void to_json(json& j, const AdjustStep& s) {
    j = json{{"label", s.label},
             {"vec", s.vec},
             {"f", rational_str(s.f)},
             {"h2", rational_str(s.h2)}};
}

void to_json(json& j, const AdjustmentTrace& t) {
    j = json{{"initial", t.initial},
             {"initial_f", rational_str(t.initial_f)},
             {"initial_h2", rational_str(t.initial_h2)},
             {"b", rational_str(t.b)},
             {"steps", t.steps},
             {"terminal", t.terminal},
             {"status", adjust_terminal_name(t.status)}};
}

void to_json(json& j, const IdentityCheck& c) {
    j = json{{"name", c.name},
             {"checked", c.checked},
             {"mismatches", c.mismatches},
             {"first_mismatches", c.first_mismatches}};
}

void to_json(json& j, const IdentitySuiteReport& r) {
    j = json{{"seed", r.seed},
             {"trials", r.trials},
             {"checks", r.checks},
             {"total_mismatches", r.total_mismatches}};
}

void to_json(json& j, const BlowupVerdict& v) {
    j = json{{"n", v.n},
             {"b", v.b},
             {"vectors_scanned", v.vectors_scanned},
             {"admissible", v.admissible},
             {"bound", v.bound},
             {"has_positive_admissible", v.has_positive_admissible},
             {"min_t", v.min_t},
             {"minimizers", v.minimizers},
             {"minimizer_count", v.minimizer_count},
             {"minimizer_orbits", v.minimizer_orbits},
             {"t0_admissible", v.t0_admissible},
             {"t0_all_balanced_bipartite", v.t0_all_balanced_bipartite},
             {"t0_violations", v.t0_violations},
             {"minimizers_are_extremal_orbit", v.minimizers_are_extremal_orbit},
             {"conjecture_holds_in_class", v.conjecture_holds_in_class}};
}

void to_json(json& j, const StabilityParams& p) {
    j = json{{"tau0", p.tau0},
             {"tau_tri", p.tau_tri},
             {"c0", p.c0},
             {"tau1", p.tau1},
             {"c1", p.c1},
             {"b", p.b},
             {"iterate_bad_sets", p.iterate_bad_sets}};
}

void from_json(const json& j, StabilityParams& p) {
    if (j.contains("tau0")) j.at("tau0").get_to(p.tau0);
    if (j.contains("tau_tri")) j.at("tau_tri").get_to(p.tau_tri);
    if (j.contains("c0")) j.at("c0").get_to(p.c0);
    if (j.contains("tau1")) j.at("tau1").get_to(p.tau1);
    if (j.contains("c1")) j.at("c1").get_to(p.c1);
    if (j.contains("b")) j.at("b").get_to(p.b);
    if (j.contains("iterate_bad_sets"))
        j.at("iterate_bad_sets").get_to(p.iterate_bad_sets);
}

void to_json(json& j, const DecompositionResult& d) {
    j = json{{"ok", d.ok},
             {"failed_step", d.failed_step},
             {"parts", d.parts},
             {"exceptional", d.exceptional},
             {"anchor1", d.anchor1},
             {"anchor2", d.anchor2},
             {"b_effective", d.b_effective},
             {"r0_size", d.r0_size},
             {"overlap_w2w3", d.overlap_w2w3},
             {"overlap_w5w6", d.overlap_w5w6},
             {"b1_removed", d.b1_removed},
             {"b2_removed", d.b2_removed},
             {"orientation_vote", d.orientation_vote},
             {"orientation_swapped", d.orientation_swapped},
             {"orientation_ambiguous", d.orientation_ambiguous},
             {"orientation_outliers", d.orientation_outliers},
             {"relabeling", d.relabeling},
             {"size_deviation", d.size_deviation},
             {"edges_inside_parts", d.edges_inside_parts},
             {"edges_non_prism_pairs", d.edges_non_prism_pairs},
             {"min_prism_edge_degree", d.min_prism_edge_degree}};
}

void to_json(json& j, const ExceptionalSplit& s) {
    json phi = json::array();
    for (const auto& [vertex, slot] : s.phi)
        phi.push_back(json::array({vertex, slot}));
    json multi = json::array();
    for (const auto& [vertex, slot] : s.phi_multi)
        multi.push_back(json::array({vertex, slot}));
    j = json{{"r1", s.r1},
             {"r2", s.r2},
             {"r3", s.r3},
             {"phi", std::move(phi)},
             {"phi_violations", s.phi_violations},
             {"phi_multi", std::move(multi)},
             {"a", s.a},
             {"r", s.r}};
}

void to_json(json& j, const Certificate& c) {
    j = json{{"canonical_a", rationals_to_json(c.canonical_a)},
             {"b", rational_str(c.b)},
             {"r", c.r},
             {"f", rational_str(c.f)},
             {"h1", rational_str(c.h1)},
             {"h2", rational_str(c.h2)},
             {"f_nonpositive", c.f_nonpositive},
             {"h1_nonnegative", c.h1_nonnegative},
             {"h2_nonnegative", c.h2_nonnegative}};
}

void to_json(json& j, const ScanConfig& c) {
    j = json{{"n", c.n},
             {"edge_min", c.edge_min},
             {"check_rademacher", c.check_rademacher},
             {"check_edwards", c.check_edwards},
             {"check_bn", c.check_bn},
             {"chunks", c.chunks}};
}

void from_json(const json& j, ScanConfig& c) {
    if (j.contains("n")) j.at("n").get_to(c.n);
    if (j.contains("edge_min")) j.at("edge_min").get_to(c.edge_min);
    if (j.contains("check_rademacher"))
        j.at("check_rademacher").get_to(c.check_rademacher);
    if (j.contains("check_edwards")) j.at("check_edwards").get_to(c.check_edwards);
    if (j.contains("check_bn")) j.at("check_bn").get_to(c.check_bn);
    if (j.contains("chunks")) j.at("chunks").get_to(c.chunks);
}

void to_json(json& j, const ScanViolation& v) {
    j = json{{"check", v.check}, {"graph6", v.graph6}};
}

void to_json(json& j, const ScanReport& r) {
    j = json{{"config", r.cfg},
             {"masks_total", r.masks_total},
             {"graphs_checked", r.graphs_checked},
             {"rademacher_violations", r.rademacher_violations},
             {"edwards_violations", r.edwards_violations},
             {"bn_violations", r.bn_violations},
             {"examples", r.examples}};
}

void to_json(json& j, const AnnealConfig& c) {
    j = json{{"n", c.n},
             {"b", c.b},
             {"seed", c.seed},
             {"iters", c.iters},
             {"restarts", c.restarts},
             {"workers", c.workers},
             {"t_start", c.t_start},
             {"t_end", c.t_end}};
}

void from_json(const json& j, AnnealConfig& c) {
    if (j.contains("n")) j.at("n").get_to(c.n);
    if (j.contains("b")) j.at("b").get_to(c.b);
    if (j.contains("seed")) j.at("seed").get_to(c.seed);
    if (j.contains("iters")) j.at("iters").get_to(c.iters);
    if (j.contains("restarts")) j.at("restarts").get_to(c.restarts);
    if (j.contains("workers")) j.at("workers").get_to(c.workers);
    if (j.contains("t_start")) j.at("t_start").get_to(c.t_start);
    if (j.contains("t_end")) j.at("t_end").get_to(c.t_end);
}

void to_json(json& j, const RestartOutcome& o) {
    j = json{{"restart", o.restart},
             {"init_kind", o.init_kind},
             {"found_feasible", o.found_feasible},
             {"best_t", o.best_t},
             {"best_graph6", o.best_graph6},
             {"bipartite_hits", o.bipartite_hits},
             {"audits", o.audits},
             {"accepted", o.accepted}};
}

void to_json(json& j, const SearchReport& r) {
    j = json{{"n", r.n},
             {"b", r.b},
             {"seed", r.seed},
             {"iterations", r.iterations},
             {"restarts", r.restarts},
             {"bound", r.bound},
             {"best_t", r.best_t},
             {"best_graph", r.best_graph},
             {"counterexample_found", r.counterexample_found},
             {"excluded_bipartite_hits", r.excluded_bipartite_hits},
             {"audits_performed", r.audits_performed},
             {"per_restart", r.per_restart},
             {"note", r.note}};
}

}  // namespace booktri
