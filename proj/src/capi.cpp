#include "booktri.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "blowup.hpp"
#include "calculus.hpp"
#include "graph.hpp"
#include "invariants.hpp"
#include "json_io.hpp"
#include "rational.hpp"
#include "search.hpp"
#include "structure.hpp"

struct bt_graph {
    booktri::Graph g;
};

namespace {

using nlohmann::json;

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
bt_status guarded(Fn&& fn) {
    t_last_error.clear();
    try {
        fn();
        return BT_OK;
    } catch (const std::invalid_argument& e) {
        t_last_error = e.what();
        return BT_INVALID_ARGUMENT;
    } catch (const json::exception& e) {
        t_last_error = e.what();
        return BT_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return BT_INTERNAL_ERROR;
    } catch (...) {
        t_last_error = "unknown failure";
        return BT_INTERNAL_ERROR;
    }
}

bt_status fail_invalid(const char* message) {
    t_last_error = message;
    return BT_INVALID_ARGUMENT;
}

booktri::Rational parse_rational_or_throw(const std::string& text) {
    auto parsed = booktri::parse_rational(text);
    if (!parsed)
        throw std::invalid_argument("cannot parse rational from '" + text + "'");
    return *parsed;
}

booktri::PartVector part_vector_from_json(const std::string& entries_json) {
    json j = json::parse(entries_json);
    if (!j.is_array() || j.size() != 6)
        throw std::invalid_argument("expected a JSON array of six entries");
    std::array<booktri::Rational, 6> entries;
    for (int i = 0; i < 6; ++i) {
        const json& cell = j[size_t(i)];
        if (cell.is_string())
            entries[size_t(i)] = parse_rational_or_throw(cell.get<std::string>());
        else if (cell.is_number_integer())
            entries[size_t(i)] = booktri::Rational(cell.get<int64_t>());
        else
            throw std::invalid_argument(
                "part entries must be rational strings or integers");
    }
    return booktri::make_part_vector(entries);
}

template <typename Config>
Config config_from_json(const char* config_json) {
    Config cfg;
    if (config_json && *config_json) json::parse(config_json).get_to(cfg);
    return cfg;
}

}  // namespace

extern "C" {

const char* bt_last_error(void) { return t_last_error.c_str(); }

void bt_string_free(char* s) { std::free(s); }

void bt_graph_free(bt_graph* g) { delete g; }

bt_status bt_graph_from_graph6(const char* line, bt_graph** out) {
    if (!line || !out) return fail_invalid("null argument");
    return guarded([&] { *out = new bt_graph{booktri::parse_graph6(line)}; });
}

bt_status bt_graph_s_bn(int n, int b, bt_graph** out) {
    if (!out) return fail_invalid("null argument");
    return guarded([&] { *out = new bt_graph{booktri::construct_s_bn(n, b)}; });
}

bt_status bt_graph_complete_bipartite(int p, int q, bt_graph** out) {
    if (!out) return fail_invalid("null argument");
    return guarded(
        [&] { *out = new bt_graph{booktri::complete_bipartite(p, q)}; });
}

bt_status bt_graph_prism_blowup(const long long sizes[6], bt_graph** out) {
    if (!sizes || !out) return fail_invalid("null argument");
    return guarded([&] {
        std::vector<int64_t> parts(sizes, sizes + 6);
        *out = new bt_graph{booktri::blowup(booktri::prism_pattern(), parts)};
    });
}

bt_status bt_graph_to_graph6(const bt_graph* g, char** out) {
    if (!g || !out) return fail_invalid("null argument");
    return guarded([&] { *out = dup_string(booktri::write_graph6(g->g)); });
}

int bt_graph_order(const bt_graph* g) { return g ? g->g.order() : -1; }

bt_status bt_invariants_json(const bt_graph* g, char** out_json) {
    if (!g || !out_json) return fail_invalid("null argument");
    return guarded([&] {
        json j = booktri::compute_invariants(g->g);
        *out_json = dup_string(j.dump());
    });
}

bt_status bt_bn_check_json(const bt_graph* g, char** out_json) {
    if (!g || !out_json) return fail_invalid("null argument");
    return guarded([&] {
        json j = booktri::bn_inequality(g->g);
        *out_json = dup_string(j.dump());
    });
}

bt_status bt_verify_blowups_json(long long n, long long b, int workers,
                                 char** out_json) {
    if (!out_json) return fail_invalid("null argument");
    return guarded([&] {
        json j = booktri::verify_conjecture_blowups(n, b, workers);
        *out_json = dup_string(j.dump());
    });
}

bt_status bt_adjust_trace_json(const char* entries_json,
                               const char* b_rational, char** out_json) {
    if (!entries_json || !b_rational || !out_json)
        return fail_invalid("null argument");
    return guarded([&] {
        booktri::PartVector v = part_vector_from_json(entries_json);
        booktri::Rational b = parse_rational_or_throw(b_rational);
        booktri::AdjustmentTrace trace = booktri::adjust_a2_to_a1(v, b);
        bool f_mono = true;
        bool h2_mono = true;
        const booktri::Rational* f_prev = &trace.initial_f;
        const booktri::Rational* h2_prev = &trace.initial_h2;
        for (const booktri::AdjustStep& step : trace.steps) {
            f_mono = f_mono && step.f <= *f_prev;
            h2_mono = h2_mono && step.h2 >= *h2_prev;
            f_prev = &step.f;
            h2_prev = &step.h2;
        }
        json j{{"trace", trace},
               {"f_nonincreasing", f_mono},
               {"h2_nondecreasing", h2_mono}};
        *out_json = dup_string(j.dump());
    });
}

bt_status bt_identity_suite_json(unsigned long long seed, long long trials,
                                 char** out_json) {
    if (!out_json) return fail_invalid("null argument");
    return guarded([&] {
        json j = booktri::delta_identity_suite(seed, trials);
        *out_json = dup_string(j.dump());
    });
}

bt_status bt_decompose_json(const bt_graph* g, const char* params_json,
                            char** out_json) {
    if (!g || !out_json) return fail_invalid("null argument");
    return guarded([&] {
        auto params = config_from_json<booktri::StabilityParams>(params_json);
        json j{{"params", params},
               {"decomposition", booktri::decompose_prism(g->g, params)}};
        *out_json = dup_string(j.dump());
    });
}

bt_status bt_classify_json(const bt_graph* g, const char* params_json,
                           char** out_json) {
    if (!g || !out_json) return fail_invalid("null argument");
    return guarded([&] {
        auto params = config_from_json<booktri::StabilityParams>(params_json);
        booktri::DecompositionResult dec = booktri::decompose_prism(g->g, params);
        json j{{"params", params}, {"decomposition", dec}};
        if (dec.ok) {
            booktri::ExceptionalSplit split =
                booktri::classify_exceptional(g->g, dec, params);
            j["split"] = split;
            j["certificate"] =
                booktri::evaluate_certificate(split, dec.b_effective);
        }
        *out_json = dup_string(j.dump());
    });
}

bt_status bt_exhaustive_scan_json(const char* config_json, char** out_json) {
    if (!out_json) return fail_invalid("null argument");
    return guarded([&] {
        auto cfg = config_from_json<booktri::ScanConfig>(config_json);
        json j = booktri::exhaustive_scan(cfg);
        *out_json = dup_string(j.dump());
    });
}

bt_status bt_anneal_json(const char* config_json, char** out_json) {
    if (!out_json) return fail_invalid("null argument");
    return guarded([&] {
        auto cfg = config_from_json<booktri::AnnealConfig>(config_json);
        json j{{"config", cfg},
               {"report", booktri::anneal_min_triangles(cfg)}};
        *out_json = dup_string(j.dump());
    });
}

}  // extern "C"
