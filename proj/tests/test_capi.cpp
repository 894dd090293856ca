#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstring>
#include <string>

#include <booktri.h>

using nlohmann::json;

namespace {

struct Str {
    char* p = nullptr;
    ~Str() { bt_string_free(p); }
    std::string view() const { return p ? std::string(p) : std::string(); }
};

struct GraphPtr {
    bt_graph* g = nullptr;
    ~GraphPtr() { bt_graph_free(g); }
};

}  // namespace

TEST_CASE("graph construction and round trip through the C interface") {
    GraphPtr s;
    REQUIRE(bt_graph_s_bn(12, 2, &s.g) == BT_OK);
    CHECK(bt_graph_order(s.g) == 12);
    Str code;
    REQUIRE(bt_graph_to_graph6(s.g, &code.p) == BT_OK);
    CHECK(code.view() == "K]~uE?rKo^`}");

    GraphPtr parsed;
    REQUIRE(bt_graph_from_graph6(code.p, &parsed.g) == BT_OK);
    CHECK(bt_graph_order(parsed.g) == 12);

    GraphPtr bip;
    REQUIRE(bt_graph_complete_bipartite(3, 4, &bip.g) == BT_OK);
    CHECK(bt_graph_order(bip.g) == 7);

    long long sizes[6] = {3, 3, 0, 3, 3, 1};
    GraphPtr blown;
    REQUIRE(bt_graph_prism_blowup(sizes, &blown.g) == BT_OK);
    CHECK(bt_graph_order(blown.g) == 13);
    CHECK(std::string(bt_last_error()).empty());
}

TEST_CASE("error paths set a readable message and reject null outputs") {
    CHECK(bt_graph_order(nullptr) == -1);

    GraphPtr g;
    CHECK(bt_graph_from_graph6("not graph6!!", &g.g) == BT_INVALID_ARGUMENT);
    CHECK(g.g == nullptr);
    CHECK(!std::string(bt_last_error()).empty());

    CHECK(bt_graph_from_graph6(nullptr, &g.g) == BT_INVALID_ARGUMENT);
    CHECK(bt_graph_from_graph6("DQc", nullptr) == BT_INVALID_ARGUMENT);
    CHECK(bt_graph_s_bn(13, 2, &g.g) == BT_INVALID_ARGUMENT);
    CHECK(!std::string(bt_last_error()).empty());

    Str out;
    CHECK(bt_invariants_json(nullptr, &out.p) == BT_INVALID_ARGUMENT);
    CHECK(bt_anneal_json("{\"n\": 12, \"b\": 3}", &out.p) ==
          BT_INVALID_ARGUMENT);
    CHECK(bt_exhaustive_scan_json("{\"n\": 99}", &out.p) ==
          BT_INVALID_ARGUMENT);
    CHECK(bt_exhaustive_scan_json("]broken", &out.p) == BT_INVALID_ARGUMENT);

    GraphPtr ok;
    REQUIRE(bt_graph_s_bn(12, 2, &ok.g) == BT_OK);
    CHECK(std::string(bt_last_error()).empty());
}

TEST_CASE("invariants and inequality reports parse as JSON") {
    GraphPtr g;
    REQUIRE(bt_graph_s_bn(12, 2, &g.g) == BT_OK);
    Str inv;
    REQUIRE(bt_invariants_json(g.g, &inv.p) == BT_OK);
    json j = json::parse(inv.view());
    CHECK(j.at("n") == 12);
    CHECK(j.at("e") == 36);
    CHECK(j.at("t") == 16);
    CHECK(j.at("b") == 2);
    CHECK(j.at("k4") == 0);
    CHECK(j.at("degrees").size() == 12);

    Str bn;
    REQUIRE(bt_bn_check_json(g.g, &bn.p) == BT_OK);
    json jb = json::parse(bn.view());
    CHECK(jb.at("lhs") == 192);
    CHECK(jb.at("rhs") == 192);
    CHECK(jb.at("holds") == true);
}

TEST_CASE("blow-up verification verdicts arrive as JSON") {
    Str out;
    REQUIRE(bt_verify_blowups_json(12, 2, 2, &out.p) == BT_OK);
    json j = json::parse(out.view());
    CHECK(j.at("n") == 12);
    CHECK(j.at("b") == 2);
    CHECK(j.at("bound") == 16);
    CHECK(j.at("min_t") == 16);
    CHECK(j.at("conjecture_holds_in_class") == true);
    CHECK(bt_verify_blowups_json(12, 3, 1, &out.p) == BT_INVALID_ARGUMENT);
}

TEST_CASE("adjustment traces carry the monotonicity verdicts") {
    Str out;
    REQUIRE(bt_adjust_trace_json("[5, 4, 3, 5, 4, 3]", "4", &out.p) == BT_OK);
    json j = json::parse(out.view());
    CHECK(j.at("f_nonincreasing") == true);
    CHECK(j.at("h2_nondecreasing") == true);
    CHECK(j.at("trace").at("status") == "a2_reached");
    CHECK(j.at("trace").at("steps").size() == 1);
    CHECK(j.at("trace").at("steps")[0].at("label") == "inc23");

    REQUIRE(bt_adjust_trace_json("[\"10\", \"9\", \"0\", \"10\", \"9\", \"8\"]",
                                 "5", &out.p) == BT_OK);
    json stalled = json::parse(out.view());
    CHECK(stalled.at("trace").at("status") == "stalled");

    CHECK(bt_adjust_trace_json("[1, 2]", "1", &out.p) == BT_INVALID_ARGUMENT);
    CHECK(bt_adjust_trace_json("[\"1/2\", 4, 3, 5, 4, 3]", "2", &out.p) ==
          BT_INVALID_ARGUMENT);
}

TEST_CASE("identity suite and scan reports flow through") {
    Str out;
    REQUIRE(bt_identity_suite_json(1, 500, &out.p) == BT_OK);
    json j = json::parse(out.view());
    CHECK(j.at("seed") == 1);
    CHECK(j.at("trials") == 500);
    CHECK(j.at("total_mismatches") == 0);
    CHECK(j.at("checks").size() == 5);

    Str scan;
    REQUIRE(bt_exhaustive_scan_json(
                "{\"n\": 5, \"edge_min\": 7, \"check_rademacher\": true}",
                &scan.p) == BT_OK);
    json js = json::parse(scan.view());
    CHECK(js.at("graphs_checked") == 176);
    CHECK(js.at("rademacher_violations") == 0);
    CHECK(js.at("config").at("n") == 5);
}

TEST_CASE("decomposition and classification reports flow through") {
    GraphPtr g;
    REQUIRE(bt_graph_s_bn(24, 4, &g.g) == BT_OK);
    Str dec;
    REQUIRE(bt_decompose_json(g.g, nullptr, &dec.p) == BT_OK);
    json jd = json::parse(dec.view());
    CHECK(jd.at("decomposition").at("ok") == true);
    CHECK(jd.at("decomposition").at("exceptional").empty());
    CHECK(jd.at("params").at("tau0") == 0.05);

    Str cls;
    REQUIRE(bt_classify_json(g.g, "{\"tau1\": 0.02}", &cls.p) == BT_OK);
    json jc = json::parse(cls.view());
    CHECK(jc.at("params").at("tau1") == 0.02);
    CHECK(jc.at("split").at("r") == 0);
    CHECK(jc.at("certificate").at("f") == "0");
    CHECK(jc.at("certificate").at("f_nonpositive") == true);
    CHECK(jc.at("certificate").at("h1_nonnegative") == true);
    CHECK(jc.at("certificate").at("h2_nonnegative") == true);
}

TEST_CASE("annealing reports flow through with defaults overridden") {
    Str out;
    REQUIRE(bt_anneal_json(
                "{\"n\": 12, \"b\": 2, \"seed\": 1, \"iters\": 5000, "
                "\"restarts\": 2, \"workers\": 1}",
                &out.p) == BT_OK);
    json j = json::parse(out.view());
    CHECK(j.at("config").at("iters") == 5000);
    CHECK(j.at("report").at("bound") == 16);
    CHECK(j.at("report").at("counterexample_found") == false);
    CHECK(j.at("report").at("per_restart").size() == 2);
}
