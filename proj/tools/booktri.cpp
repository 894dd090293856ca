#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "booktri.h"

namespace {

using nlohmann::json;

struct CStr {
    char* p = nullptr;
    CStr() = default;
    CStr(const CStr&) = delete;
    CStr& operator=(const CStr&) = delete;
    ~CStr() { bt_string_free(p); }
};

struct GraphHandle {
    bt_graph* g = nullptr;
    GraphHandle() = default;
    GraphHandle(const GraphHandle&) = delete;
    GraphHandle& operator=(const GraphHandle&) = delete;
    GraphHandle(GraphHandle&& other) noexcept : g(other.g) { other.g = nullptr; }
    GraphHandle& operator=(GraphHandle&& other) noexcept {
        std::swap(g, other.g);
        return *this;
    }
    ~GraphHandle() { bt_graph_free(g); }
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check_api(bt_status st) {
    if (st != BT_OK) throw UsageError(std::string(bt_last_error()));
}

std::string trim(const std::string& s) {
    size_t lo = s.find_first_not_of(" \t\r\n");
    if (lo == std::string::npos) return "";
    size_t hi = s.find_last_not_of(" \t\r\n");
    return s.substr(lo, hi - lo + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(s);
    while (std::getline(in, cell, sep)) out.push_back(trim(cell));
    return out;
}

// graph6 codes from the given files, or standard input when none are named.
std::vector<std::string> load_graph_lines(const std::vector<std::string>& files) {
    std::vector<std::string> lines;
    auto drain = [&](std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            std::string t = trim(line);
            if (!t.empty()) lines.push_back(t);
        }
    };
    if (files.empty()) {
        drain(std::cin);
    } else {
        for (const std::string& path : files) {
            std::ifstream in(path);
            if (!in) throw UsageError("cannot open input file: " + path);
            drain(in);
        }
    }
    return lines;
}

int default_workers() {
    const char* env = std::getenv("BOOKTRI_WORKERS");
    if (!env) return 0;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0) return 0;
    return int(v);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open output file: " + path);
    out << text;
}

json parse_api(const CStr& s) { return json::parse(s.p); }

GraphHandle graph_from_line(const std::string& line) {
    GraphHandle h;
    check_api(bt_graph_from_graph6(line.c_str(), &h.g));
    return h;
}

struct Range {
    long long lo = 0;
    long long hi = 0;
};

Range parse_range(const std::string& text) {
    Range r;
    size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoll(text);
        } else {
            r.lo = std::stoll(text.substr(0, dots));
            r.hi = std::stoll(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw UsageError("cannot parse range: " + text);
    }
    if (r.lo > r.hi) throw UsageError("empty range: " + text);
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open params file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Workbench for book counts, triangle counts and prism "
                 "blow-ups in dense graphs"};
    app.require_subcommand(1);

    // construct
    auto* c_construct = app.add_subcommand(
        "construct", "Emit a graph6 code for a constructed graph");
    std::vector<long long> sbn_args;
    std::string blowup_arg;
    std::string out_construct;
    c_construct->add_option("--s-bn", sbn_args,
                            "n b: extremal prism blow-up on n vertices")
        ->expected(2);
    c_construct->add_option("--blowup", blowup_arg,
                            "six comma-separated prism part sizes");
    c_construct->add_option("-o,--output", out_construct, "output path");

    // invariants
    auto* c_invariants = app.add_subcommand(
        "invariants", "Edge/triangle/book/K4 counts per input graph");
    std::vector<std::string> inv_files;
    std::string out_invariants;
    c_invariants->add_option("files", inv_files, "graph6 input files");
    c_invariants->add_option("-o,--output", out_invariants, "output path");

    // check-bn
    auto* c_checkbn = app.add_subcommand(
        "check-bn", "Book-count inequality check per input graph");
    std::vector<std::string> bn_files;
    std::string out_checkbn;
    c_checkbn->add_option("files", bn_files, "graph6 input files");
    c_checkbn->add_option("-o,--output", out_checkbn, "output path");

    // verify-blowups
    auto* c_blowups = app.add_subcommand(
        "verify-blowups",
        "Exhaustive triangle-minimum scan over prism blow-up compositions");
    std::string blowups_n;
    long long blowups_b = -1;
    int blowups_workers = default_workers();
    std::string out_blowups;
    c_blowups->add_option("--n", blowups_n, "n or range A..B")->required();
    c_blowups->add_option("--b", blowups_b, "book bound (single-n mode)");
    c_blowups->add_option("--workers", blowups_workers,
                          "worker threads (0 = hardware)");
    c_blowups->add_option("-o,--output", out_blowups, "output path");

    // adjust-trace
    auto* c_adjust = app.add_subcommand(
        "adjust-trace", "Run the shift adjustment on a six-part vector");
    std::string adjust_vec;
    std::string adjust_b;
    std::string out_adjust;
    c_adjust->add_option("--vec", adjust_vec,
                         "six comma-separated rational entries")
        ->required();
    c_adjust->add_option("--b", adjust_b, "book bound (rational)")->required();
    c_adjust->add_option("-o,--output", out_adjust, "output path");

    // identity-suite
    auto* c_identity = app.add_subcommand(
        "identity-suite",
        "Randomized dual evaluation of the shift/transform identities");
    unsigned long long identity_seed = 1;
    long long identity_trials = 100000;
    std::string out_identity;
    c_identity->add_option("--seed", identity_seed, "random seed");
    c_identity->add_option("--trials", identity_trials, "trial count");
    c_identity->add_option("-o,--output", out_identity, "output path");

    // decompose
    auto* c_decompose = app.add_subcommand(
        "decompose", "Six-part decomposition per input graph");
    std::vector<std::string> dec_files;
    std::string dec_params;
    std::string out_decompose;
    c_decompose->add_option("files", dec_files, "graph6 input files");
    c_decompose->add_option("--params", dec_params,
                            "JSON file overriding decomposition parameters");
    c_decompose->add_option("-o,--output", out_decompose, "output path");

    // classify
    auto* c_classify = app.add_subcommand(
        "classify",
        "Decomposition, exceptional-set split and certificate per input graph");
    std::vector<std::string> cls_files;
    std::string cls_params;
    std::string out_classify;
    c_classify->add_option("files", cls_files, "graph6 input files");
    c_classify->add_option("--params", cls_params,
                           "JSON file overriding decomposition parameters");
    c_classify->add_option("-o,--output", out_classify, "output path");

    // exhaustive
    auto* c_exhaustive = app.add_subcommand(
        "exhaustive", "Exhaustive scan of all graphs on up to 8 vertices");
    int ex_n = 7;
    long long ex_edge_min = 0;
    std::string ex_checks = "bn,rademacher,edwards";
    int ex_chunks = 0;
    int ex_workers = default_workers();
    std::string out_exhaustive;
    c_exhaustive->add_option("--n", ex_n, "vertex count (at most 8)");
    c_exhaustive->add_option("--edge-min", ex_edge_min, "minimum edge count");
    c_exhaustive->add_option("--check", ex_checks,
                             "comma list from: bn, rademacher, edwards");
    c_exhaustive->add_option("--chunks", ex_chunks,
                             "parallel chunks (0 = worker count)");
    c_exhaustive->add_option("--workers", ex_workers,
                             "worker threads (0 = hardware)");
    c_exhaustive->add_option("-o,--output", out_exhaustive, "output path");

    // anneal
    auto* c_anneal = app.add_subcommand(
        "anneal", "Simulated annealing for low-triangle feasible graphs");
    int an_n = 0;
    long long an_b = 0;
    unsigned long long an_seed = 1;
    long long an_iters = 1000000;
    int an_restarts = 8;
    int an_workers = default_workers();
    double an_t_start = 2.0;
    double an_t_end = 0.01;
    std::string out_anneal;
    c_anneal->add_option("--n", an_n, "vertex count")->required();
    c_anneal->add_option("--b", an_b, "book bound")->required();
    c_anneal->add_option("--seed", an_seed, "random seed");
    c_anneal->add_option("--iters", an_iters, "iterations per restart");
    c_anneal->add_option("--restarts", an_restarts, "restart count");
    c_anneal->add_option("--workers", an_workers,
                         "worker threads (0 = hardware)");
    c_anneal->add_option("--t-start", an_t_start, "initial temperature");
    c_anneal->add_option("--t-end", an_t_end, "final temperature");
    c_anneal->add_option("-o,--output", out_anneal, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*c_construct) {
            if (sbn_args.empty() == blowup_arg.empty())
                throw UsageError(
                    "construct needs exactly one of --s-bn or --blowup");
            GraphHandle h;
            if (!sbn_args.empty()) {
                check_api(bt_graph_s_bn(int(sbn_args[0]), int(sbn_args[1]), &h.g));
            } else {
                std::vector<std::string> cells = split(blowup_arg, ',');
                if (cells.size() != 6)
                    throw UsageError("--blowup needs six comma-separated sizes");
                long long sizes[6];
                for (int i = 0; i < 6; ++i) {
                    try {
                        sizes[i] = std::stoll(cells[size_t(i)]);
                    } catch (const std::exception&) {
                        throw UsageError("cannot parse part size: " +
                                         cells[size_t(i)]);
                    }
                }
                check_api(bt_graph_prism_blowup(sizes, &h.g));
            }
            CStr g6;
            check_api(bt_graph_to_graph6(h.g, &g6.p));
            write_output(out_construct, std::string(g6.p) + "\n");
            return 0;
        }

        if (*c_invariants || *c_checkbn) {
            bool with_bn = bool(*c_checkbn);
            const auto& files = with_bn ? bn_files : inv_files;
            const auto& out_path = with_bn ? out_checkbn : out_invariants;
            std::vector<std::string> lines = load_graph_lines(files);
            json run{{"subcommand", with_bn ? "check-bn" : "invariants"},
                     {"files", files},
                     {"inputs", lines.size()},
                     {"output", out_path.empty() ? "-" : out_path}};
            std::ostringstream out;
            out << json{{"run", run}}.dump() << "\n";
            bool all_hold = true;
            for (const std::string& line : lines) {
                GraphHandle h = graph_from_line(line);
                CStr inv;
                check_api(bt_invariants_json(h.g, &inv.p));
                json doc;
                if (with_bn) {
                    CStr bn;
                    check_api(bt_bn_check_json(h.g, &bn.p));
                    json bn_doc = parse_api(bn);
                    all_hold = all_hold && bn_doc.at("holds").get<bool>();
                    doc = json{{"graph6", line},
                               {"invariants", parse_api(inv)},
                               {"bn", bn_doc}};
                } else {
                    doc = parse_api(inv);
                    doc["graph6"] = line;
                }
                out << doc.dump() << "\n";
            }
            write_output(out_path, out.str());
            return all_hold ? 0 : 1;
        }

        if (*c_blowups) {
            Range range = parse_range(blowups_n);
            bool single = range.lo == range.hi && blowups_b >= 0;
            json run{{"subcommand", "verify-blowups"},
                     {"n", blowups_n},
                     {"workers", blowups_workers},
                     {"output", out_blowups.empty() ? "-" : out_blowups}};
            if (blowups_b >= 0) run["b"] = blowups_b;
            std::ostringstream out;
            bool all_hold = true;
            auto run_one = [&](long long n, long long b) {
                CStr verdict;
                check_api(bt_verify_blowups_json(n, b, blowups_workers,
                                                 &verdict.p));
                json doc = parse_api(verdict);
                all_hold =
                    all_hold && doc.at("conjecture_holds_in_class").get<bool>();
                return doc;
            };
            if (single) {
                json doc{{"run", run},
                         {"verdict", run_one(range.lo, blowups_b)}};
                out << doc.dump() << "\n";
            } else {
                if (blowups_b >= 0)
                    throw UsageError("--b is only valid with a single --n");
                out << json{{"run", run}}.dump() << "\n";
                for (long long n = range.lo; n <= range.hi; ++n) {
                    long long b_lo = (n + 5) / 6;
                    long long b_hi = (n + 3) / 4 - 1;
                    for (long long b = b_lo; b <= b_hi; ++b)
                        out << run_one(n, b).dump() << "\n";
                }
            }
            write_output(out_blowups, out.str());
            return all_hold ? 0 : 1;
        }

        if (*c_adjust) {
            std::vector<std::string> cells = split(adjust_vec, ',');
            if (cells.size() != 6)
                throw UsageError("--vec needs six comma-separated entries");
            json entries = json::array();
            for (const std::string& cell : cells) entries.push_back(cell);
            std::string entries_text = entries.dump();
            CStr result;
            check_api(bt_adjust_trace_json(entries_text.c_str(),
                                           adjust_b.c_str(), &result.p));
            json doc = parse_api(result);
            doc["run"] = json{{"subcommand", "adjust-trace"},
                              {"vec", adjust_vec},
                              {"b", adjust_b},
                              {"output", out_adjust.empty() ? "-" : out_adjust}};
            write_output(out_adjust, doc.dump() + "\n");
            bool mono = doc.at("f_nonincreasing").get<bool>() &&
                        doc.at("h2_nondecreasing").get<bool>();
            return mono ? 0 : 1;
        }

        if (*c_identity) {
            CStr report;
            check_api(
                bt_identity_suite_json(identity_seed, identity_trials, &report.p));
            json rep = parse_api(report);
            json doc{{"run",
                      json{{"subcommand", "identity-suite"},
                           {"seed", identity_seed},
                           {"trials", identity_trials},
                           {"output", out_identity.empty() ? "-" : out_identity}}},
                     {"report", rep}};
            write_output(out_identity, doc.dump() + "\n");
            return rep.at("total_mismatches").get<long long>() == 0 ? 0 : 1;
        }

        if (*c_decompose || *c_classify) {
            bool full = bool(*c_classify);
            const auto& files = full ? cls_files : dec_files;
            const auto& params_path = full ? cls_params : dec_params;
            const auto& out_path = full ? out_classify : out_decompose;
            std::string params_text;
            if (!params_path.empty()) params_text = read_file(params_path);
            std::vector<std::string> lines = load_graph_lines(files);
            json run{{"subcommand", full ? "classify" : "decompose"},
                     {"files", files},
                     {"inputs", lines.size()},
                     {"params_file", params_path.empty() ? "-" : params_path},
                     {"output", out_path.empty() ? "-" : out_path}};
            std::ostringstream out;
            out << json{{"run", run}}.dump() << "\n";
            bool all_ok = true;
            for (const std::string& line : lines) {
                GraphHandle h = graph_from_line(line);
                CStr result;
                const char* params_arg =
                    params_text.empty() ? nullptr : params_text.c_str();
                check_api(full ? bt_classify_json(h.g, params_arg, &result.p)
                               : bt_decompose_json(h.g, params_arg, &result.p));
                json doc = parse_api(result);
                doc["graph6"] = line;
                all_ok = all_ok &&
                         doc.at("decomposition").at("ok").get<bool>();
                out << doc.dump() << "\n";
            }
            write_output(out_path, out.str());
            return all_ok ? 0 : 1;
        }

        if (*c_exhaustive) {
            json cfg{{"n", ex_n},
                     {"edge_min", ex_edge_min},
                     {"check_rademacher", false},
                     {"check_edwards", false},
                     {"check_bn", false},
                     {"chunks", ex_chunks > 0 ? ex_chunks : ex_workers}};
            for (const std::string& name : split(ex_checks, ',')) {
                if (name == "bn")
                    cfg["check_bn"] = true;
                else if (name == "rademacher")
                    cfg["check_rademacher"] = true;
                else if (name == "edwards")
                    cfg["check_edwards"] = true;
                else if (!name.empty())
                    throw UsageError("unknown check: " + name);
            }
            std::string cfg_text = cfg.dump();
            CStr report;
            check_api(bt_exhaustive_scan_json(cfg_text.c_str(), &report.p));
            json rep = parse_api(report);
            json doc{{"run",
                      json{{"subcommand", "exhaustive"},
                           {"checks", ex_checks},
                           {"workers", ex_workers},
                           {"output",
                            out_exhaustive.empty() ? "-" : out_exhaustive}}},
                     {"report", rep}};
            write_output(out_exhaustive, doc.dump() + "\n");
            long long bad = rep.at("rademacher_violations").get<long long>() +
                            rep.at("edwards_violations").get<long long>() +
                            rep.at("bn_violations").get<long long>();
            return bad == 0 ? 0 : 1;
        }

        if (*c_anneal) {
            json cfg{{"n", an_n},
                     {"b", an_b},
                     {"seed", an_seed},
                     {"iters", an_iters},
                     {"restarts", an_restarts},
                     {"workers", an_workers},
                     {"t_start", an_t_start},
                     {"t_end", an_t_end}};
            std::string cfg_text = cfg.dump();
            CStr result;
            check_api(bt_anneal_json(cfg_text.c_str(), &result.p));
            json doc = parse_api(result);
            doc["run"] = json{{"subcommand", "anneal"},
                              {"output", out_anneal.empty() ? "-" : out_anneal}};
            write_output(out_anneal, doc.dump() + "\n");
            return doc.at("report").at("counterexample_found").get<bool>() ? 1
                                                                           : 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
