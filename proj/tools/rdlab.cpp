#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rdlab/certificates.hpp"
#include "rdlab/enumerate.hpp"
#include "rdlab/families.hpp"
#include "rdlab/io.hpp"
#include "rdlab/oracle.hpp"
#include "rdlab/treedp.hpp"
#include "rdlab/verify.hpp"

namespace {

using nlohmann::ordered_json;

// Exit codes shared with the test suite: 2 parse failure, 3 non-tree
// input where a tree is required, 4 cap exceeded.
constexpr int kExitParse = 2;
constexpr int kExitNotTree = 3;
constexpr int kExitCap = 4;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw rdlab::ParseError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ordered_json set_report(const std::string& invariant, int n, int value,
                        const std::vector<rdlab::VertexSet>& witnesses,
                        const char* method = nullptr) {
    ordered_json j;
    j["n"] = n;
    j["invariant"] = invariant;
    if (method) j["method"] = method;
    j["value"] = value;
    j["witness_count"] = witnesses.size();
    auto arr = ordered_json::array();
    for (const auto& w : witnesses) arr.push_back(w.ids());
    j["witnesses"] = std::move(arr);
    return j;
}

ordered_json assignment_report(const std::string& invariant, int n, int value,
                               const std::vector<rdlab::Assignment>& witnesses,
                               const char* method = nullptr) {
    ordered_json j;
    j["n"] = n;
    j["invariant"] = invariant;
    if (method) j["method"] = method;
    j["value"] = value;
    j["witness_count"] = witnesses.size();
    auto arr = ordered_json::array();
    for (const auto& w : witnesses) arr.push_back(w.labels());
    j["witnesses"] = std::move(arr);
    return j;
}

struct SolveConfig {
    std::string input;
    std::string format = "edgelist";
    std::string method = "dp";
    std::string output = "text";
};

int cmd_solve(const SolveConfig& cfg) {
    rdlab::Graph g = rdlab::parse_graph(slurp(cfg.input), cfg.format);
    if (cfg.method == "dp") {
        rdlab::Tree t(g);  // throws InvalidGraph for non-trees
        auto r = rdlab::gamma_r_tree(t);
        auto ri = rdlab::gamma_ri_tree(t);
        if (cfg.output == "json") {
            std::cout << set_report("gamma_r", g.order(), r.value, {r.witness}, "treedp").dump()
                      << "\n"
                      << assignment_report("gamma_ri", g.order(), ri.value, {ri.witness}, "treedp")
                             .dump()
                      << "\n";
        } else {
            std::cout << "gamma_r = " << r.value << "  witness:";
            for (int v : r.witness) std::cout << ' ' << v;
            std::cout << "\ngamma_rI = " << ri.value << "  witness:";
            for (int v : ri.witness.labels()) std::cout << ' ' << v;
            std::cout << "\n";
        }
    } else {
        auto r = rdlab::gamma_r_bruteforce(g);
        auto ri = rdlab::gamma_ri_bruteforce(g);
        if (cfg.output == "json") {
            std::cout << set_report("gamma_r", g.order(), r.value, r.witnesses).dump() << "\n"
                      << assignment_report("gamma_ri", g.order(), ri.value, ri.witnesses).dump()
                      << "\n";
        } else {
            std::cout << "gamma_r = " << r.value << "  (" << r.witnesses.size()
                      << " optimal sets; first:";
            for (int v : r.witnesses.front()) std::cout << ' ' << v;
            std::cout << ")\ngamma_rI = " << ri.value << "  (" << ri.witnesses.size()
                      << " optimal assignments; first:";
            for (int v : ri.witnesses.front().labels()) std::cout << ' ' << v;
            std::cout << ")\n";
        }
    }
    return 0;
}

struct CheckConfig {
    std::string input;
    std::string format = "edgelist";
    std::string kind;
    std::string set_csv;
    std::string assignment_path;
    std::string output = "text";
};

int cmd_check(const CheckConfig& cfg) {
    rdlab::Graph g = rdlab::parse_graph(slurp(cfg.input), cfg.format);
    rdlab::CertCheck result;
    if (cfg.kind == "ridf") {
        if (cfg.assignment_path.empty())
            throw rdlab::ParseError("check --kind ridf needs --assignment");
        rdlab::Assignment f = rdlab::parse_assignment(slurp(cfg.assignment_path));
        result = rdlab::is_ridf(g, f);
    } else {
        std::vector<int> ids;
        std::stringstream ss(cfg.set_csv);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) ids.push_back(std::stoi(tok));
        rdlab::VertexSet s(std::move(ids));
        if (cfg.kind == "dominating")
            result = rdlab::is_dominating(g, s);
        else if (cfg.kind == "rds")
            result = rdlab::is_rds(g, s);
        else if (cfg.kind == "packing")
            result = rdlab::is_packing(g, s);
        else
            throw rdlab::ParseError("unknown certificate kind: " + cfg.kind);
    }
    if (cfg.output == "json") {
        ordered_json j;
        j["kind"] = cfg.kind;
        j["ok"] = result.ok;
        if (!result.ok) {
            j["witness"] = result.witness;
            if (result.witness2 >= 0) j["witness2"] = result.witness2;
            j["reason"] = result.reason;
        }
        std::cout << j.dump() << "\n";
    } else if (result.ok) {
        std::cout << "valid " << cfg.kind << "\n";
    } else {
        std::cout << "invalid " << cfg.kind <<": vertex " << result.witness;
        if (result.witness2 >= 0) std::cout << " / " << result.witness2;
        std::cout << " (" << result.reason << ")\n";
    }
    return result.ok ? 0 : 1;
}

struct RecognizeConfig {
    std::string input;
    std::string format = "edgelist";
    std::string family = "F";
    std::string output = "text";
};

int cmd_recognize(const RecognizeConfig& cfg) {
    rdlab::Graph g = rdlab::parse_graph(slurp(cfg.input), cfg.format);
    rdlab::Tree t(g);
    std::string verdict;
    std::optional<rdlab::ConstructionTrace> trace;
    if (cfg.family == "F") {
        trace = rdlab::recognize_f(t);
        verdict = trace ? "member" : "none";
    } else {
        rdlab::HVerdict v = rdlab::recognize_h(t);
        switch (v.kind) {
            case rdlab::HVerdict::Kind::Member:
                verdict = "member";
                trace = v.trace;
                break;
            case rdlab::HVerdict::Kind::StarException:
                verdict = "star-exception";
                break;
            case rdlab::HVerdict::Kind::None:
                verdict = "none";
                break;
        }
    }
    if (cfg.output == "json") {
        ordered_json j;
        j["family"] = cfg.family;
        j["verdict"] = verdict;
        if (trace) j["trace"] = ordered_json::parse(rdlab::trace_to_json(*trace));
        std::cout << j.dump() << "\n";
    } else {
        std::cout << verdict << "\n";
        if (trace) std::cout << rdlab::trace_to_json(*trace) << "\n";
    }
    return verdict == "none" ? 1 : 0;
}

struct GenerateConfig {
    std::string family = "F";
    int budget = 12;
    std::uint64_t seed = 0;
    int count = 1;
    std::string emit = "trace";
};

int cmd_generate(const GenerateConfig& cfg) {
    rdlab::Family fam = cfg.family == "H" ? rdlab::Family::H : rdlab::Family::F;
    for (int i = 0; i < cfg.count; ++i) {
        rdlab::ConstructionTrace trace =
            rdlab::sample_trace(fam, cfg.budget, cfg.seed + static_cast<std::uint64_t>(i));
        if (cfg.emit == "trace" || cfg.emit == "both")
            std::cout << rdlab::trace_to_json(trace) << "\n";
        if (cfg.emit == "tree" || cfg.emit == "both") {
            rdlab::Replayed rep = rdlab::replay(trace);
            std::cout << rdlab::to_graph6(rep.tree.graph()) << "\n";
        }
    }
    return 0;
}

struct EnumerateConfig {
    int n = 1;
    std::string format = "graph6";
};

int cmd_enumerate(const EnumerateConfig& cfg) {
    rdlab::TreeStream stream = rdlab::all_trees(cfg.n);
    stream.for_each([&](const rdlab::Tree& t) {
        if (cfg.format == "graph6") {
            std::cout << rdlab::to_graph6(t.graph()) << "\n";
        } else {
            // one line per tree: n m, then the edge pairs
            std::cout << t.order() << ' ' << t.graph().edge_count();
            for (auto [u, v] : t.graph().edges()) std::cout << ' ' << u << ' ' << v;
            std::cout << "\n";
        }
    });
    return 0;
}

struct VerifyConfig {
    std::string claim = "all";
    int n_max = 10;
    int count = 100;
    int budget = 14;
    std::uint64_t seed = 0;
    int workers = 1;
    std::string report_dir = ".";
    bool timings = false;
};

int cmd_verify(const VerifyConfig& cfg) {
    rdlab::VerifyOptions opt;
    opt.workers = cfg.workers;
    opt.seed = cfg.seed;
    std::vector<rdlab::SweepReport> reports;
    auto want = [&](const std::string& c) { return cfg.claim == "all" || cfg.claim == c; };
    if (want("sandwich")) reports.push_back(rdlab::verify_bound_sandwich(cfg.n_max, opt));
    if (want("theorem-H")) reports.push_back(rdlab::verify_theorem_h(cfg.n_max, opt));
    if (want("theorem-F")) reports.push_back(rdlab::verify_theorem_f(cfg.n_max, opt));
    if (want("lemmas-H"))
        reports.push_back(rdlab::verify_lemmas_on_traces(rdlab::Family::H, cfg.count, cfg.budget,
                                                         cfg.seed, opt));
    if (want("lemmas-F"))
        reports.push_back(rdlab::verify_lemmas_on_traces(rdlab::Family::F, cfg.count, cfg.budget,
                                                         cfg.seed, opt));
    if (reports.empty()) throw rdlab::ParseError("unknown claim: " + cfg.claim);

    bool all_pass = true;
    for (const auto& report : reports) {
        all_pass = all_pass && report.pass();
        std::filesystem::path out =
            std::filesystem::path(cfg.report_dir) / ("sweep_" + report.claim + ".json");
        std::ofstream file(out);
        file << rdlab::report_json(report, cfg.timings);
        std::cout << (report.pass() ? "PASS" : "FAIL") << ' ' << report.claim << ": "
                  << report.trees_checked << " trees checked, " << report.failures.size()
                  << " failures -> " << out.string() << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solvers, recognizers and verification sweeps for restrained "
                 "domination and restrained Italian domination on trees"};
    app.require_subcommand(1);

    SolveConfig solve_cfg;
    auto* solve = app.add_subcommand("solve", "compute gamma_r and gamma_rI of a graph");
    solve->add_option("--input", solve_cfg.input, "input file, or - for stdin")->required();
    solve->add_option("--format", solve_cfg.format, "edgelist|graph6")
        ->check(CLI::IsMember({"edgelist", "graph6"}))
        ->envname("RDLAB_FORMAT");
    solve->add_option("--method", solve_cfg.method, "dp (trees only) or brute")
        ->check(CLI::IsMember({"dp", "brute"}))
        ->envname("RDLAB_METHOD");
    solve->add_option("--output", solve_cfg.output, "text|json")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("RDLAB_OUTPUT");

    CheckConfig check_cfg;
    auto* check = app.add_subcommand("check", "run a certificate predicate on a graph");
    check->add_option("--input", check_cfg.input)->required();
    check->add_option("--format", check_cfg.format)
        ->check(CLI::IsMember({"edgelist", "graph6"}))
        ->envname("RDLAB_FORMAT");
    check->add_option("--kind", check_cfg.kind, "dominating|rds|ridf|packing")->required();
    check->add_option("--set", check_cfg.set_csv, "comma-separated vertex ids");
    check->add_option("--assignment", check_cfg.assignment_path, "assignment text file");
    check->add_option("--output", check_cfg.output)->check(CLI::IsMember({"text", "json"}));

    RecognizeConfig rec_cfg;
    auto* rec = app.add_subcommand("recognize", "constructively test family membership");
    rec->add_option("--input", rec_cfg.input)->required();
    rec->add_option("--format", rec_cfg.format)
        ->check(CLI::IsMember({"edgelist", "graph6"}))
        ->envname("RDLAB_FORMAT");
    rec->add_option("--family", rec_cfg.family, "H|F")
        ->check(CLI::IsMember({"H", "F"}))
        ->required();
    rec->add_option("--output", rec_cfg.output)->check(CLI::IsMember({"text", "json"}));

    GenerateConfig gen_cfg;
    auto* gen = app.add_subcommand("generate", "sample random construction traces");
    gen->add_option("--family", gen_cfg.family, "H|F")->check(CLI::IsMember({"H", "F"}));
    gen->add_option("--budget", gen_cfg.budget, "max vertices of the replayed tree");
    gen->add_option("--seed", gen_cfg.seed)->required()->envname("RDLAB_SEED");
    gen->add_option("--count", gen_cfg.count);
    gen->add_option("--emit", gen_cfg.emit, "trace|tree|both")
        ->check(CLI::IsMember({"trace", "tree", "both"}));

    EnumerateConfig enum_cfg;
    auto* enumerate = app.add_subcommand("enumerate", "stream all trees of one order");
    enumerate->add_option("--n", enum_cfg.n)->required();
    enumerate->add_option("--format", enum_cfg.format, "graph6|edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}))
        ->envname("RDLAB_FORMAT");

    VerifyConfig ver_cfg;
    auto* verify = app.add_subcommand("verify", "run verification sweeps and write reports");
    verify->add_option("--claim", ver_cfg.claim,
                       "sandwich|theorem-H|theorem-F|lemmas-H|lemmas-F|all")
        ->check(CLI::IsMember({"sandwich", "theorem-H", "theorem-F", "lemmas-H", "lemmas-F",
                               "all"}));
    verify->add_option("--n-max", ver_cfg.n_max)->envname("RDLAB_NMAX");
    verify->add_option("--count", ver_cfg.count, "random traces per lemma suite");
    verify->add_option("--budget", ver_cfg.budget, "vertex budget per random trace");
    auto* seed_opt = verify->add_option("--seed", ver_cfg.seed)->envname("RDLAB_SEED");
    verify->add_option("--workers", ver_cfg.workers)->envname("RDLAB_WORKERS");
    verify->add_option("--report-dir", ver_cfg.report_dir)->envname("RDLAB_REPORT_DIR");
    verify->add_flag("--timings", ver_cfg.timings, "include wall time in report files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*solve) return cmd_solve(solve_cfg);
        if (*check) return cmd_check(check_cfg);
        if (*rec) return cmd_recognize(rec_cfg);
        if (*gen) return cmd_generate(gen_cfg);
        if (*enumerate) return cmd_enumerate(enum_cfg);
        if (*verify) {
            const bool randomized = ver_cfg.claim == "all" || ver_cfg.claim == "lemmas-H" ||
                                    ver_cfg.claim == "lemmas-F";
            if (randomized && seed_opt->count() == 0 && !std::getenv("RDLAB_SEED")) {
                std::cerr << "verify: randomized claims need --seed (or RDLAB_SEED)\n";
                return kExitParse;
            }
            return cmd_verify(ver_cfg);
        }
    } catch (const rdlab::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const rdlab::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const rdlab::TraceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const rdlab::InvalidGraph& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotTree;
    }
    return 0;
}
