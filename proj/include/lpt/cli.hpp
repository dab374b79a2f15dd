#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lpt/generators.hpp"
#include "lpt/hgraph.hpp"
#include "lpt/io.hpp"
#include "lpt/pipelines.hpp"
#include "lpt/report.hpp"
#include "lpt/verify.hpp"

namespace lpt::cli {

// Exit codes: 0 ok, 1 usage/parse, 2 class membership, 3 oracle size,
// 4 bound or claim violation.
enum ExitCode { kOk = 0, kUsage = 1, kClassMembership = 2, kOracleSize = 3, kViolation = 4 };

namespace detail {

inline void emit(const Report& report, bool as_json, std::ostream& out) {
    if (as_json) out << report.json().dump(2) << "\n";
    else out << report.text();
}

inline int run_oracle(const std::string& path, const OracleLimits& limits, bool as_json,
                      std::ostream& out) {
    Graph g = read_edge_list_file(path);
    Report report("oracle");
    report.add("input", path);
    report.add("input-hash", hex64(graph_hash(g)));
    report.add("n", g.vertex_count());
    report.add("m", g.edge_count());
    report.add("longest-path-length", longest_path_length(g, limits));
    auto paths = enumerate_longest_paths(g, limits);
    report.add("longest-path-count", (long long)paths.paths.size());
    auto [k, witness] = exact_lpt(g, limits);
    report.add("exact-lpt", k);
    report.add("witness", witness);
    emit(report, as_json, out);
    return kOk;
}

inline int run_pipeline(const std::string& cls, const std::string& path, const OracleLimits& limits,
                        bool as_json, std::ostream& out) {
    Graph g = read_edge_list_file(path);
    Report report("pipeline");
    report.add("class", cls);
    report.add("input", path);
    report.add("input-hash", hex64(graph_hash(g)));
    report.add("n", g.vertex_count());
    report.add("m", g.edge_count());

    TransversalCertificate cert;
    if (cls == "p5free") cert = ptfree_transversal(g, 5, limits);
    else if (cls == "p6free") cert = ptfree_transversal(g, 6, limits);
    else if (cls == "bullchair") {
        BullChairTrace trace;
        cert = bullchair_transversal(g, limits, &trace);
        report.add("branch", branch_name(trace.branch));
    } else if (cls == "chordal") {
        ChordalTrace trace;
        cert = chordal_refined_transversal(g, limits, &trace);
        report.add("clique", trace.clique);
        report.add("matched-clique-index", trace.matched_index);
    } else throw InvalidArgument("unknown pipeline class " + cls);

    report.add_certificate(cert);
    emit(report, as_json, out);
    if (cert.bound_claimed && cert.transversal.size() > *cert.bound_claimed) return kViolation;
    return kOk;
}

inline int run_hgraph_extract(const std::string& rep_path, const std::string& td_path,
                              const OracleLimits& limits, bool as_json, std::ostream& out) {
    std::ifstream in(rep_path);
    if (!in) throw Error("cannot open " + rep_path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(int(e.byte), std::string("json: ") + e.what());
    }
    HRepresentation rep = representation_from_json(j);
    rep = normalize_nice(rep);

    TreeDecomposition td;
    if (!td_path.empty()) {
        std::ifstream tin(td_path);
        if (!tin) throw Error("cannot open " + td_path);
        td = read_pace_decomposition(tin, rep.h_phi.vertex_count());
        std::string why;
        if (!validate_tree_decomposition(rep.h_phi, td, &why))
            throw InvalidArgument("supplied decomposition invalid: " + why);
    } else {
        td = decompose(rep);
    }

    Graph g = realize(rep);
    ExtractionTrace trace;
    TransversalCertificate cert = extract_q(rep, td, limits, &trace);
    ClaimsReport claims = verify_claims(trace, g, limits);

    Report report("hgraph-extract");
    report.add("input", rep_path);
    report.add("input-hash", hex64(fnv1a(j.dump())));
    report.add("host-n", rep.h.vertex_count());
    report.add("host-m", rep.h.edge_count());
    report.add("subdivision-n", rep.h_phi.vertex_count());
    report.add("graph-n", g.vertex_count());
    report.add("graph-m", g.edge_count());
    report.add("decomposition-width", td.width());
    report.add("decomposition-exact", td.exact_width);
    report.add("helly-node", trace.helly_node);
    report.add("bag", trace.x_bag);
    report.add("intermediate-n", trace.intermediate.graph.vertex_count());
    report.add("intermediate-m", trace.intermediate.graph.edge_count());
    report.add("s1-bound", trace.host_edges + trace.width + 1);
    report.add("s1-ok", trace.s1_ok);
    report.add("s2-bound", trace.x_bag.size() * 2 * trace.intermediate_edges);
    report.add("s2-ok", trace.s2_ok);
    if (trace.theorem_bound) {
        report.add("theorem-bound", *trace.theorem_bound);
        report.add("theorem-ok", trace.theorem_ok);
    } else {
        report.add("theorem-bound", "suppressed (|E(H)| < 2)");
    }
    report.add("claim1", claims.claim1);
    report.add("claim2", claims.claim2);
    report.add_certificate(cert);
    emit(report, as_json, out);
    if (!trace.s1_ok || !trace.s2_ok || !claims.all() ||
        (trace.exact_width && trace.theorem_bound && !trace.theorem_ok))
        return kViolation;
    return kOk;
}

inline int run_gen(const std::string& kind, std::uint64_t seed, int n, double density, double p,
                   const std::vector<std::string>& forbidden, const std::string& method,
                   const std::string& fixture_name, std::string out_prefix, bool as_json,
                   std::ostream& out) {
    Report report("gen");
    report.add("kind", kind);

    auto write_graph = [&](const Graph& g, const std::string& file) {
        write_edge_list_file(g, file);
        report.add("graph-file", file);
        report.add("input-hash", hex64(graph_hash(g)));
        report.add("n", g.vertex_count());
        report.add("m", g.edge_count());
    };
    auto write_rep = [&](const HRepresentation& rep, const std::string& file) {
        std::ofstream o(file, std::ios::binary);
        if (!o) throw Error("cannot open " + file + " for writing");
        o << representation_to_json(rep).dump(2) << "\n";
        report.add("representation-file", file);
    };

    if (kind == "fixture") {
        if (fixture_name != "walther-zamfirescu")
            throw InvalidArgument("unknown fixture " + fixture_name);
        if (out_prefix.empty()) out_prefix = "walther_zamfirescu";
        report.add("name", fixture_name);
        write_graph(fixture_walther_zamfirescu(), out_prefix + ".el");
        emit(report, as_json, out);
        return kOk;
    }

    report.add("seed", (long long)seed);
    report.add("requested-n", n);
    if (out_prefix.empty()) out_prefix = kind + "_" + std::to_string(seed);

    if (kind == "chordal") {
        report.add("method", method);
        if (method == "peo") {
            write_graph(gen_chordal_peo(seed, n, density), out_prefix + ".el");
        } else if (method == "subtree") {
            auto inst = gen_chordal(seed, n, density);
            write_graph(inst.graph, out_prefix + ".el");
            write_rep(inst.rep, out_prefix + ".json");
        } else throw InvalidArgument("unknown chordal method " + method);
    } else if (kind == "interval") {
        auto inst = gen_interval(seed, n);
        write_graph(inst.graph, out_prefix + ".el");
        write_rep(inst.rep, out_prefix + ".json");
    } else if (kind == "circular-arc") {
        auto inst = gen_circular_arc(seed, n);
        write_graph(inst.graph, out_prefix + ".el");
        write_rep(inst.rep, out_prefix + ".json");
    } else if (kind == "filtered") {
        std::vector<Graph> pats;
        for (const std::string& name : forbidden) {
            if (name == "p5") pats.push_back(patterns::path(5));
            else if (name == "p6") pats.push_back(patterns::path(6));
            else if (name == "p7") pats.push_back(patterns::path(7));
            else if (name == "bull") pats.push_back(patterns::bull());
            else if (name == "chair") pats.push_back(patterns::chair());
            else if (name == "claw") pats.push_back(patterns::claw());
            else throw InvalidArgument("unknown forbidden pattern " + name);
        }
        auto g = gen_class_filtered(seed, n, p, pats);
        if (!g) {
            report.add("result", "budget-exhausted");
            emit(report, as_json, out);
            return kViolation;
        }
        std::string names;
        for (const auto& f : forbidden) names += (names.empty() ? "" : ",") + f;
        report.add("forbidden", names);
        write_graph(*g, out_prefix + ".el");
    } else throw InvalidArgument("unknown generator " + kind);

    emit(report, as_json, out);
    return kOk;
}

inline int run_verify(const std::string& suite, std::uint64_t seed, int trials, int jobs,
                      bool as_json, std::ostream& out) {
    SuiteOptions opt;
    opt.seed = seed;
    opt.trials = trials;
    opt.jobs = jobs;
    SuiteResult res = run_suite(suite, opt);

    Report report("verify");
    report.add("suite", res.suite);
    report.add("seed", (long long)seed);
    report.add("trials", res.trials);
    report.add("violations", res.violations);
    report.add("skipped", res.skipped);
    for (const auto& [k, v] : res.counters) report.add(k, v);
    for (size_t i = 0; i < res.notes.size(); i++)
        report.add("note-" + std::to_string(i), res.notes[i]);
    report.add("result", res.pass() ? "pass" : "fail");
    emit(report, as_json, out);
    return res.pass() ? kOk : kViolation;
}

} // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"longest path transversal toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable report");

    OracleLimits limits;
    app.add_option("--dp-limit", limits.dp_limit, "exact DP vertex limit");
    app.add_option("--enum-limit", limits.enum_limit, "path enumeration vertex limit");
    app.add_option("--path-cap", limits.path_cap, "max longest paths kept");

    auto* oracle_cmd = app.add_subcommand("oracle", "exact longest-path facts for a graph");
    std::string oracle_path;
    oracle_cmd->add_option("graph", oracle_path, "edge-list file")->required();

    auto* pipeline_cmd = app.add_subcommand("pipeline", "run a class-specific pipeline");
    std::string pipeline_class, pipeline_path;
    pipeline_cmd->add_option("--class", pipeline_class, "p5free|p6free|bullchair|chordal")
        ->required();
    pipeline_cmd->add_option("graph", pipeline_path, "edge-list file")->required();

    auto* hgraph_cmd = app.add_subcommand("hgraph", "H-representation operations");
    auto* extract_cmd = hgraph_cmd->add_subcommand("extract", "run the Q-set extraction");
    std::string rep_path, td_path;
    extract_cmd->add_option("representation", rep_path, "H-representation json")->required();
    extract_cmd->add_option("--td", td_path, "PACE-style tree decomposition file");

    auto* gen_cmd = app.add_subcommand("gen", "emit instance files");
    std::string gen_kind, gen_method = "subtree", fixture_name = "walther-zamfirescu", out_prefix;
    std::uint64_t gen_seed = 1;
    int gen_n = 8;
    double gen_density = 0.5, gen_p = 0.3;
    std::vector<std::string> gen_forbidden;
    gen_cmd->add_option("kind", gen_kind, "chordal|interval|circular-arc|filtered|fixture")
        ->required();
    gen_cmd->add_option("--seed", gen_seed, "generator seed");
    gen_cmd->add_option("--n", gen_n, "vertex count");
    gen_cmd->add_option("--density", gen_density, "growth density (chordal)");
    gen_cmd->add_option("--p", gen_p, "edge probability (filtered)");
    gen_cmd->add_option("--forbidden", gen_forbidden, "patterns for filtered gen")
        ->delimiter(',');
    gen_cmd->add_option("--method", gen_method, "chordal generation route: subtree|peo");
    gen_cmd->add_option("--name", fixture_name, "fixture name");
    gen_cmd->add_option("--out", out_prefix, "output file prefix");

    auto* verify_cmd = app.add_subcommand("verify", "run a randomized verification suite");
    std::string suite;
    std::uint64_t verify_seed = 1;
    int trials = 100, jobs = 1;
    verify_cmd->add_option("--suite", suite, "refine|p5|p6|bullchair|chordal|hgraph")->required();
    verify_cmd->add_option("--trials", trials, "trial count");
    verify_cmd->add_option("--seed", verify_seed, "suite seed");
    verify_cmd->add_option("--jobs", jobs, "worker count (result is order-independent)");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*oracle_cmd) return detail::run_oracle(oracle_path, limits, as_json, out);
        if (*pipeline_cmd)
            return detail::run_pipeline(pipeline_class, pipeline_path, limits, as_json, out);
        if (*hgraph_cmd) return detail::run_hgraph_extract(rep_path, td_path, limits, as_json, out);
        if (*gen_cmd)
            return detail::run_gen(gen_kind, gen_seed, gen_n, gen_density, gen_p, gen_forbidden,
                                   gen_method, fixture_name, out_prefix, as_json, out);
        if (*verify_cmd)
            return detail::run_verify(suite, verify_seed, trials, jobs, as_json, out);
        err << "error: no subcommand\n";
        return kUsage;
    } catch (const ClassMembershipError& e) {
        err << "class-membership: " << e.what() << "\nwitness: " << e.witness << "\n";
        return kClassMembership;
    } catch (const SizeLimitError& e) {
        err << "size-limit: " << e.what() << "\n";
        return kOracleSize;
    } catch (const InternalContradictionError& e) {
        err << "internal-contradiction: " << e.what() << "\n";
        return kViolation;
    } catch (const ParseError& e) {
        err << "parse: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

} // namespace lpt::cli
