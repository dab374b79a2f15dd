#pragma once

#include <future>
#include <map>
#include <string>
#include <vector>

#include "lpt/generators.hpp"
#include "lpt/pipelines.hpp"

namespace lpt {

struct SuiteOptions {
    std::uint64_t seed = 1;
    int trials = 100;
    int jobs = 1;
    OracleLimits limits{20, 16, 5'000'000};
};

struct TrialOutcome {
    bool violation = false;
    bool skipped = false;
    std::string note;
    std::map<std::string, int> counters;
};

struct SuiteResult {
    std::string suite;
    int trials = 0;
    int violations = 0;
    int skipped = 0;
    std::map<std::string, int> counters;
    std::vector<std::string> notes; // first few violation/skip details

    bool pass() const { return violations == 0; }
};

// per-trial seed, independent of execution order
inline std::uint64_t trial_seed(std::uint64_t suite_seed, int index) {
    SplitMix64 rng(suite_seed ^ (0x9E3779B97F4A7C15ull * std::uint64_t(index + 1)));
    return rng.next();
}

namespace detail {

template <typename TrialFn>
SuiteResult run_trials(const std::string& suite, const SuiteOptions& opt, TrialFn&& trial) {
    SuiteResult res;
    res.suite = suite;
    res.trials = opt.trials;

    std::vector<TrialOutcome> outcomes(size_t(opt.trials));
    auto run_block = [&](int lo, int hi) {
        for (int i = lo; i < hi; i++) {
            try {
                outcomes[size_t(i)] = trial(trial_seed(opt.seed, i), i);
            } catch (const Error& e) {
                outcomes[size_t(i)].violation = true;
                outcomes[size_t(i)].note = e.what();
            }
        }
    };

    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        run_block(0, opt.trials);
    } else {
        std::vector<std::future<void>> futs;
        int chunk = (opt.trials + jobs - 1) / jobs;
        for (int j = 0; j < jobs; j++) {
            int lo = j * chunk, hi = std::min(opt.trials, (j + 1) * chunk);
            if (lo >= hi) break;
            futs.push_back(std::async(std::launch::async, run_block, lo, hi));
        }
        for (auto& f : futs) f.get();
    }

    for (int i = 0; i < opt.trials; i++) {
        const auto& o = outcomes[size_t(i)];
        if (o.violation) {
            res.violations++;
            if (res.notes.size() < 10)
                res.notes.push_back("trial " + std::to_string(i) + ": " + o.note);
        } else if (o.skipped) {
            res.skipped++;
            if (res.notes.size() < 10)
                res.notes.push_back("trial " + std::to_string(i) + " skipped: " + o.note);
        }
        for (const auto& [k, v] : o.counters) res.counters[k] += v;
    }
    return res;
}

// Instances whose longest-path family would overflow the cap are redrawn by
// the suites; this pre-screen costs one counting DP instead of a blown
// enumeration.
inline bool enumeration_feasible(const Graph& g, const OracleLimits& limits) {
    if (g.vertex_count() > limits.enum_limit) return false;
    return count_longest_paths(g, limits) <= limits.path_cap;
}

inline Graph random_connected_graph(SplitMix64& rng, int n, double p, int attempts = 200) {
    for (int a = 0; a < attempts; a++) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++)
                if (rng.chance(p)) edges.emplace_back(u, v);
        Graph g = Graph::from_edge_list(n, edges);
        if (is_connected(g)) return g;
    }
    // fall back to a random spanning tree plus noise; always connected
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; i++) edges.emplace_back(int(rng.below(std::uint64_t(i))), i);
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            if (rng.chance(p / 2)) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

// A connected X whose closed neighborhood dominates the graph; grows along
// shortest paths toward undominated vertices.
inline VertexSet grow_monitor_core(const Graph& g, SplitMix64& rng) {
    const int n = g.vertex_count();
    VertexSet x(n);
    x.add(int(rng.below(std::uint64_t(n))));
    for (;;) {
        VertexSet nx = closed_neighborhood(g, x);
        if (undominated_witness(g, nx, g.vertex_set() - nx) < 0) return x;
        VertexSet frontier = nx - x;
        auto cands = frontier.members();
        x.add(cands[size_t(rng.below(cands.size()))]);
    }
}

} // namespace detail

// --- refinement suite --------------------------------------------------------
// Valid RefinementInputs from synthetic (M, D, S) triples and from pipeline
// intermediates; every refined certificate must verify.
inline SuiteResult run_refine_suite(const SuiteOptions& opt) {
    return detail::run_trials("refine", opt, [&](std::uint64_t seed, int index) {
        TrialOutcome out;
        SplitMix64 rng(seed);
        int variant = index % 3;

        Graph g;
        bool have_g = false;
        std::optional<RefinementInput> input;
        if (variant == 2) {
            // chordal pipeline intermediates; redraw instances whose longest
            // paths would overflow the enumeration cap
            for (int redraw = 0; redraw < 30; redraw++) {
                auto inst = gen_chordal(rng.next(), 3 + int(rng.below(10)),
                                        0.3 + 0.4 * double(rng.below(100)) / 100.0);
                if (!detail::enumeration_feasible(inst.graph, opt.limits)) continue;
                g = inst.graph;
                have_g = true;
                break;
            }
            if (!have_g) {
                out.skipped = true;
                out.note = "no enumeration-feasible chordal instance in 30 draws";
                return out;
            }
            ChordalTrace trace;
            chordal_refined_transversal(g, opt.limits, &trace);
            if (trace.input) {
                input = trace.input;
                out.counters["pipeline_intermediate"]++;
            } else {
                variant = 1; // clique covered the graph; use a synthetic triple on it instead
            }
        }
        if (!input) {
            if (!have_g) {
                for (int redraw = 0; redraw < 30 && !have_g; redraw++) {
                    int n = 4 + int(rng.below(9)); // 4..12
                    double p = 0.2 + 0.4 * double(rng.below(100)) / 100.0;
                    Graph cand = detail::random_connected_graph(rng, n, p);
                    if (!detail::enumeration_feasible(cand, opt.limits)) continue;
                    g = cand;
                    have_g = true;
                }
                if (!have_g) {
                    out.skipped = true;
                    out.note = "no enumeration-feasible graph in 30 draws";
                    return out;
                }
            }
            VertexSet x = detail::grow_monitor_core(g, rng);
            VertexSet m = (variant == 0) ? closed_neighborhood(g, x) : g.vertex_set();
            VertexSet d = x;
            if (variant == 1) {
                // d must dominate all of g[m] = g
                while (!is_connected_dominating(g, d)) {
                    VertexSet frontier = closed_neighborhood(g, d) - d;
                    auto cands = frontier.members();
                    d.add(cands[size_t(rng.below(cands.size()))]);
                }
            }
            VertexSet s(g.vertex_count());
            if (auto cmax = path_maximal_component(g, m, opt.limits)) {
                s = minimal_dominating_subset(g, m, cmax->boundary);
                // random extras from m keep the hypothesis valid
                m.for_each([&](VertexId v) {
                    if (rng.chance(0.15)) s.add(v);
                });
            }
            input = RefinementInput{g, m, d, s};
            out.counters["synthetic"]++;
        }

        TransversalCertificate cert = refine_transversal(*input, opt.limits);
        if (!cert.verified) {
            out.violation = true;
            out.note = "refined certificate " + cert.transversal.to_string() + " failed verification";
        }
        return out;
    });
}

// --- P_t-free suites ----------------------------------------------------------
inline SuiteResult run_ptfree_suite(int t, const SuiteOptions& opt) {
    return detail::run_trials(t == 5 ? "p5" : "p6", opt, [&, t](std::uint64_t seed, int) {
        TrialOutcome out;
        SplitMix64 rng(seed);
        int n_max = t == 5 ? 12 : 13;
        std::optional<Graph> g;
        for (int attempt = 0; attempt < 12 && !g; attempt++) {
            int n = 4 + int(rng.below(std::uint64_t(n_max - 3)));
            double p = 0.3 + 0.5 * double(rng.below(100)) / 100.0;
            g = gen_class_filtered(rng.next(), n, p, {patterns::path(t)});
            if (g && !detail::enumeration_feasible(*g, opt.limits)) g.reset();
        }
        if (!g) {
            out.skipped = true;
            out.note = "rejection sampling budget exhausted";
            return out;
        }
        TransversalCertificate cert = ptfree_transversal(*g, t, opt.limits);
        if (!cert.verified)
            { out.violation = true; out.note = "certificate failed oracle verification"; return out; }
        if (cert.transversal.size() > t - 2) {
            out.violation = true;
            out.note = "certificate size " + std::to_string(cert.transversal.size()) +
                       " exceeds bound " + std::to_string(t - 2);
        }
        return out;
    });
}

// --- bull/chair suite ----------------------------------------------------------
namespace detail {

inline Graph fat_path(const std::vector<int>& class_sizes) {
    int n = 0;
    for (int s : class_sizes) n += s;
    std::vector<std::pair<int, int>> edges;
    int base = 0;
    std::vector<std::pair<int, int>> spans;
    for (int s : class_sizes) {
        spans.emplace_back(base, base + s);
        base += s;
    }
    for (size_t i = 0; i + 1 < spans.size(); i++)
        for (int u = spans[i].first; u < spans[i].second; u++)
            for (int v = spans[i + 1].first; v < spans[i + 1].second; v++)
                edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

// Maximal induced path of exactly six vertices plus a universal watcher and a
// pendant behind it; exercises the |Q| = 6 branch with a nonempty component.
inline Graph p6_with_watcher() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < 6; i++) edges.emplace_back(i, i + 1);
    for (int i = 0; i < 6; i++) edges.emplace_back(6, i);
    edges.emplace_back(6, 7);
    return Graph::from_edge_list(8, edges);
}

} // namespace detail

inline SuiteResult run_bullchair_suite(const SuiteOptions& opt) {
    return detail::run_trials("bullchair", opt, [&](std::uint64_t seed, int index) {
        TrialOutcome out;
        SplitMix64 rng(seed);

        Graph g;
        if (index % 50 == 1) {
            // fat path on 7..9 singleton classes, i.e. a plain induced path
            std::vector<int> sizes(size_t(7 + rng.below(3)), 1);
            g = detail::fat_path(sizes);
        } else if (index % 50 == 2) {
            g = patterns::cycle(8 + int(rng.below(3)));     // long hole, >=7 branch
        } else if (index % 50 == 3) {
            g = detail::p6_with_watcher();
        } else {
            std::optional<Graph> cand;
            for (int attempt = 0; attempt < 12 && !cand; attempt++) {
                int n = 5 + int(rng.below(8)); // 5..12
                double p = 0.15 + 0.55 * double(rng.below(100)) / 100.0;
                cand = gen_class_filtered(rng.next(), n, p, {patterns::bull(), patterns::chair()});
                if (cand && !detail::enumeration_feasible(*cand, opt.limits)) cand.reset();
            }
            if (!cand) {
                out.skipped = true;
                out.note = "rejection sampling budget exhausted";
                return out;
            }
            g = *cand;
        }
        // structured instances must also pass the class check; discard otherwise
        if (contains_induced(g, patterns::bull()) || contains_induced(g, patterns::chair())) {
            out.skipped = true;
            out.note = "structured instance outside class";
            return out;
        }

        BullChairTrace trace;
        TransversalCertificate cert = bullchair_transversal(g, opt.limits, &trace);
        out.counters[std::string("branch_") + branch_name(trace.branch)]++;
        if (!cert.verified)
            { out.violation = true; out.note = "certificate failed oracle verification"; return out; }
        if (cert.transversal.size() > 5) {
            out.violation = true;
            out.note = "certificate size " + std::to_string(cert.transversal.size()) + " exceeds 5";
        }
        return out;
    });
}

// --- chordal suite --------------------------------------------------------------
inline SuiteResult run_chordal_suite(const SuiteOptions& opt) {
    return detail::run_trials("chordal", opt, [&](std::uint64_t seed, int index) {
        TrialOutcome out;
        SplitMix64 rng(seed);

        Graph g;
        bool interval = false;
        bool feasible = false;
        int variant = index % 3;
        for (int redraw = 0; redraw < 30 && !feasible; redraw++) {
            int n = 2 + int(rng.below(11)); // 2..12
            if (variant == 0) {
                g = gen_chordal(rng.next(), n, 0.25 + 0.35 * double(rng.below(100)) / 100.0).graph;
            } else if (variant == 1) {
                g = gen_interval(rng.next(), n).graph;
                interval = true;
            } else {
                g = gen_chordal_peo(rng.next(), n, 0.3 + 0.4 * double(rng.below(100)) / 100.0);
            }
            feasible = detail::enumeration_feasible(g, opt.limits);
        }
        if (!feasible) {
            out.skipped = true;
            out.note = "no enumeration-feasible instance in 30 draws";
            return out;
        }
        if (!is_chordal(g)) {
            out.violation = true;
            out.note = "generator emitted a non-chordal graph";
            return out;
        }

        ChordalTrace trace;
        TransversalCertificate cert = chordal_refined_transversal(g, opt.limits, &trace);
        out.counters[interval ? "interval" : "chordal"]++;
        if (!cert.verified)
            { out.violation = true; out.note = "certificate failed oracle verification"; return out; }
        if (g.vertex_count() >= 2 && cert.transversal.size() > trace.matched_index - 1) {
            out.violation = true;
            out.note = "certificate size " + std::to_string(cert.transversal.size()) +
                       " exceeds matched-clique bound " + std::to_string(trace.matched_index - 1);
            return out;
        }
        if (interval) {
            if (trace.matched_index > 3) {
                out.violation = true;
                out.note = "interval graph with matched-clique index " +
                           std::to_string(trace.matched_index);
                return out;
            }
            if (cert.transversal.size() > 2) {
                out.violation = true;
                out.note = "interval certificate size " + std::to_string(cert.transversal.size()) +
                           " exceeds 2";
            }
        }
        return out;
    });
}

// --- hgraph suite ----------------------------------------------------------------
namespace detail {

inline Graph paw() {
    return Graph::from_edge_list(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
}

inline Graph random_small_host(SplitMix64& rng) {
    for (;;) {
        int n = 2 + int(rng.below(4)); // 2..5
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++)
                if (rng.chance(0.5)) edges.emplace_back(u, v);
        Graph h = Graph::from_edge_list(n, edges);
        if (is_connected(h)) return h;
    }
}

} // namespace detail

inline SuiteResult run_hgraph_suite(const SuiteOptions& opt) {
    return detail::run_trials("hgraph", opt, [&](std::uint64_t seed, int index) {
        TrialOutcome out;
        SplitMix64 rng(seed);

        Graph host;
        const char* host_name;
        switch (index % 5) {
            case 0: host = patterns::complete(2); host_name = "K2"; break;
            case 1: host = patterns::complete(3); host_name = "K3"; break;
            case 2: host = detail::paw(); host_name = "paw"; break;
            case 3: host = patterns::complete(4); host_name = "K4"; break;
            default: host = detail::random_small_host(rng); host_name = "random"; break;
        }
        out.counters[std::string("host_") + host_name]++;

        HRepresentation rep;
        Graph g;
        bool feasible = false;
        for (int redraw = 0; redraw < 30 && !feasible; redraw++) {
            int n = 2 + int(rng.below(8)); // 2..9 represented vertices
            rep = gen_hrep(rng.next(), host, n, 3,
                           0.3 + 0.5 * double(rng.below(100)) / 100.0);
            g = realize(rep);
            feasible = detail::enumeration_feasible(g, opt.limits);
        }
        if (!feasible) {
            out.skipped = true;
            out.note = "no enumeration-feasible representation in 30 draws";
            return out;
        }

        TreeDecomposition td = decompose(rep);
        ExtractionTrace trace;
        TransversalCertificate cert = extract_q(rep, td, opt.limits, &trace);
        ClaimsReport claims = verify_claims(trace, g, opt.limits);

        if (trace.theorem_bound) out.counters["theorem_checked"]++;
        if (td.exact_width) out.counters["exact_width"]++;
        if (!trace.s1_ok) { out.violation = true; out.note = "(S1) violated"; return out; }
        if (!trace.s2_ok) { out.violation = true; out.note = "(S2) violated"; return out; }
        if (!claims.all()) { out.violation = true; out.note = "claims failed: " + claims.detail; return out; }
        if (!cert.verified) { out.violation = true; out.note = "Q failed oracle verification"; return out; }
        if (trace.exact_width && trace.theorem_bound && !trace.theorem_ok) {
            out.violation = true;
            out.note = "|Q|=" + std::to_string(trace.q.size()) + " exceeds theorem bound " +
                       std::to_string(*trace.theorem_bound);
        }
        return out;
    });
}

inline SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "refine") return run_refine_suite(opt);
    if (name == "p5") return run_ptfree_suite(5, opt);
    if (name == "p6") return run_ptfree_suite(6, opt);
    if (name == "bullchair") return run_bullchair_suite(opt);
    if (name == "chordal") return run_chordal_suite(opt);
    if (name == "hgraph") return run_hgraph_suite(opt);
    throw InvalidArgument("unknown suite " + name);
}

} // namespace lpt
