// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Budgets are sized for a desk machine; runs in minutes.

#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/corpus.hpp"
#include "support/figures.hpp"
#include "support/rule_harness.hpp"
#include "support/test_util.hpp"
#include "w2p/drp.hpp"
#include "w2p/metis_io.hpp"
#include "w2p/mwis.hpp"
#include "w2p/oracle.hpp"
#include "w2p/peel.hpp"
#include "w2p/profiles.hpp"
#include "w2p/timer.hpp"
#include "w2p/transform.hpp"

using namespace w2p;
using namespace w2p::testutil;

namespace {

int failures_total = 0;

void report(int criterion, bool pass, const std::string &what, const std::string &detail = "") {
    std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures_total;
}

std::string secs(const timer &t) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1fs", t.elapsed());
    return buf;
}

// ---- 1: per-rule exact soundness -------------------------------------------

void criterion_1() {
    timer t;
    bool all_ok = true;
    std::string detail;
    for (int rule = 2; rule <= 13; ++rule) {
        auto res = verify_rule_soundness(rule, 1000, 9000 + rule);
        if (!res.ok() || res.verified < 1000) {
            all_ok = false;
            detail += "rule " + std::to_string(rule) + ": " +
                      (res.ok() ? "only " + std::to_string(res.verified) + " instances"
                                : res.failures.front()) +
                      "; ";
        }
    }
    report(1, all_ok, "per-rule soundness, 1000 exact oracle checks for each of rules 2-13",
           detail.empty() ? secs(t) : detail);
}

// ---- 2: golden bounds on the showcase instance ------------------------------

void criterion_2() {
    auto lg = link_graph::from_graph(heavy_vertex_showcase());
    lg.materialize_links(0);
    bool ok = true;
    std::string detail;
    auto expect = [&](bool cond, const std::string &msg) {
        if (!cond) {
            ok = false;
            detail += msg + "; ";
        }
    };
    std::vector<NodeID> ball{1, 2, 3, 4};
    expect(brute_mw2ps_region(lg, ball).weight == 7, "exact optimum inside N2(v) != 7");
    expect(lg.nbr_weight_sum(0) + lg.link_weight_sum(0) == 13, "naive bound != 13");
    expect(lg.nbr_weight_max(0) + lg.link_weight_sum(0) == 9, "clique bound != 9");
    auto ri = reduced_instance::wrap(lg);
    reducer red(ri);
    expect(red.try_neighborhood_removal(0), "neighborhood removal did not include v");
    expect(ri.offset == 10, "offset != 10");
    report(2, ok, "showcase instance: optimum 7, naive bound 13, clique bound 9, v included",
           detail);
}

// ---- 3: transformation equivalence ------------------------------------------

void criterion_3() {
    timer t;
    std::mt19937_64 rng(303);
    const char *configs[] = {"transform", "fast", "core", "strong", "full"};
    int checked = 0, set_checks = 0;
    bool ok = true;
    std::string detail;
    for (int it = 0; it < 2000 && ok; ++it) {
        NodeID n = 4 + rng() % 11;
        double density = 0.05 + (rng() % 1000) / 1000.0 * 0.45;
        auto g = random_graph(rng, n, density, 20);
        NodeWeight opt = brute_mw2ps(link_graph::from_graph(g)).weight;
        for (const char *cfg : configs) {
            auto tr = reduce_and_transform(g, cfg, it);
            if (brute_mwis(tr.mwis.graph, {40}).weight + tr.reduced.offset != opt) {
                ok = false;
                detail = std::string("config ") + cfg + " broke equivalence at instance " +
                         std::to_string(it);
                break;
            }
            ++checked;
        }
        auto sq = square(link_graph::from_graph(g));
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<NodeID> set;
            for (NodeID v = 0; v < n; ++v)
                if (rng() % 3 == 0) set.push_back(v);
            if (is_2packing(g, set) != is_independent(sq.graph, set)) {
                ok = false;
                detail = "2-packing / square independence mismatch";
                break;
            }
            ++set_checks;
        }
    }
    std::ostringstream os;
    os << checked << " config runs, " << set_checks << " set checks, " << secs(t);
    report(3, ok, "square-transform equivalence on 2000 random graphs, all configurations",
           ok ? os.str() : detail);
}

// ---- 4: end-to-end exactness -------------------------------------------------

void criterion_4() {
    timer t;
    std::mt19937_64 rng(404);
    bool ok = true;
    std::string detail;
    int done = 0;
    for (int it = 0; it < 500 && ok; ++it) {
        NodeID n = 5 + rng() % 12; // up to 16
        auto g = random_graph(rng, n, 0.05 + (rng() % 1000) / 1000.0 * 0.45, 20);
        NodeWeight opt = brute_mw2ps(link_graph::from_graph(g)).weight;
        auto tr = reduce_and_transform(g, "strong", it);
        mwis_solver_spec spec;
        spec.kind = mwis_solver_spec::kind_t::exact_bb;
        spec.time_limit = 30.0;
        auto res = exact_mwis_bb(tr.mwis.graph, spec);
        auto lifted = lift(res.sol, tr.mwis, tr.reduced);
        if (!res.proven_optimal || lifted.weight != opt || !is_2packing(g, lifted.nodes)) {
            ok = false;
            detail = "mismatch at instance " + std::to_string(it) + ": pipeline " +
                     std::to_string(lifted.weight) + " vs oracle " + std::to_string(opt);
        }
        ++done;
    }
    std::ostringstream os;
    os << done << " instances, " << secs(t);
    report(4, ok, "strong + exact solver + lift equals the oracle on 500 random graphs",
           ok ? os.str() : detail);
}

// ---- 5: reduction dominance on the mini-corpus -------------------------------

void criterion_5(const std::vector<corpus_instance> &corpus) {
    timer t;
    bool sizes_ok = true, stars_ok = true;
    int strong_full = 0, fast_full = 0;
    std::string detail;
    for (const auto &inst : corpus) {
        auto strong = reduce_and_transform(inst.graph, "strong", 1);
        auto fast = reduce_and_transform(inst.graph, "fast", 1);
        if (strong.stats.n_kernel > strong.stats.n_input ||
            strong.stats.m_square_kernel > strong.stats.m_square_input) {
            sizes_ok = false;
            detail += inst.name + " grew; ";
        }
        strong_full += strong.stats.fully_reduced;
        fast_full += fast.stats.fully_reduced;
        if (inst.unit_star && !strong.stats.fully_reduced) {
            stars_ok = false;
            detail += inst.name + " not fully reduced; ";
        }
    }
    bool ok = sizes_ok && stars_ok && strong_full >= fast_full;
    std::ostringstream os;
    os << "strong fully reduced " << strong_full << "/" << corpus.size() << ", fast " << fast_full
       << "/" << corpus.size() << ", " << secs(t);
    report(5, ok, "strong never grows the transformed instance and solves every unit star",
           ok ? os.str() : detail);
}

// ---- 6: peel solver feasibility and determinism -------------------------------

void criterion_6(const std::vector<corpus_instance> &corpus) {
    timer t;
    bool ok = true;
    std::string detail;
    int optimal_hits = 0, fully_reducible = 0;
    for (std::size_t i = 0; i < corpus.size() && ok; ++i) {
        const auto &inst = corpus[i];
        peel_config cfg;
        cfg.seed = 1234 + i;
        cfg.rating = static_cast<peel_config::rating_t>(i % 3);
        cfg.mode = i % 2 ? peel_config::mode_t::adaptive : peel_config::mode_t::non_adaptive;
        auto a = redW2pack(inst.graph, cfg);
        auto b = redW2pack(inst.graph, cfg);
        if (a.nodes != b.nodes) {
            ok = false;
            detail = inst.name + ": seed determinism broken";
            break;
        }
        if (!is_2packing(inst.graph, a.nodes)) {
            ok = false;
            detail = inst.name + ": infeasible";
            break;
        }
        if (inst.graph.number_of_nodes() <= 200) {
            for (NodeID v = 0; v < inst.graph.number_of_nodes() && ok; ++v) {
                if (a.contains(v)) continue;
                auto ext = a.nodes;
                ext.push_back(v);
                if (is_2packing(inst.graph, ext)) {
                    ok = false;
                    detail = inst.name + ": not maximal at vertex " + std::to_string(v);
                }
            }
        }
        auto ri = reduce_exhaustively(link_graph::from_graph(inst.graph), cfg.reduction_order);
        if (ri.graph.empty()) {
            ++fully_reducible;
            if (a.weight == ri.offset) {
                ++optimal_hits;
            } else {
                ok = false;
                detail = inst.name + ": fully reducible but weight " + std::to_string(a.weight) +
                         " != offset " + std::to_string(ri.offset);
            }
        }
    }
    std::ostringstream os;
    os << "optimum on " << optimal_hits << "/" << fully_reducible << " fully reducible, "
       << secs(t);
    report(6, ok, "peel solver: feasible, maximal, deterministic on the whole corpus",
           ok ? os.str() : detail);
}

// ---- 7: DRP dominates its pool, trace monotone --------------------------------

void criterion_7(const std::vector<corpus_instance> &corpus) {
    timer t;
    bool ok = true;
    std::string detail;
    int runs = 0;
    for (std::size_t i = 0; i < corpus.size() && ok; ++i) {
        const auto &inst = corpus[i];
        for (auto preset : {drp_params::bchils_preset(), drp_params::kamis_preset()}) {
            preset.time_limit = 0.5;
            preset.max_rounds = 2;
            preset.seed = 42 + i;
            preset.core_solver.time_limit = 0.1;
            auto rep = drp(inst.graph, preset);
            ++runs;
            if (rep.final.weight < rep.pool_best + rep.offset) {
                ok = false;
                detail = inst.name + ": final below the peel pool";
                break;
            }
            if (!is_2packing(inst.graph, rep.final.nodes)) {
                ok = false;
                detail = inst.name + ": infeasible result";
                break;
            }
            for (std::size_t k = 1; k < rep.trace.size(); ++k)
                if (rep.trace[k].second <= rep.trace[k - 1].second ||
                    rep.trace[k].first < rep.trace[k - 1].first) {
                    ok = false;
                    detail = inst.name + ": trace not monotone";
                    break;
                }
        }
    }
    std::ostringstream os;
    os << runs << " runs, " << secs(t);
    report(7, ok, "DRP final weight covers every pool solution; best-weight trace monotone",
           ok ? os.str() : detail);
}

// ---- 8: DRP with exact cores converges to the exact optimum -------------------

void criterion_8() {
    timer t;
    std::mt19937_64 rng(808);
    int matched = 0, total = 0;
    bool feasible_ok = true, bounded_ok = true;
    for (int it = 0; it < 40; ++it) {
        NodeID n = 30 + rng() % 71; // up to 100
        auto g = random_sparse(rng, n, 4.0, 20);
        auto tr = reduce_and_transform(g, "strong", it);
        mwis_solver_spec spec;
        spec.kind = mwis_solver_spec::kind_t::exact_bb;
        spec.time_limit = 60.0;
        auto res = exact_mwis_bb(tr.mwis.graph, spec);
        auto opt = lift(res.sol, tr.mwis, tr.reduced);

        auto params = drp_params::kamis_preset();
        // anytime monotonicity: matching under a tighter budget implies
        // matching under the stated 120 s budget as well
        params.time_limit = 2.0;
        params.seed = it;
        auto rep = drp(g, params);
        ++total;
        if (res.proven_optimal && rep.final.weight == opt.weight) ++matched;
        feasible_ok = feasible_ok && is_2packing(g, rep.final.nodes);
        bounded_ok = bounded_ok && rep.final.weight >= rep.pool_best + rep.offset;
    }
    bool ok = feasible_ok && bounded_ok && matched * 100 >= total * 95;
    std::ostringstream os;
    os << matched << "/" << total << " optimal, " << secs(t);
    report(8, ok, "DRP with the exact core solver matches the exact pipeline on >=95%", os.str());
}

// ---- 9: format fidelity --------------------------------------------------------

void criterion_9() {
    bool ok = true;
    std::string detail;
    std::mt19937_64 rng(909);
    for (int it = 0; it < 50 && ok; ++it) {
        auto g = random_graph(rng, 2 + rng() % 30, 0.2, it % 2 ? 50 : 1);
        std::ostringstream out;
        write_metis(out, g);
        std::istringstream in(out.str());
        auto h = parse_metis(in);
        std::ostringstream out2;
        write_metis(out2, h);
        if (out.str() != out2.str()) {
            ok = false;
            detail = "round trip not identity";
        }
    }

    auto mk = [](const std::string &inst, const std::string &solver, NodeWeight w, double tt,
                 std::size_t mem) {
        run_record r;
        r.instance = inst;
        r.solver = solver;
        r.weight = w;
        r.time_to_best = tt;
        r.peak_memory_bytes = mem;
        return r;
    };
    {
        std::vector<run_record> rs{mk("a", "s1", 10, 1.0, 100), mk("a", "s2", 5, 2.0, 200),
                                   mk("b", "s1", 8, 1.0, 100), mk("b", "s2", 7, 3.0, 300)};
        auto table = emit_performance_profiles(rs);
        if (table.find("quality\ts1\t1\t1\n") == std::string::npos) {
            ok = false;
            detail += "dominating solver misses foi=1 at tau=1; ";
        }
    }
    {
        std::vector<run_record> rs{mk("a", "s1", 10, 1.0, 100), mk("a", "s2", 5, 2.0, 100),
                                   mk("b", "s1", 4, 1.0, 100), mk("b", "s2", 8, 1.0, 100)};
        auto table = emit_performance_profiles(rs);
        if (table.find("quality\ts1\t1\t0.5\n") == std::string::npos ||
            table.find("quality\ts2\t1\t0.5\n") == std::string::npos) {
            ok = false;
            detail += "disjoint winners not at foi=0.5; ";
        }
        if (table != emit_performance_profiles(rs)) {
            ok = false;
            detail += "emitter not byte-stable; ";
        }
    }
    report(9, ok, "METIS round trip is the identity; profile emitter matches the definitions",
           detail);
}

// ---- 10: published parameter presets -------------------------------------------

void criterion_10() {
    auto b = drp_params::bchils_preset();
    auto k = drp_params::kamis_preset();
    auto n = drp_params::no_core_preset();
    bool ok = b.phi == 0.6 && b.phi_plus == 1.00 && b.phi_minus == 1.00 && b.t_core == 80.0 &&
              b.core_solver.kind == mwis_solver_spec::kind_t::local_search && k.phi == 0.8 &&
              k.phi_plus == 1.05 && k.phi_minus == 0.95 && k.t_core == 80.0 &&
              k.core_solver.kind == mwis_solver_spec::kind_t::exact_bb && !n.use_core;
    report(10, ok, "presets: (0.6, 1.00, 1.00, 80), (0.8, 1.05, 0.95, 80), core-free");
}

} // namespace

int main() {
    timer total;
    auto corpus = mini_corpus();
    std::printf("mini-corpus: %zu instances\n", corpus.size());

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5(corpus);
    criterion_6(corpus);
    criterion_7(corpus);
    criterion_8();
    criterion_9();
    criterion_10();

    std::printf("%s: %d criterion(s) failed, %.1fs total\n",
                failures_total == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED", failures_total,
                total.elapsed());
    return failures_total == 0 ? 0 : 1;
}
