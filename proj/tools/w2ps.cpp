// Command-line front end: parses METIS graphs, assigns weight distributions,
// dispatches the solvers, and emits machine-readable run records.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <vector>

#include "w2p/drp.hpp"
#include "w2p/mem_stats.hpp"
#include "w2p/metis_io.hpp"
#include "w2p/mwis.hpp"
#include "w2p/oracle.hpp"
#include "w2p/peel.hpp"
#include "w2p/profiles.hpp"
#include "w2p/timer.hpp"
#include "w2p/transform.hpp"
#include "w2p/weight_gen.hpp"

using namespace w2p;

namespace {

struct cli_options {
    std::string graph_path;
    std::string weights = "file";
    std::uint64_t weights_seed = 0;
    std::string config = "strong";
    std::string solver = "drp-ls";
    double time_limit = 10.0;
    std::uint64_t seed = 1;
    int repeat = 1;
    std::string out_path;
    std::string solution_out;
    std::string export_mwis;
    NodeID oracle_cap = 16;
};

struct solve_outcome {
    solution sol; // on the input graph
    double time_to_best = 0.0;
    NodeID n_kernel = 0;
    EdgeID m_kernel = 0;
    NodeWeight offset = 0;
    bool fully_reduced = false;
    bool proven_optimal = false;
};

solve_outcome dispatch(const weighted_graph &g, const cli_options &opt, std::uint64_t seed) {
    solve_outcome out;
    timer clock;
    if (opt.solver == "oracle") {
        if (g.number_of_nodes() > opt.oracle_cap)
            throw std::runtime_error("oracle solver: instance exceeds the enumeration cap of " +
                                     std::to_string(opt.oracle_cap) + " vertices");
        out.sol = brute_mw2ps(link_graph::from_graph(g), {opt.oracle_cap});
        out.proven_optimal = true;
        out.time_to_best = clock.elapsed();
    } else if (opt.solver == "peel") {
        peel_config cfg;
        cfg.seed = seed;
        cfg.reduction_order = opt.config == "transform" ? reduction_config::core()
                                                        : reduction_config::by_name(opt.config);
        out.sol = redW2pack(g, cfg, deadline(opt.time_limit));
        out.time_to_best = clock.elapsed();
    } else if (opt.solver == "exact-pipeline") {
        auto tr = reduce_and_transform(g, opt.config, seed);
        out.n_kernel = tr.stats.n_kernel;
        out.m_kernel = tr.reduced.graph.empty() ? 0 : tr.stats.m_square_kernel;
        out.offset = tr.stats.offset;
        out.fully_reduced = tr.stats.fully_reduced;
        mwis_solver_spec spec;
        spec.kind = mwis_solver_spec::kind_t::exact_bb;
        spec.time_limit = std::max(0.01, opt.time_limit - clock.elapsed());
        spec.seed = seed;
        auto res = exact_mwis_bb(tr.mwis.graph, spec);
        out.sol = lift(res.sol, tr.mwis, tr.reduced);
        out.proven_optimal = res.proven_optimal;
        out.time_to_best = clock.elapsed();
    } else if (opt.solver == "drp-ls" || opt.solver == "drp-exact" || opt.solver == "drp-nocore") {
        drp_params params = opt.solver == "drp-ls"      ? drp_params::bchils_preset()
                            : opt.solver == "drp-exact" ? drp_params::kamis_preset()
                                                        : drp_params::no_core_preset();
        params.time_limit = opt.time_limit;
        params.seed = seed;
        auto rep = drp(g, params);
        out.sol = rep.final;
        out.offset = rep.offset;
        out.fully_reduced = rep.fully_reduced;
        out.time_to_best = rep.trace.empty() ? clock.elapsed() : rep.trace.back().first;
        out.proven_optimal = rep.fully_reduced;
    } else {
        throw std::runtime_error("unknown solver: " + opt.solver);
    }
    return out;
}

double geomean(const std::vector<double> &xs) {
    double acc = 0;
    for (double x : xs) acc += std::log(std::max(x, 1e-12));
    return std::exp(acc / xs.size());
}

int run_solve(const cli_options &opt) {
    weighted_graph parsed = parse_metis_file(opt.graph_path);
    weighted_graph g = generate_weights(parsed, {opt.weights, opt.weights_seed});
    std::string instance =
        std::filesystem::path(opt.graph_path).filename().string() + ":" + opt.weights;

    if (!opt.export_mwis.empty()) {
        auto tr = reduce_and_transform(g, opt.config, opt.seed);
        write_metis_file(opt.export_mwis, tr.mwis.graph);
        std::cout << "transformed instance written to " << opt.export_mwis << " (n="
                  << tr.stats.n_kernel << ", m=" << tr.stats.m_square_kernel
                  << ", offset=" << tr.stats.offset << ")\n";
    }

    std::ofstream records_out;
    if (!opt.out_path.empty()) {
        records_out.open(opt.out_path);
        if (!records_out) throw std::runtime_error(opt.out_path + ": cannot open for writing");
    }

    std::vector<double> weights_seen, times_seen, mems_seen;
    bool all_feasible = true;
    for (int r = 0; r < opt.repeat; ++r) {
        std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(r);
        mem_stats::reset_peak();
        timer total;
        auto outcome = dispatch(g, opt, seed);
        run_record rec;
        rec.instance = instance;
        rec.config = opt.config;
        rec.solver = opt.solver;
        rec.seed = seed;
        rec.total_seconds = total.elapsed();
        rec.time_to_best = outcome.time_to_best;
        rec.peak_memory_bytes = mem_stats::peak_bytes();
        rec.n_kernel = outcome.n_kernel;
        rec.m_kernel = outcome.m_kernel;
        rec.offset = outcome.offset;
        rec.fully_reduced = outcome.fully_reduced;
        rec.proven_optimal = outcome.proven_optimal;

        // weight is recomputed from the vertex set, never trusted
        NodeWeight recomputed = 0;
        for (NodeID v : outcome.sol.nodes) recomputed += g.weight(v);
        rec.weight = recomputed;
        rec.feasible_verified = is_2packing(g, outcome.sol.nodes) && recomputed == outcome.sol.weight;
        all_feasible = all_feasible && rec.feasible_verified;

        if (records_out.is_open()) records_out << rec.to_json() << "\n";
        std::cout << instance << " solver=" << opt.solver << " config=" << opt.config
                  << " seed=" << seed << " weight=" << rec.weight << " t_best=" << rec.time_to_best
                  << "s total=" << rec.total_seconds << "s mem=" << rec.peak_memory_bytes
                  << "B feasible=" << (rec.feasible_verified ? "yes" : "NO")
                  << (rec.proven_optimal ? " optimal" : "") << "\n";

        if (r == 0 && !opt.solution_out.empty()) {
            std::ofstream sol_out(opt.solution_out);
            if (!sol_out) throw std::runtime_error(opt.solution_out + ": cannot open for writing");
            for (NodeID v : outcome.sol.nodes) sol_out << v << "\n";
            sol_out.close();
            // re-verify the emitted file against a fresh parse
            std::ifstream back(opt.solution_out);
            std::vector<NodeID> file_nodes;
            for (NodeID v; back >> v;) file_nodes.push_back(v);
            weighted_graph fresh =
                generate_weights(parse_metis_file(opt.graph_path), {opt.weights, opt.weights_seed});
            if (!is_2packing(fresh, file_nodes)) all_feasible = false;
        }
        weights_seen.push_back(static_cast<double>(rec.weight));
        times_seen.push_back(rec.time_to_best);
        mems_seen.push_back(static_cast<double>(rec.peak_memory_bytes));
    }

    if (opt.repeat > 1)
        std::cout << instance << " solver=" << opt.solver << " repeat=" << opt.repeat
                  << " geomean weight=" << geomean(weights_seen)
                  << " geomean t_best=" << geomean(times_seen)
                  << "s geomean mem=" << geomean(mems_seen) << "B\n";

    return all_feasible ? 0 : 2;
}

int run_profiles(const std::string &records_path, const std::string &out_path) {
    std::ifstream in(records_path);
    if (!in) throw std::runtime_error(records_path + ": cannot open file");
    std::vector<run_record> records;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) records.push_back(run_record::from_json(line));
    std::string table = emit_performance_profiles(records);
    if (out_path.empty()) {
        std::cout << table;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error(out_path + ": cannot open for writing");
        out << table;
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"maximum weight 2-packing set solvers"};
    app.require_subcommand(1);

    cli_options opt;
    auto *solve = app.add_subcommand("solve", "solve one instance");
    solve->add_option("--graph", opt.graph_path, "METIS graph file")->required();
    solve->add_option("--weights", opt.weights, "unit|uniform|geometric|degree|hybrid|file");
    solve->add_option("--weights-seed", opt.weights_seed, "seed for generated weights");
    solve->add_option("--config", opt.config, "full|fast|strong|core|transform");
    solve->add_option("--solver", opt.solver,
                      "peel|drp-ls|drp-exact|drp-nocore|exact-pipeline|oracle");
    solve->add_option("--time-limit", opt.time_limit, "seconds");
    solve->add_option("--seed", opt.seed, "solver seed");
    solve->add_option("--repeat", opt.repeat, "run with seed..seed+R-1 and report geometric means")
        ->check(CLI::PositiveNumber);
    solve->add_option("--out", opt.out_path, "JSON-lines run records");
    solve->add_option("--solution-out", opt.solution_out, "vertex ids, one per line");
    solve->add_option("--export-mwis", opt.export_mwis, "write the transformed instance as METIS");
    solve->add_option("--oracle-cap", opt.oracle_cap, "oracle enumeration cap");

    std::string records_path, profile_out;
    auto *profiles = app.add_subcommand("profiles", "performance profile tables from run records");
    profiles->add_option("--records", records_path, "JSON-lines run records")->required();
    profiles->add_option("--out", profile_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return run_solve(opt);
        return run_profiles(records_path, profile_out);
    } catch (const std::logic_error &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
