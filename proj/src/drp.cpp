#include "w2p/drp.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "w2p/oracle.hpp"

namespace w2p {

drp_params drp_params::bchils_preset() {
    drp_params p;
    p.phi = 0.6;
    p.phi_plus = 1.00;
    p.phi_minus = 1.00;
    p.t_core = 80.0;
    p.use_core = true;
    p.core_solver.kind = mwis_solver_spec::kind_t::local_search;
    return p;
}

drp_params drp_params::kamis_preset() {
    drp_params p;
    p.phi = 0.8;
    p.phi_plus = 1.05;
    p.phi_minus = 0.95;
    p.t_core = 80.0;
    p.use_core = true;
    p.core_solver.kind = mwis_solver_spec::kind_t::exact_bb;
    return p;
}

drp_params drp_params::no_core_preset() {
    drp_params p;
    p.use_core = false;
    return p;
}

peel_config next_config(std::uint64_t step, std::uint64_t seed, NodeID k0) {
    peel_config cfg;
    const std::uint64_t r = step % 3;
    const std::uint64_t visit = step / 3;
    cfg.rating = r == 0   ? peel_config::rating_t::weight_diff
                 : r == 1 ? peel_config::rating_t::weight
                          : peel_config::rating_t::degree;
    cfg.mode = (visit % 2 == 0) ? peel_config::mode_t::adaptive : peel_config::mode_t::non_adaptive;
    cfg.action = (r != 2 && (visit / 2) % 2 == 1) ? peel_config::action_t::include
                                                  : peel_config::action_t::exclude;
    // adaptive visits of this rating before `step` sit at r, r+6, r+12, ...
    std::uint64_t prior_adaptive = step > r ? (step - 1 - r) / 6 + 1 : 0;
    cfg.k = k0 + static_cast<NodeID>(prior_adaptive);
    std::mt19937_64 rng(seed ^ (0xd1342543de82ef95ull * (step + 1)));
    cfg.p = std::uniform_real_distribution<double>(0.5, 1.0)(rng);
    cfg.seed = rng();
    cfg.shuffle_reductions = true;
    cfg.reduction_order = reduction_config::core();
    return cfg;
}

link_graph build_dcore(const reduced_instance &kernel, const std::vector<char> &similar,
                       const solution &best, std::vector<NodeID> &core_to_kernel) {
    const link_graph &kg = kernel.graph;
    // vertices within distance two of a best-solution vertex fixed in U
    std::vector<char> blocked(kg.capacity(), 0);
    for (NodeID s : best.nodes) {
        if (!similar[s]) continue;
        blocked[s] = 1;
        for (NodeID u : kg.edges(s)) {
            blocked[u] = 1;
            for (NodeID x : kg.edges(u)) blocked[x] = 1;
        }
        for (NodeID u : kg.links(s)) blocked[u] = 1;
    }

    core_to_kernel.clear();
    std::vector<NodeID> to_core(kg.capacity(), INVALID_NODE);
    for (NodeID v : kg.live_nodes()) {
        if (similar[v] || blocked[v]) continue;
        to_core[v] = static_cast<NodeID>(core_to_kernel.size());
        core_to_kernel.push_back(v);
    }

    std::vector<std::pair<NodeID, NodeID>> edges;
    std::vector<NodeWeight> weights(core_to_kernel.size());
    for (NodeID i = 0; i < core_to_kernel.size(); ++i) {
        NodeID v = core_to_kernel[i];
        weights[i] = kg.weight(v);
        for (NodeID u : kg.edges(v))
            if (to_core[u] != INVALID_NODE && to_core[u] > i) edges.emplace_back(i, to_core[u]);
    }
    link_graph core = link_graph::from_graph(
        weighted_graph(static_cast<NodeID>(core_to_kernel.size()), edges, std::move(weights)));

    // conflicts that run through dropped vertices survive as links
    for (NodeID i = 0; i < core_to_kernel.size(); ++i) {
        NodeID v = core_to_kernel[i];
        for (NodeID u : kg.links(v)) {
            NodeID j = to_core[u];
            if (j != INVALID_NODE && j > i && !core.adjacent(i, j)) core.add_link(i, j);
        }
        for (NodeID c : kg.edges(v)) {
            if (to_core[c] != INVALID_NODE) continue; // both-in-core paths stay edges
            for (NodeID u : kg.edges(c)) {
                NodeID j = to_core[u];
                if (j != INVALID_NODE && j > i && !core.adjacent(i, j) && !core.linked(i, j))
                    core.add_link(i, j);
            }
        }
    }
    core.seal_base_links();
    return core;
}

solution embed(const solution &best, const std::vector<char> &similar, const solution &core_sol,
               const link_graph &kernel) {
    solution out;
    for (NodeID v : best.nodes)
        if (similar[v]) out.insert(v, kernel.weight(v));
    for (NodeID v : core_sol.nodes) out.insert(v, kernel.weight(v));
    if (!is_2packing(kernel, out.nodes))
        throw std::logic_error("embed: core solution conflicts with the fixed part");
    return out;
}

drp_report drp(const weighted_graph &g, const drp_params &params) {
    drp_report rep;
    timer clock;
    deadline dl(params.time_limit);

    link_graph lg0 = link_graph::from_graph(g);
    reduced_instance kernel = reduce_exhaustively(lg0, reduction_config::strong(), params.seed);
    rep.offset = kernel.offset;
    rep.fully_reduced = kernel.graph.empty();

    auto push_trace = [&](NodeWeight input_scale_weight) {
        if (rep.trace.empty() || input_scale_weight > rep.trace.back().second)
            rep.trace.emplace_back(clock.elapsed(), input_scale_weight);
    };

    if (kernel.graph.empty()) {
        rep.final = restore(kernel, solution{});
        push_trace(rep.final.weight);
        return rep;
    }

    const NodeID n_k = kernel.graph.live_count();
    std::uint64_t step = 0;

    solution best = redW2pack(kernel.graph, next_config(step, params.seed, params.k0), dl);
    rep.pool_runs = 1;
    rep.pool_best = best.weight;
    push_trace(best.weight + kernel.offset);

    std::vector<char> similar(kernel.graph.capacity(), 0);
    NodeID u_count = 0;
    auto reset_similar = [&]() {
        std::fill(similar.begin(), similar.end(), 0);
        for (NodeID v : kernel.graph.live_nodes()) similar[v] = 1;
        u_count = n_k;
    };
    reset_similar();

    double phi = params.phi;
    std::uint32_t rounds = 0;
    while (!dl.expired() && (params.max_rounds == 0 || rounds < params.max_rounds)) {
        ++rounds;
        // pool phase: gather diverse peel solutions until the core triggers
        int stagnant = 0;
        while (!dl.expired() && stagnant < 12 &&
               (!params.use_core || static_cast<double>(u_count) / n_k > phi)) {
            ++step;
            solution s = redW2pack(kernel.graph, next_config(step, params.seed, params.k0), dl);
            ++rep.pool_runs;
            rep.pool_best = std::max(rep.pool_best, s.weight);
            if (s.weight > best.weight) {
                best = s;
                reset_similar();
                push_trace(best.weight + kernel.offset);
                stagnant = 0;
            } else {
                NodeID before = u_count;
                for (NodeID v = 0; v < similar.size(); ++v) {
                    if (!similar[v]) continue;
                    if (best.contains(v) != s.contains(v)) {
                        similar[v] = 0;
                        --u_count;
                    }
                }
                stagnant = u_count == before ? stagnant + 1 : 0;
            }
            if (params.max_rounds != 0 && !params.use_core) break;
        }
        if (params.use_core && static_cast<double>(u_count) / n_k > phi && !dl.expired()) {
            // the pool stopped producing new disagreements; nothing to solve
            continue;
        }
        if (dl.expired() || !params.use_core) continue;

        // core phase
        std::vector<NodeID> core_to_kernel;
        link_graph core = build_dcore(kernel, similar, best, core_to_kernel);
        double budget = params.t_core * (static_cast<double>(n_k - u_count) / n_k);
        budget = std::min(budget, std::max(0.05, dl.remaining()));
        ++step;
        transform_result tr = reduce_and_transform(core, "strong", params.seed + step, true);
        mwis_solver_spec core_spec = params.core_solver;
        core_spec.time_limit = budget;
        core_spec.seed = params.seed + step;
        mwis_result mres = solve_mwis(tr.mwis.graph, core_spec);
        solution on_core = lift(mres.sol, tr.mwis, tr.reduced);
        ++rep.cores_solved;

        solution s_core;
        for (NodeID i : on_core.nodes) s_core.insert(core_to_kernel[i], kernel.graph.weight(core_to_kernel[i]));

        NodeWeight fixed_outside = 0;
        for (NodeID v : best.nodes)
            if (!similar[v]) fixed_outside += kernel.graph.weight(v);

        if (s_core.weight > fixed_outside) {
            best = embed(best, similar, s_core, kernel.graph);
            push_trace(best.weight + kernel.offset);
            if (params.phi_plus * phi < 1.0)
                phi *= params.phi_plus;
            else if (mres.proven_optimal)
                phi = params.phi_minus * (static_cast<double>(u_count) / n_k);
        } else {
            reset_similar();
            if (params.phi_plus * phi < 1.0) phi *= params.phi_plus;
        }
    }

    rep.kernel_best = best.weight;
    rep.phi_final = phi;
    rep.final = restore(kernel, best);
    push_trace(rep.final.weight);
    return rep;
}

} // namespace w2p
