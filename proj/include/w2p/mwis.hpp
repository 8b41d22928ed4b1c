#pragma once

#include <functional>

#include "w2p/solution.hpp"
#include "w2p/weighted_graph.hpp"

namespace w2p {

// Stand-in solver family so the whole pipeline runs self-contained; anything
// stronger can be plugged in through the file interface.
struct mwis_solver_spec {
    enum class kind_t { greedy, local_search, exact_bb };
    kind_t kind = kind_t::local_search;
    double time_limit = 10.0;
    std::uint64_t seed = 0;
    NodeID exact_size_cap = 1u << 20;
};

struct mwis_result {
    solution sol;
    bool proven_optimal = false;
    double time_to_best = 0.0;
};

// Maximal independent set by descending w(v)/(deg(v)+1), ties by id.
solution greedy_mwis(const weighted_graph &g, std::uint64_t seed = 0);

// (1,1)- and (1,2)-swap local search with random kicks; never returns a
// lighter set than `start`. The checkpoint callback sees every new best
// (elapsed seconds, weight).
solution local_search_mwis(const weighted_graph &g, const solution &start,
                           const mwis_solver_spec &spec,
                           const std::function<void(double, NodeWeight)> &checkpoint = {});

// Branch and bound on the max-degree vertex with a remaining-weight bound,
// components solved separately. On timeout the incumbent is completed
// greedily over the unsolved components and proven_optimal stays false.
mwis_result exact_mwis_bb(const weighted_graph &g, const mwis_solver_spec &spec);

mwis_result solve_mwis(const weighted_graph &g, const mwis_solver_spec &spec);

} // namespace w2p
