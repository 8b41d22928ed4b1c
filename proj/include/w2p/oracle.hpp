#pragma once

#include <span>

#include "w2p/link_graph.hpp"
#include "w2p/solution.hpp"
#include "w2p/weighted_graph.hpp"

namespace w2p {

struct oracle_budget {
    NodeID max_nodes = 16;
};

// True iff no two members of s are adjacent or share a common neighbor.
bool is_2packing(const weighted_graph &g, std::span<const NodeID> s);
// Link-graph variant: linked pairs conflict as well.
bool is_2packing(const link_graph &lg, std::span<const NodeID> s);
bool is_independent(const weighted_graph &g, std::span<const NodeID> s);

// Exact maximum weight 2-packing set by pruned subset enumeration.
solution brute_mw2ps(const link_graph &lg, oracle_budget budget = {});
// Optimum over `region` with conflicts evaluated against the full live
// structure: members of the region that share a live neighbor outside it
// still conflict.
solution brute_mw2ps_region(const link_graph &lg, std::span<const NodeID> region,
                            oracle_budget budget = {});
// Exact maximum weight independent set.
solution brute_mwis(const weighted_graph &g, oracle_budget budget = {});

} // namespace w2p
