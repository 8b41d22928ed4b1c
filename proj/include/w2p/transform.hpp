#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "w2p/reductions.hpp"
#include "w2p/weighted_graph.hpp"

namespace w2p {

// MWIS instance produced from a (reduced) link-graph. An edge connects every
// pair at distance at most two, so independent sets here are exactly the
// 2-packing sets of the source instance.
struct mwis_instance {
    weighted_graph graph;
    std::vector<NodeID> to_source;   // mwis id -> link-graph id
    std::vector<NodeID> from_source; // link-graph id -> mwis id (INVALID_NODE if gone)
};

struct transform_stats {
    std::string config;
    NodeID n_input = 0;
    EdgeID m_square_input = 0;
    NodeID n_kernel = 0;
    EdgeID m_square_kernel = 0;
    NodeWeight offset = 0;
    bool fully_reduced = false;
    std::array<std::uint32_t, RULE_ID_COUNT> rule_counts{};
};

struct transform_result {
    mwis_instance mwis;
    reduced_instance reduced;
    transform_stats stats;
};

mwis_instance square(const link_graph &lg);

// Number of square-graph edges without materializing them.
EdgeID count_square_edges(const link_graph &lg);

// config: transform | full | fast | strong | core.
transform_result reduce_and_transform(const weighted_graph &g, const std::string &config,
                                      std::uint64_t seed = 0);
// Core instances enter as link-graphs.
transform_result reduce_and_transform(const link_graph &lg, const std::string &config,
                                      std::uint64_t seed = 0, bool shuffle_candidates = false);

// Maps an independent set of the transformed instance back through the
// reduction stack; the result is a feasible 2-packing set of the base
// instance. Throws if the input is not independent.
solution lift(const solution &mwis_sol, const mwis_instance &inst, const reduced_instance &ri);

} // namespace w2p
