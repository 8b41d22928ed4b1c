#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "w2p/mwis.hpp"
#include "w2p/peel.hpp"
#include "w2p/transform.hpp"

namespace w2p {

struct drp_params {
    double phi = 0.6;       // solve the core once |U|/n(K) drops to phi
    double phi_plus = 1.0;  // upscaling factor, applied while phi_plus*phi < 1
    double phi_minus = 1.0; // rescale on optimally solved cores
    double t_core = 80.0;   // core budget seconds, scaled by |D|/n(K)
    bool use_core = true;
    mwis_solver_spec core_solver;
    double time_limit = 10.0;
    std::uint64_t seed = 0;
    NodeID k0 = 4;               // initial adaptive candidate count
    std::uint32_t max_rounds = 0; // 0 = run until the time limit

    static drp_params bchils_preset();
    static drp_params kamis_preset();
    static drp_params no_core_preset();
};

struct drp_report {
    solution final;                 // on the input graph
    NodeWeight kernel_best = 0;     // best solution weight on the kernel
    NodeWeight pool_best = 0;       // best weight among the peel runs alone
    NodeWeight offset = 0;
    bool fully_reduced = false;
    std::uint32_t pool_runs = 0;
    std::uint32_t cores_solved = 0;
    double phi_final = 0.0;
    // (seconds, input-scale weight) every time the best improves
    std::vector<std::pair<double, NodeWeight>> trace;
};

// Diversification schedule: ratings cycle in their introduction order, each
// alternating adaptive/non-adaptive, and exclude/include where include is
// defined. Adaptive revisits grow k by one; non-adaptive revisits redraw p.
peel_config next_config(std::uint64_t step, std::uint64_t seed, NodeID k0);

// Induced link-subgraph on the non-similar vertices. Pairs that shared a
// neighbor outside the core keep their conflict as a seeded link; vertices
// within distance two of a solution vertex fixed outside the core are
// dropped so that embeddings stay feasible.
link_graph build_dcore(const reduced_instance &kernel, const std::vector<char> &similar,
                       const solution &best, std::vector<NodeID> &core_to_kernel);

// Replaces best's non-similar part with the core solution when strictly
// heavier; feasibility on the kernel is a hard assertion.
solution embed(const solution &best, const std::vector<char> &similar, const solution &core_sol,
               const link_graph &kernel);

drp_report drp(const weighted_graph &g, const drp_params &params);

} // namespace w2p
