#pragma once

#include <cstdint>
#include <queue>
#include <random>

#include "w2p/reductions.hpp"
#include "w2p/timer.hpp"

namespace w2p {

struct peel_config {
    enum class rating_t { weight_diff, weight, degree };
    enum class mode_t { adaptive, non_adaptive };
    enum class action_t { exclude, include };

    rating_t rating = rating_t::weight_diff;
    mode_t mode = mode_t::adaptive;
    action_t action = action_t::exclude;
    NodeID k = 4;    // adaptive: pick uniformly among the k best candidates
    double p = 0.9;  // non-adaptive: per-entry perturbation probability
    std::uint64_t seed = 0;
    reduction_config reduction_order = reduction_config::core();
    bool shuffle_reductions = false;

    void validate() const; // throws std::invalid_argument
};

// weight_diff: w(v) - w(L(v)) - w(N(v));  weight: w(v);  degree: -deg - deg_L.
// Materializes the link neighborhood on first use.
NodeWeight rating_value(link_graph &lg, NodeID v, peel_config::rating_t kind);

// One heuristic peeling step between exhausted exact reductions: excludes or
// includes one vertex picked by the configured rating.
class peeler {
  public:
    // The reducer is shared with the exact-reduction phases so that both see
    // the same dependency bookkeeping.
    peeler(reduced_instance &ri, reducer &red, const peel_config &cfg);

    const reduction_event &peel_step();
    // Re-rates vertices touched by events appended since the last call.
    void sync_with_stack();

  private:
    NodeWeight keyed(NodeID v);
    void push(NodeID v);
    NodeID pop_adaptive();
    NodeID pop_non_adaptive();

    reduced_instance &ri_;
    link_graph &lg_;
    peel_config cfg_;
    reducer &red_;
    std::mt19937_64 rng_;
    // adaptive: lazy min-heap on (key, id); stale entries re-pushed on pop
    using entry = std::pair<NodeWeight, NodeID>;
    std::priority_queue<entry, std::vector<entry>, std::greater<entry>> heap_;
    // non-adaptive: one ranking computed up front, perturbed before each step
    std::vector<NodeID> ranking_;
    std::size_t stack_cursor_ = 0;
};

// Alternates exhaustive exact reduction with heuristic peeling until the
// instance is empty (or the deadline hits), then rebuilds a maximal feasible
// 2-packing set of the input.
solution redW2pack(const link_graph &instance, const peel_config &cfg,
                   deadline dl = deadline::unlimited());
solution redW2pack(const weighted_graph &g, const peel_config &cfg,
                   deadline dl = deadline::unlimited());

} // namespace w2p
