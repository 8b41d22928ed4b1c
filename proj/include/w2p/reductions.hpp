#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <memory>
#include <string>
#include <vector>

#include "w2p/link_graph.hpp"
#include "w2p/oracle.hpp"
#include "w2p/solution.hpp"

namespace w2p {

enum class rule_id : int {
    heavy_vertex = 1,
    neighbor_removal = 2,
    neighborhood_removal = 3,
    split_neighbor_removal = 4,
    intersection_removal = 5,
    split_intersection_removal = 6,
    domination = 7,
    weighted_clique = 8,
    d2_weight_transfer = 9,
    neighborhood_folding = 10,
    fast_degree1 = 11,
    fast_degree2 = 12,
    fast_neighborhood_removal = 13,
    peel_exclude = 20,
    peel_include = 21,
};

constexpr int RULE_ID_COUNT = 22;

enum class event_kind : std::uint8_t { include, exclude, fold };

struct removed_node {
    NodeID v;
    NodeWeight weight;
};

// One stack entry per applied reduction; carries what the reconstruction
// needs and which survivors were touched (for dependency re-checking).
struct reduction_event {
    rule_id rule;
    event_kind kind;
    NodeID pivot = INVALID_NODE;
    std::vector<removed_node> removed;
    NodeWeight offset_delta = 0;
    NodeID included = INVALID_NODE;
    // weight-transfer folds: survivors whose weight was lowered by fold_shift
    std::vector<NodeID> fold_survivors;
    NodeWeight fold_shift = 0;
    // neighborhood folding: placeholder vertex standing for the folded set
    NodeID fold_vertex = INVALID_NODE;
    std::vector<NodeID> fold_constituents;
    std::vector<std::pair<NodeID, NodeID>> added_links;
    std::vector<NodeID> touched;
};

struct reduction_config {
    std::string name;
    std::vector<int> order;

    static reduction_config full();
    static reduction_config fast();
    static reduction_config strong();
    static reduction_config core();
    static reduction_config none();
    // full | fast | strong | core; throws on anything else.
    static reduction_config by_name(const std::string &name);
};

struct reduced_instance {
    std::shared_ptr<const link_graph> base; // instance state before reduction
    link_graph graph;                       // surviving instance
    std::vector<reduction_event> stack;
    NodeWeight offset = 0;
    std::array<std::uint32_t, RULE_ID_COUNT> rule_counts{};

    static reduced_instance wrap(const link_graph &lg);
};

// Per-rule reduction probes plus the exhaustive engine. Each try_* mutates
// the instance only when it applies and then pushes exactly one event.
class reducer {
  public:
    explicit reducer(reduced_instance &ri, std::uint64_t seed = 0, bool shuffle_candidates = false);

    // Exact test predicate; too expensive for production orders.
    bool heavy_vertex_condition(NodeID v, oracle_budget budget = {12});
    bool try_heavy_vertex(NodeID v, oracle_budget budget = {12});

    bool try_neighbor_removal(NodeID v, NodeID u);
    bool try_neighborhood_removal(NodeID v);
    bool try_split_neighbor_removal(NodeID v, NodeID u);
    bool try_intersection_removal(NodeID v, NodeID u);
    bool try_split_intersection_removal(NodeID v, NodeID u);
    bool try_domination(NodeID v, NodeID u);
    bool try_weighted_clique(NodeID v);
    bool try_d2_weight_transfer(NodeID v);
    bool try_neighborhood_folding(NodeID v);
    bool try_fast_degree1(NodeID u);
    bool try_fast_degree2(NodeID u, NodeID y);
    bool try_fast_neighborhood_removal(NodeID v);

    // Tries one rule at one pivot, enumerating partners where the rule needs
    // them. Returns true iff an event was pushed.
    bool try_rule_at(int rule, NodeID pivot);

    // Applies cfg.order exhaustively with dependency re-checking: after each
    // application the rules are re-tested on every vertex whose 2-neighborhood
    // changed, earlier rules first. Repeated calls with the same order only
    // revisit the region touched by events appended since the previous call.
    void run(const reduction_config &cfg);

    // Peeling primitives: structurally identical to a rule exclusion/inclusion.
    const reduction_event &apply_exclude(rule_id rule, NodeID v);
    const reduction_event &apply_include(rule_id rule, NodeID v);

    bool is_d2_simplicial(NodeID v);

  private:
    struct pending_set;

    reduction_event &exclude_set(rule_id rule, NodeID pivot, const std::vector<NodeID> &victims);
    reduction_event &include_ball(rule_id rule, NodeID pivot);
    void remove_with_boundary_links(reduction_event &e, const std::vector<NodeID> &victims);
    void finish_event(reduction_event &&e);

    std::vector<NodeID> closed_ball(NodeID v); // {v} + N(v) + L(v), materializes v
    void ensure_fast13_table();
    std::vector<NodeID> affected_region(const reduction_event &e) const;

    reduced_instance &ri_;
    link_graph &lg_;
    std::uint64_t seed_;
    bool shuffle_;
    std::vector<NodeWeight> fast13_bound_;
    bool fast13_ready_ = false;
    std::vector<char> fd1_skip_;
    std::vector<NodeID> scratch_;
    std::vector<int> engine_order_;
    std::size_t engine_cursor_ = 0;
};

// Reduces a copy of lg until no rule of the configuration applies anywhere.
// Same seed, same result.
reduced_instance reduce_exhaustively(const link_graph &lg, const reduction_config &cfg,
                                     std::uint64_t seed = 0, bool shuffle_candidates = false);

// Unwinds the stack over a feasible solution of ri.graph and greedily adds
// free vertices (descending weight, then ascending id). The result is a
// feasible, maximal 2-packing set of the base instance.
solution restore(const reduced_instance &ri, const solution &reduced_sol);

} // namespace w2p
