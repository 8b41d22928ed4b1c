#pragma once

#include <array>
#include <memory>
#include <span>
#include <vector>

#include "w2p/defs.hpp"
#include "w2p/weighted_graph.hpp"

namespace w2p {

struct aggregate_audit {
    NodeID vertex;
    // (neighbor weight sum, neighbor weight max, link weight sum or -1 if unknown)
    std::array<NodeWeight, 3> stored;
    std::array<NodeWeight, 3> recomputed;
};

struct journal_entry {
    enum class op : std::uint8_t { hide, add_link, set_weight, new_vertex, materialize };
    op kind;
    NodeID a = INVALID_NODE;
    NodeID b = INVALID_NODE;
};

// Dynamic link-graph: the input graph plus a set of links, where a link
// records that two vertices are at distance exactly two. Links are kept
// disjoint from edges and symmetric. Adjacency entries of removed vertices
// are erased eagerly, so every stored list contains live vertices only.
//
// Per-vertex aggregates (sum and max of neighbor weights, sum of link
// neighborhood weights once materialized) are maintained incrementally;
// audit_aggregates() compares them against recomputation.
//
// Link neighborhoods are computed on demand: until materialize_links(v) is
// called, links_[v] holds only the links inserted explicitly. Afterwards it
// holds the full set of distance-2 partners and is kept current by the
// mutation path, never recomputed from scratch again.
class link_graph {
  public:
    static link_graph from_graph(weighted_graph g);
    static link_graph from_graph(std::shared_ptr<const weighted_graph> g);

    // --- size and liveness -------------------------------------------------
    NodeID capacity() const { return static_cast<NodeID>(alive_.size()); }
    NodeID base_nodes() const { return base_n_; }
    NodeID live_count() const { return live_; }
    bool empty() const { return live_ == 0; }
    bool alive(NodeID v) const { return alive_[v]; }
    bool is_synthetic(NodeID v) const { return v >= base_n_; }
    std::vector<NodeID> live_nodes() const;

    const weighted_graph &base() const { return *base_; }
    const std::shared_ptr<const weighted_graph> &base_ptr() const { return base_; }

    // --- adjacency ---------------------------------------------------------
    std::span<const NodeID> edges(NodeID v) const { return edges_[v]; }
    std::span<const NodeID> links(NodeID v) const { return links_[v]; }
    NodeID degree(NodeID v) const { return static_cast<NodeID>(edges_[v].size()); }
    bool link_known(NodeID v) const { return link_known_[v]; }
    // Requires link_known(v).
    NodeID link_degree(NodeID v) const { return static_cast<NodeID>(links_[v].size()); }

    bool adjacent(NodeID u, NodeID v) const;
    bool linked(NodeID u, NodeID v) const;
    bool common_live_neighbor(NodeID u, NodeID v) const;
    // True iff dist(u, v) <= 2: adjacent, linked, or sharing a live neighbor.
    bool dist2_conflict(NodeID u, NodeID v) const;

    // --- weights and aggregates ---------------------------------------------
    NodeWeight weight(NodeID v) const { return weights_[v]; }
    NodeWeight nbr_weight_sum(NodeID v) const { return nbr_wsum_[v]; }
    NodeWeight nbr_weight_max(NodeID v) const { return nbr_wmax_[v]; }
    // Requires link_known(v).
    NodeWeight link_weight_sum(NodeID v) const { return link_wsum_[v]; }
    // Vertex had explicit links when the instance was constructed.
    bool has_base_link(NodeID v) const { return v < base_n_ && has_base_link_[v]; }

    // --- mutation ----------------------------------------------------------
    // Full link neighborhood of a live vertex; cached on first call.
    std::span<const NodeID> materialize_links(NodeID v);
    // Same set, computed without touching the cache (fast-rule probes).
    void transient_link_neighborhood(NodeID v, std::vector<NodeID> &out) const;

    void add_link(NodeID u, NodeID v);
    // Removes v and every edge/link pointing to it. Returns the survivors
    // whose lists or aggregates changed, ascending.
    std::vector<NodeID> hide_vertex(NodeID v);
    // Equivalent to hiding each member in sequence, but each surviving list
    // is scanned once.
    std::vector<NodeID> bulk_hide(std::span<const NodeID> victims);
    std::vector<NodeID> set_weight(NodeID v, NodeWeight w);
    // Appends an isolated vertex (used by folds); link neighborhood starts
    // known and empty.
    NodeID new_vertex(NodeWeight w);
    // Records the currently stored links as part of the base instance
    // (core extraction seeds links before reducing).
    void seal_base_links();

    // --- auditing ----------------------------------------------------------
    std::vector<aggregate_audit> audit_aggregates() const;
    // Throws std::logic_error on broken symmetry/disjointness/sortedness.
    void check_structure() const;
    void debug_corrupt_aggregate(NodeID v) { nbr_wsum_[v] += 1; }

    const std::vector<journal_entry> &journal() const { return journal_; }
    std::uint64_t materialize_count() const { return materialize_count_; }
    std::uint64_t scan_pass_count() const { return scan_passes_; }

  private:
    void init_from_base();
    void recompute_nbr_max(NodeID v);
    void require_alive(NodeID v, const char *who) const;

    std::shared_ptr<const weighted_graph> base_;
    NodeID base_n_ = 0;
    NodeID live_ = 0;
    std::vector<char> alive_;
    std::vector<std::vector<NodeID>> edges_;
    std::vector<std::vector<NodeID>> links_;
    std::vector<char> link_known_;
    std::vector<char> has_base_link_;
    std::vector<NodeWeight> weights_;
    std::vector<NodeWeight> nbr_wsum_;
    std::vector<NodeWeight> nbr_wmax_;
    std::vector<NodeWeight> link_wsum_;
    std::vector<journal_entry> journal_;
    std::uint64_t materialize_count_ = 0;
    std::uint64_t scan_passes_ = 0;
};

} // namespace w2p
