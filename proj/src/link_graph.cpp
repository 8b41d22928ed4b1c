#include "w2p/link_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace w2p {

namespace {

bool sorted_insert(std::vector<NodeID> &vec, NodeID x) {
    auto it = std::lower_bound(vec.begin(), vec.end(), x);
    if (it != vec.end() && *it == x) return false;
    vec.insert(it, x);
    return true;
}

bool sorted_erase(std::vector<NodeID> &vec, NodeID x) {
    auto it = std::lower_bound(vec.begin(), vec.end(), x);
    if (it == vec.end() || *it != x) return false;
    vec.erase(it);
    return true;
}

bool sorted_contains(const std::vector<NodeID> &vec, NodeID x) {
    return std::binary_search(vec.begin(), vec.end(), x);
}

} // namespace

link_graph link_graph::from_graph(weighted_graph g) {
    return from_graph(std::make_shared<const weighted_graph>(std::move(g)));
}

link_graph link_graph::from_graph(std::shared_ptr<const weighted_graph> g) {
    link_graph lg;
    lg.base_ = std::move(g);
    lg.init_from_base();
    return lg;
}

void link_graph::init_from_base() {
    const weighted_graph &g = *base_;
    base_n_ = g.number_of_nodes();
    live_ = base_n_;
    alive_.assign(base_n_, 1);
    edges_.resize(base_n_);
    links_.assign(base_n_, {});
    link_known_.assign(base_n_, 0);
    has_base_link_.assign(base_n_, 0);
    weights_.assign(base_n_, 0);
    nbr_wsum_.assign(base_n_, 0);
    nbr_wmax_.assign(base_n_, 0);
    link_wsum_.assign(base_n_, 0);
    for (NodeID v = 0; v < base_n_; ++v) {
        auto nb = g.neighbors(v);
        edges_[v].assign(nb.begin(), nb.end());
        weights_[v] = g.weight(v);
    }
    for (NodeID v = 0; v < base_n_; ++v) {
        NodeWeight sum = 0, mx = 0;
        for (NodeID u : edges_[v]) {
            sum += weights_[u];
            mx = std::max(mx, weights_[u]);
        }
        nbr_wsum_[v] = sum;
        nbr_wmax_[v] = mx;
    }
}

std::vector<NodeID> link_graph::live_nodes() const {
    std::vector<NodeID> out;
    out.reserve(live_);
    for (NodeID v = 0; v < capacity(); ++v)
        if (alive_[v]) out.push_back(v);
    return out;
}

bool link_graph::adjacent(NodeID u, NodeID v) const { return sorted_contains(edges_[u], v); }

bool link_graph::linked(NodeID u, NodeID v) const { return sorted_contains(links_[u], v); }

bool link_graph::common_live_neighbor(NodeID u, NodeID v) const {
    const auto &a = edges_[u];
    const auto &b = edges_[v];
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return false;
}

bool link_graph::dist2_conflict(NodeID u, NodeID v) const {
    return adjacent(u, v) || linked(u, v) || common_live_neighbor(u, v);
}

void link_graph::require_alive(NodeID v, const char *who) const {
    if (v >= capacity() || !alive_[v])
        throw std::invalid_argument(std::string(who) + ": vertex " + std::to_string(v) + " is not alive");
}

void link_graph::transient_link_neighborhood(NodeID v, std::vector<NodeID> &out) const {
    require_alive(v, "transient_link_neighborhood");
    out.assign(links_[v].begin(), links_[v].end());
    for (NodeID y : edges_[v])
        for (NodeID z : edges_[y]) {
            if (z == v) continue;
            if (sorted_contains(edges_[v], z)) continue;
            out.push_back(z);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

std::span<const NodeID> link_graph::materialize_links(NodeID v) {
    require_alive(v, "materialize_links");
    if (link_known_[v]) return links_[v];
    std::vector<NodeID> full;
    transient_link_neighborhood(v, full);
    NodeWeight sum = 0;
    for (NodeID u : full) {
        sum += weights_[u];
        if (!sorted_contains(links_[v], u)) {
            // mirror the cached entry so hiding u later cleans this list
            if (sorted_insert(links_[u], v) && link_known_[u]) link_wsum_[u] += weights_[v];
        }
    }
    links_[v] = std::move(full);
    link_wsum_[v] = sum;
    link_known_[v] = 1;
    ++materialize_count_;
    journal_.push_back({journal_entry::op::materialize, v, INVALID_NODE});
    return links_[v];
}

void link_graph::add_link(NodeID u, NodeID v) {
    require_alive(u, "add_link");
    require_alive(v, "add_link");
    if (u == v) throw std::invalid_argument("add_link: self-link");
    if (adjacent(u, v)) throw std::invalid_argument("add_link: endpoints are adjacent");
    bool ins_u = sorted_insert(links_[u], v);
    bool ins_v = sorted_insert(links_[v], u);
    if (ins_u && link_known_[u]) link_wsum_[u] += weights_[v];
    if (ins_v && link_known_[v]) link_wsum_[v] += weights_[u];
    if (ins_u || ins_v) journal_.push_back({journal_entry::op::add_link, u, v});
}

void link_graph::recompute_nbr_max(NodeID v) {
    NodeWeight mx = 0;
    for (NodeID u : edges_[v]) mx = std::max(mx, weights_[u]);
    nbr_wmax_[v] = mx;
}

std::vector<NodeID> link_graph::hide_vertex(NodeID v) {
    require_alive(v, "hide_vertex");
    std::vector<NodeID> touched;
    for (NodeID x : edges_[v]) {
        sorted_erase(edges_[x], v);
        ++scan_passes_;
        nbr_wsum_[x] -= weights_[v];
        if (weights_[v] == nbr_wmax_[x]) recompute_nbr_max(x);
        touched.push_back(x);
    }
    for (NodeID x : links_[v]) {
        if (sorted_erase(links_[x], v)) {
            ++scan_passes_;
            if (link_known_[x]) link_wsum_[x] -= weights_[v];
        }
        touched.push_back(x);
    }
    edges_[v].clear();
    links_[v].clear();
    link_known_[v] = 0;
    alive_[v] = 0;
    --live_;
    journal_.push_back({journal_entry::op::hide, v, INVALID_NODE});
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    return touched;
}

std::vector<NodeID> link_graph::bulk_hide(std::span<const NodeID> victims) {
    for (NodeID v : victims) require_alive(v, "bulk_hide");
    if (victims.empty()) return {};
    std::vector<char> in_k(capacity(), 0);
    for (NodeID v : victims) {
        if (in_k[v]) throw std::invalid_argument("bulk_hide: duplicate victim");
        in_k[v] = 1;
    }
    std::vector<NodeID> touched;
    for (NodeID v : victims) {
        for (NodeID x : edges_[v])
            if (!in_k[x]) touched.push_back(x);
        for (NodeID x : links_[v])
            if (!in_k[x]) touched.push_back(x);
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

    for (NodeID x : touched) {
        NodeWeight removed_sum = 0;
        bool removed_max = false;
        auto &ex = edges_[x];
        std::size_t before = ex.size();
        std::erase_if(ex, [&](NodeID y) {
            if (!in_k[y]) return false;
            removed_sum += weights_[y];
            if (weights_[y] == nbr_wmax_[x]) removed_max = true;
            return true;
        });
        if (before != ex.size()) {
            ++scan_passes_;
            nbr_wsum_[x] -= removed_sum;
            if (removed_max) recompute_nbr_max(x);
        }
        NodeWeight removed_lsum = 0;
        auto &lx = links_[x];
        std::size_t lbefore = lx.size();
        std::erase_if(lx, [&](NodeID y) {
            if (!in_k[y]) return false;
            removed_lsum += weights_[y];
            return true;
        });
        if (lbefore != lx.size()) {
            ++scan_passes_;
            if (link_known_[x]) link_wsum_[x] -= removed_lsum;
        }
    }
    for (NodeID v : victims) {
        edges_[v].clear();
        links_[v].clear();
        link_known_[v] = 0;
        alive_[v] = 0;
        --live_;
        journal_.push_back({journal_entry::op::hide, v, INVALID_NODE});
    }
    return touched;
}

std::vector<NodeID> link_graph::set_weight(NodeID v, NodeWeight w) {
    require_alive(v, "set_weight");
    if (w < 0) throw std::invalid_argument("set_weight: negative weight");
    NodeWeight old = weights_[v];
    if (w == old) return {};
    weights_[v] = w;
    std::vector<NodeID> touched{v};
    for (NodeID x : edges_[v]) {
        nbr_wsum_[x] += w - old;
        if (w > nbr_wmax_[x])
            nbr_wmax_[x] = w;
        else if (old == nbr_wmax_[x])
            recompute_nbr_max(x);
        touched.push_back(x);
    }
    for (NodeID x : links_[v]) {
        if (link_known_[x]) link_wsum_[x] += w - old;
        touched.push_back(x);
    }
    journal_.push_back({journal_entry::op::set_weight, v, INVALID_NODE});
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    return touched;
}

NodeID link_graph::new_vertex(NodeWeight w) {
    if (w < 0) throw std::invalid_argument("new_vertex: negative weight");
    NodeID v = capacity();
    alive_.push_back(1);
    edges_.emplace_back();
    links_.emplace_back();
    link_known_.push_back(1);
    weights_.push_back(w);
    nbr_wsum_.push_back(0);
    nbr_wmax_.push_back(0);
    link_wsum_.push_back(0);
    ++live_;
    journal_.push_back({journal_entry::op::new_vertex, v, INVALID_NODE});
    return v;
}

void link_graph::seal_base_links() {
    for (NodeID v = 0; v < base_n_; ++v)
        if (!links_[v].empty()) has_base_link_[v] = 1;
}

std::vector<aggregate_audit> link_graph::audit_aggregates() const {
    std::vector<aggregate_audit> mismatches;
    for (NodeID v = 0; v < capacity(); ++v) {
        if (!alive_[v]) continue;
        NodeWeight sum = 0, mx = 0;
        for (NodeID u : edges_[v]) {
            sum += weights_[u];
            mx = std::max(mx, weights_[u]);
        }
        NodeWeight lsum = -1, stored_lsum = -1;
        if (link_known_[v]) {
            lsum = 0;
            for (NodeID u : links_[v]) lsum += weights_[u];
            stored_lsum = link_wsum_[v];
        }
        aggregate_audit a{v, {nbr_wsum_[v], nbr_wmax_[v], stored_lsum}, {sum, mx, lsum}};
        if (a.stored != a.recomputed) mismatches.push_back(a);
    }
    return mismatches;
}

void link_graph::check_structure() const {
    auto fail = [](const std::string &msg) { throw std::logic_error("link_graph: " + msg); };
    for (NodeID v = 0; v < capacity(); ++v) {
        if (!alive_[v]) {
            if (!edges_[v].empty() || !links_[v].empty()) fail("dead vertex with adjacency");
            continue;
        }
        if (!std::is_sorted(edges_[v].begin(), edges_[v].end())) fail("unsorted edge list");
        if (!std::is_sorted(links_[v].begin(), links_[v].end())) fail("unsorted link list");
        for (NodeID u : edges_[v]) {
            if (u == v) fail("self-loop");
            if (!alive_[u]) fail("edge to dead vertex");
            if (!sorted_contains(edges_[u], v)) fail("asymmetric edge");
            if (sorted_contains(links_[v], u)) fail("link parallel to edge");
        }
        for (NodeID u : links_[v]) {
            if (u == v) fail("self-link");
            if (!alive_[u]) fail("link to dead vertex");
            if (!sorted_contains(links_[u], v)) fail("asymmetric link");
        }
    }
}

} // namespace w2p
