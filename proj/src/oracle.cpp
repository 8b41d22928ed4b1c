#include "w2p/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace w2p {

namespace {

constexpr std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

// Branch-and-bound over subsets of at most 64 candidates, conflicts given as
// bitmasks. Candidates are tried in descending weight (ties by position) and
// the remaining-weight bound prunes.
struct subset_search {
    const std::vector<NodeWeight> &w;
    const std::vector<std::uint64_t> &conflict;
    std::vector<std::size_t> order;
    NodeWeight best = -1;
    std::uint64_t best_mask = 0;

    void run() {
        order.resize(w.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });
        rec(0, 0, 0, 0);
    }

    void rec(std::size_t pos, std::uint64_t banned, NodeWeight acc, std::uint64_t chosen) {
        if (acc > best) {
            best = acc;
            best_mask = chosen;
        }
        NodeWeight rest = 0;
        for (std::size_t k = pos; k < order.size(); ++k)
            if (!(banned & bit(order[k]))) rest += w[order[k]];
        if (acc + rest <= best) return;
        std::size_t k = pos;
        while (k < order.size() && (banned & bit(order[k]))) ++k;
        if (k == order.size()) return;
        std::size_t v = order[k];
        rec(k + 1, banned | conflict[v] | bit(v), acc + w[v], chosen | bit(v));
        rec(k + 1, banned | bit(v), acc, chosen);
    }
};

solution search_to_solution(const std::vector<NodeID> &ids, const std::vector<NodeWeight> &w,
                            const std::vector<std::uint64_t> &conflict) {
    subset_search s{w, conflict, {}, -1, 0};
    s.run();
    solution out;
    out.weight = std::max<NodeWeight>(s.best, 0);
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (s.best_mask & bit(i)) out.nodes.push_back(ids[i]);
    std::sort(out.nodes.begin(), out.nodes.end());
    return out;
}

void check_budget(std::size_t n, oracle_budget budget, const char *who) {
    if (n > budget.max_nodes || n > 64)
        throw std::runtime_error(std::string(who) + ": oracle budget exceeded (" +
                                 std::to_string(n) + " vertices)");
}

} // namespace

bool is_2packing(const weighted_graph &g, std::span<const NodeID> s) {
    std::vector<NodeID> owner(g.number_of_nodes(), INVALID_NODE);
    for (NodeID v : s) {
        if (v >= g.number_of_nodes()) return false;
        if (owner[v] != INVALID_NODE && owner[v] != v) return false;
        owner[v] = v;
        for (NodeID x : g.neighbors(v)) {
            if (owner[x] != INVALID_NODE && owner[x] != v) return false;
            owner[x] = v;
        }
    }
    return true;
}

bool is_2packing(const link_graph &lg, std::span<const NodeID> s) {
    std::vector<NodeID> owner(lg.capacity(), INVALID_NODE);
    for (NodeID v : s) {
        if (v >= lg.capacity() || !lg.alive(v)) return false;
        if (owner[v] != INVALID_NODE && owner[v] != v) return false;
        owner[v] = v;
        for (NodeID x : lg.edges(v)) {
            if (owner[x] != INVALID_NODE && owner[x] != v) return false;
            owner[x] = v;
        }
    }
    std::vector<NodeID> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    for (NodeID v : s)
        for (NodeID u : lg.links(v))
            if (std::binary_search(sorted.begin(), sorted.end(), u)) return false;
    return true;
}

bool is_independent(const weighted_graph &g, std::span<const NodeID> s) {
    std::vector<char> in(g.number_of_nodes(), 0);
    for (NodeID v : s) {
        if (v >= g.number_of_nodes() || in[v]) return false;
        in[v] = 1;
    }
    for (NodeID v : s)
        for (NodeID x : g.neighbors(v))
            if (in[x]) return false;
    return true;
}

solution brute_mw2ps_region(const link_graph &lg, std::span<const NodeID> region,
                            oracle_budget budget) {
    check_budget(region.size(), budget, "brute_mw2ps");
    std::vector<NodeID> ids(region.begin(), region.end());
    std::sort(ids.begin(), ids.end());
    for (NodeID v : ids)
        if (!lg.alive(v)) throw std::invalid_argument("brute_mw2ps: dead vertex in region");
    std::vector<NodeWeight> w(ids.size());
    std::vector<std::uint64_t> conflict(ids.size(), 0);
    for (std::size_t i = 0; i < ids.size(); ++i) w[i] = lg.weight(ids[i]);
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (lg.dist2_conflict(ids[i], ids[j])) {
                conflict[i] |= bit(j);
                conflict[j] |= bit(i);
            }
    return search_to_solution(ids, w, conflict);
}

solution brute_mw2ps(const link_graph &lg, oracle_budget budget) {
    auto live = lg.live_nodes();
    return brute_mw2ps_region(lg, live, budget);
}

solution brute_mwis(const weighted_graph &g, oracle_budget budget) {
    check_budget(g.number_of_nodes(), budget, "brute_mwis");
    std::vector<NodeID> ids(g.number_of_nodes());
    std::iota(ids.begin(), ids.end(), NodeID{0});
    std::vector<NodeWeight> w(ids.size());
    std::vector<std::uint64_t> conflict(ids.size(), 0);
    for (NodeID v = 0; v < g.number_of_nodes(); ++v) {
        w[v] = g.weight(v);
        for (NodeID u : g.neighbors(v))
            if (u > v) {
                conflict[v] |= bit(u);
                conflict[u] |= bit(v);
            }
    }
    return search_to_solution(ids, w, conflict);
}

} // namespace w2p
