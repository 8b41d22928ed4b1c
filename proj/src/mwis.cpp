#include "w2p/mwis.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "w2p/oracle.hpp"
#include "w2p/timer.hpp"

namespace w2p {

namespace {

// a/(da+1) > b/(db+1) without rounding
bool ratio_greater(NodeWeight wa, NodeID da, NodeWeight wb, NodeID db) {
    return static_cast<__int128>(wa) * (db + 1) > static_cast<__int128>(wb) * (da + 1);
}

std::vector<NodeID> greedy_order(const weighted_graph &g) {
    std::vector<NodeID> order(g.number_of_nodes());
    std::iota(order.begin(), order.end(), NodeID{0});
    std::stable_sort(order.begin(), order.end(), [&](NodeID a, NodeID b) {
        return ratio_greater(g.weight(a), g.degree(a), g.weight(b), g.degree(b));
    });
    return order;
}

} // namespace

solution greedy_mwis(const weighted_graph &g, std::uint64_t) {
    solution s;
    std::vector<char> blocked(g.number_of_nodes(), 0);
    for (NodeID v : greedy_order(g)) {
        if (blocked[v]) continue;
        s.insert(v, g.weight(v));
        blocked[v] = 1;
        for (NodeID u : g.neighbors(v)) blocked[u] = 1;
    }
    return s;
}

namespace {

struct ls_state {
    const weighted_graph &g;
    std::vector<char> in_sol;
    std::vector<NodeID> tight; // number of solution neighbors
    NodeWeight weight = 0;

    explicit ls_state(const weighted_graph &graph)
        : g(graph), in_sol(graph.number_of_nodes(), 0), tight(graph.number_of_nodes(), 0) {}

    bool free_vertex(NodeID v) const { return !in_sol[v] && tight[v] == 0; }

    void add(NodeID v) {
        in_sol[v] = 1;
        weight += g.weight(v);
        for (NodeID u : g.neighbors(v)) ++tight[u];
    }
    void remove(NodeID v) {
        in_sol[v] = 0;
        weight -= g.weight(v);
        for (NodeID u : g.neighbors(v)) --tight[u];
    }
    void fill(const std::vector<NodeID> &order) {
        for (NodeID v : order)
            if (free_vertex(v)) add(v);
    }
    solution snapshot() const {
        solution s;
        for (NodeID v = 0; v < g.number_of_nodes(); ++v)
            if (in_sol[v]) s.nodes.push_back(v);
        s.weight = weight;
        return s;
    }
};

} // namespace

solution local_search_mwis(const weighted_graph &g, const solution &start,
                           const mwis_solver_spec &spec,
                           const std::function<void(double, NodeWeight)> &checkpoint) {
    if (!is_independent(g, start.nodes))
        throw std::invalid_argument("local_search_mwis: start solution is not independent");
    timer clock;
    deadline dl(spec.time_limit);
    std::mt19937_64 rng(spec.seed);
    const auto order = greedy_order(g);

    ls_state st(g);
    for (NodeID v : start.nodes) st.add(v);
    st.fill(order);

    solution best = st.snapshot();
    if (checkpoint) checkpoint(clock.elapsed(), best.weight);

    constexpr int k_stall = 1000;
    int since_improve = 0;
    std::vector<NodeID> cand;

    auto try_swaps_at = [&](NodeID x) -> bool {
        // (1,1): one heavier vertex only blocked by x
        NodeID swap_in = INVALID_NODE;
        cand.clear();
        for (NodeID y : g.neighbors(x)) {
            if (st.in_sol[y] || st.tight[y] != 1) continue;
            cand.push_back(y);
            if (g.weight(y) > g.weight(x) &&
                (swap_in == INVALID_NODE || g.weight(y) > g.weight(swap_in)))
                swap_in = y;
        }
        if (swap_in != INVALID_NODE) {
            st.remove(x);
            st.add(swap_in);
            return true;
        }
        // (1,2): two non-adjacent vertices blocked only by x
        std::stable_sort(cand.begin(), cand.end(),
                         [&](NodeID a, NodeID b) { return g.weight(a) > g.weight(b); });
        if (cand.size() > 32) cand.resize(32);
        for (std::size_t i = 0; i < cand.size(); ++i)
            for (std::size_t j = i + 1; j < cand.size(); ++j) {
                if (g.weight(cand[i]) + g.weight(cand[j]) <= g.weight(x)) break;
                if (!g.adjacent(cand[i], cand[j])) {
                    st.remove(x);
                    st.add(cand[i]);
                    st.add(cand[j]);
                    return true;
                }
            }
        return false;
    };

    while (!dl.expired() && g.number_of_nodes() > 0) {
        bool improved = false;
        auto members = st.snapshot().nodes;
        for (NodeID x : members) {
            if (dl.expired()) break;
            if (!st.in_sol[x]) continue;
            if (try_swaps_at(x)) {
                st.fill(order);
                improved = true;
                since_improve = 0;
            } else {
                ++since_improve;
            }
        }
        if (st.weight > best.weight) {
            best = st.snapshot();
            if (checkpoint) checkpoint(clock.elapsed(), best.weight);
        }
        if (!improved || since_improve >= k_stall) {
            // kick: force a random outsider in, eject its solution neighbors
            since_improve = 0;
            NodeID v = static_cast<NodeID>(rng() % g.number_of_nodes());
            if (!st.in_sol[v]) {
                for (NodeID u : g.neighbors(v))
                    if (st.in_sol[u]) st.remove(u);
                st.add(v);
                st.fill(order);
            }
        }
    }
    return best;
}

namespace {

struct bb_component {
    const weighted_graph &g;
    const deadline &dl;
    std::vector<char> &state; // 0 free, 1 solution, 2 removed
    const std::vector<NodeID> &comp;
    NodeWeight best_w = -1;
    std::vector<NodeID> best_set;
    std::vector<NodeID> cur;
    NodeWeight cur_w = 0;
    bool timed_out = false;
    std::uint32_t tick = 0;

    void record() {
        if (cur_w > best_w) {
            best_w = cur_w;
            best_set = cur;
        }
    }

    void rec() {
        if (timed_out) return;
        if ((++tick & 255u) == 0 && dl.expired()) {
            timed_out = true;
            return;
        }
        record();
        NodeWeight rest = 0;
        NodeID pick = INVALID_NODE;
        std::size_t pick_deg = 0;
        for (NodeID v : comp) {
            if (state[v] != 0) continue;
            rest += g.weight(v);
            std::size_t d = 0;
            for (NodeID u : g.neighbors(v))
                if (state[u] == 0) ++d;
            if (pick == INVALID_NODE || d > pick_deg) {
                pick = v;
                pick_deg = d;
            }
        }
        if (cur_w + rest <= best_w) return;
        if (pick == INVALID_NODE) return;

        // include
        std::vector<NodeID> hidden;
        state[pick] = 1;
        cur.push_back(pick);
        cur_w += g.weight(pick);
        for (NodeID u : g.neighbors(pick))
            if (state[u] == 0) {
                state[u] = 2;
                hidden.push_back(u);
            }
        rec();
        for (NodeID u : hidden) state[u] = 0;
        cur.pop_back();
        cur_w -= g.weight(pick);
        // exclude
        state[pick] = 2;
        rec();
        state[pick] = 0;
    }
};

} // namespace

mwis_result exact_mwis_bb(const weighted_graph &g, const mwis_solver_spec &spec) {
    mwis_result res;
    res.proven_optimal = true;
    timer clock;
    deadline dl(spec.time_limit);

    const NodeID n = g.number_of_nodes();
    std::vector<int> comp_of(n, -1);
    std::vector<std::vector<NodeID>> comps;
    for (NodeID s = 0; s < n; ++s) {
        if (comp_of[s] >= 0) continue;
        comps.emplace_back();
        auto &c = comps.back();
        comp_of[s] = static_cast<int>(comps.size()) - 1;
        c.push_back(s);
        for (std::size_t head = 0; head < c.size(); ++head)
            for (NodeID u : g.neighbors(c[head]))
                if (comp_of[u] < 0) {
                    comp_of[u] = comp_of[s];
                    c.push_back(u);
                }
        std::sort(c.begin(), c.end());
    }

    std::vector<char> state(n, 0);
    std::vector<std::vector<NodeID>> unsolved;
    for (auto &comp : comps) {
        if (comp.size() > spec.exact_size_cap || dl.expired()) {
            unsolved.push_back(comp);
            res.proven_optimal = false;
            continue;
        }
        bb_component bb{g, dl, state, comp, -1, {}, {}, 0, false, 0};
        // incumbent: restricted greedy
        for (NodeID v : greedy_order(g)) {
            if (comp_of[v] != comp_of[comp.front()]) continue;
            bool ok = true;
            for (NodeID u : g.neighbors(v))
                if (std::binary_search(bb.best_set.begin(), bb.best_set.end(), u)) ok = false;
            if (ok) {
                bb.best_set.insert(std::lower_bound(bb.best_set.begin(), bb.best_set.end(), v), v);
                bb.best_w = std::max<NodeWeight>(bb.best_w, 0) + g.weight(v);
            }
        }
        bb.rec();
        if (bb.timed_out) res.proven_optimal = false;
        for (NodeID v : bb.best_set) res.sol.insert(v, g.weight(v));
        for (NodeID v : comp) state[v] = 2; // freeze solved component
        res.time_to_best = clock.elapsed();
    }
    // greedy completion for skipped components
    for (auto &comp : unsolved) {
        std::vector<char> blocked(n, 0);
        for (NodeID v : greedy_order(g)) {
            if (comp_of[v] != comp_of[comp.front()] || blocked[v]) continue;
            res.sol.insert(v, g.weight(v));
            blocked[v] = 1;
            for (NodeID u : g.neighbors(v)) blocked[u] = 1;
        }
        res.time_to_best = clock.elapsed();
    }
    return res;
}

mwis_result solve_mwis(const weighted_graph &g, const mwis_solver_spec &spec) {
    switch (spec.kind) {
    case mwis_solver_spec::kind_t::greedy: {
        mwis_result r;
        timer clock;
        r.sol = greedy_mwis(g, spec.seed);
        r.time_to_best = clock.elapsed();
        return r;
    }
    case mwis_solver_spec::kind_t::local_search: {
        mwis_result r;
        timer clock;
        double t_best = 0;
        r.sol = local_search_mwis(g, greedy_mwis(g, spec.seed), spec,
                                  [&](double t, NodeWeight) { t_best = t; });
        r.time_to_best = t_best;
        (void)clock;
        return r;
    }
    case mwis_solver_spec::kind_t::exact_bb:
        return exact_mwis_bb(g, spec);
    }
    throw std::logic_error("solve_mwis: unknown solver kind");
}

} // namespace w2p
