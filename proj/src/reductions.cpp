#include "w2p/reductions.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <stdexcept>

namespace w2p {

namespace {

bool sorted_has(std::span<const NodeID> vec, NodeID x) {
    return std::binary_search(vec.begin(), vec.end(), x);
}

std::vector<NodeID> sorted_diff(std::span<const NodeID> a, std::span<const NodeID> b) {
    std::vector<NodeID> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<NodeID> sorted_intersect(std::span<const NodeID> a, std::span<const NodeID> b) {
    std::vector<NodeID> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<NodeID> sorted_union(std::span<const NodeID> a, std::span<const NodeID> b) {
    std::vector<NodeID> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void sorted_unique(std::vector<NodeID> &v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

reduction_config reduction_config::full() { return {"full", {11, 12, 13, 2, 7, 9, 6, 4, 10}}; }
reduction_config reduction_config::fast() { return {"fast", {11, 12, 13}}; }
reduction_config reduction_config::strong() { return {"strong", {11, 12, 13, 2, 9, 6, 4, 10}}; }
reduction_config reduction_config::core() { return {"core", {2, 7, 9, 6, 4, 10}}; }
reduction_config reduction_config::none() { return {"none", {}}; }

reduction_config reduction_config::by_name(const std::string &name) {
    if (name == "full") return full();
    if (name == "fast") return fast();
    if (name == "strong") return strong();
    if (name == "core") return core();
    if (name == "none") return none();
    throw std::invalid_argument("unknown reduction configuration: " + name);
}

reduced_instance reduced_instance::wrap(const link_graph &lg) {
    reduced_instance ri;
    ri.base = std::make_shared<link_graph>(lg);
    ri.graph = lg;
    return ri;
}

reducer::reducer(reduced_instance &ri, std::uint64_t seed, bool shuffle_candidates)
    : ri_(ri), lg_(ri.graph), seed_(seed), shuffle_(shuffle_candidates) {
    fd1_skip_.assign(lg_.capacity(), 0);
}

std::vector<NodeID> reducer::closed_ball(NodeID v) {
    auto lnk = lg_.materialize_links(v);
    std::vector<NodeID> ball = sorted_union(lg_.edges(v), lnk);
    auto it = std::lower_bound(ball.begin(), ball.end(), v);
    ball.insert(it, v);
    return ball;
}

void reducer::finish_event(reduction_event &&e) {
    sorted_unique(e.touched);
    std::erase_if(e.touched, [&](NodeID x) { return !lg_.alive(x); });
    // a transient link neighborhood can shrink one hop away from a touched
    // vertex, so the degree-1 skip marks are cleared that far out
    fd1_skip_.resize(lg_.capacity(), 0);
    for (NodeID x : e.touched) {
        fd1_skip_[x] = 0;
        for (NodeID y : lg_.edges(x)) fd1_skip_[y] = 0;
        for (NodeID y : lg_.links(x)) fd1_skip_[y] = 0;
    }
    ri_.rule_counts[static_cast<int>(e.rule)]++;
    ri_.stack.push_back(std::move(e));
}

void reducer::remove_with_boundary_links(reduction_event &e, const std::vector<NodeID> &victims) {
    std::vector<char> in_k(lg_.capacity(), 0);
    for (NodeID v : victims) in_k[v] = 1;
    for (NodeID v : victims) e.removed.push_back({v, lg_.weight(v)});
    // pairs of surviving neighbors that lose their distance-2 witness
    for (NodeID c : victims) {
        scratch_.clear();
        for (NodeID x : lg_.edges(c))
            if (!in_k[x]) scratch_.push_back(x);
        for (std::size_t i = 0; i < scratch_.size(); ++i)
            for (std::size_t j = i + 1; j < scratch_.size(); ++j) {
                NodeID x = scratch_[i], y = scratch_[j];
                if (!lg_.adjacent(x, y) && !lg_.linked(x, y)) {
                    lg_.add_link(x, y);
                    e.added_links.push_back({x, y});
                }
            }
    }
    auto touched = lg_.bulk_hide(victims);
    e.touched.insert(e.touched.end(), touched.begin(), touched.end());
    for (auto [x, y] : e.added_links) {
        e.touched.push_back(x);
        e.touched.push_back(y);
    }
}

reduction_event &reducer::exclude_set(rule_id rule, NodeID pivot, const std::vector<NodeID> &victims) {
    reduction_event e;
    e.rule = rule;
    e.kind = event_kind::exclude;
    e.pivot = pivot;
    remove_with_boundary_links(e, victims);
    finish_event(std::move(e));
    return ri_.stack.back();
}

reduction_event &reducer::include_ball(rule_id rule, NodeID pivot) {
    reduction_event e;
    e.rule = rule;
    e.kind = event_kind::include;
    e.pivot = pivot;
    e.included = pivot;
    e.offset_delta = lg_.weight(pivot);
    remove_with_boundary_links(e, closed_ball(pivot));
    ri_.offset += e.offset_delta;
    finish_event(std::move(e));
    return ri_.stack.back();
}

const reduction_event &reducer::apply_exclude(rule_id rule, NodeID v) {
    if (!lg_.alive(v)) throw std::invalid_argument("apply_exclude: dead vertex");
    return exclude_set(rule, v, {v});
}

const reduction_event &reducer::apply_include(rule_id rule, NodeID v) {
    if (!lg_.alive(v)) throw std::invalid_argument("apply_include: dead vertex");
    return include_ball(rule, v);
}

bool reducer::is_d2_simplicial(NodeID v) {
    auto lnk = lg_.materialize_links(v);
    std::vector<NodeID> members = sorted_union(lg_.edges(v), lnk);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!lg_.dist2_conflict(members[i], members[j])) return false;
    return true;
}

// ---- Reduction 1 ----------------------------------------------------------

bool reducer::heavy_vertex_condition(NodeID v, oracle_budget budget) {
    if (!lg_.alive(v)) return false;
    auto lnk = lg_.materialize_links(v);
    std::vector<NodeID> region = sorted_union(lg_.edges(v), lnk);
    if (region.size() > budget.max_nodes) return false;
    return brute_mw2ps_region(lg_, region, budget).weight <= lg_.weight(v);
}

bool reducer::try_heavy_vertex(NodeID v, oracle_budget budget) {
    if (!heavy_vertex_condition(v, budget)) return false;
    include_ball(rule_id::heavy_vertex, v);
    return true;
}

// ---- Reduction 2 ----------------------------------------------------------

bool reducer::try_neighbor_removal(NodeID v, NodeID u) {
    if (!lg_.alive(v) || !lg_.alive(u) || u == v) return false;
    lg_.materialize_links(v);
    bool via_edge = lg_.adjacent(v, u);
    bool via_link = !via_edge && lg_.linked(v, u);
    if (!via_edge && !via_link) return false;

    auto ball_u = closed_ball(u);
    std::vector<NodeID> link_rest = sorted_diff(lg_.links(v), ball_u);
    std::vector<NodeID> region =
        via_edge ? link_rest : sorted_diff(closed_ball(v), ball_u);

    constexpr NodeID ORACLE_CAP = 12;
    NodeWeight wu = lg_.weight(u), wv = lg_.weight(v);
    if (region.size() <= ORACLE_CAP) {
        NodeWeight alpha = brute_mw2ps_region(lg_, region, {ORACLE_CAP}).weight;
        if (alpha + wu > wv) return false;
    } else {
        // region too large for the exact subterm; use the split bounds
        NodeWeight sum = 0;
        for (NodeID x : region) sum += lg_.weight(x);
        NodeWeight bound = sum;
        if (via_link) {
            NodeWeight lsum = 0;
            for (NodeID x : link_rest) lsum += lg_.weight(x);
            bound = std::min(bound, lg_.nbr_weight_max(v) + lsum);
        }
        if (bound + wu > wv) return false;
    }
    exclude_set(rule_id::neighbor_removal, v, {u});
    return true;
}

// ---- Reduction 3 ----------------------------------------------------------

bool reducer::try_neighborhood_removal(NodeID v) {
    if (!lg_.alive(v)) return false;
    lg_.materialize_links(v);
    if (lg_.weight(v) < lg_.link_weight_sum(v) + lg_.nbr_weight_max(v)) return false;
    include_ball(rule_id::neighborhood_removal, v);
    return true;
}

// ---- Reduction 4 ----------------------------------------------------------

bool reducer::try_split_neighbor_removal(NodeID v, NodeID u) {
    if (!lg_.alive(v) || !lg_.alive(u) || u == v) return false;
    lg_.materialize_links(v);
    bool via_edge = lg_.adjacent(v, u);
    bool via_link = !via_edge && lg_.linked(v, u);
    if (!via_edge && !via_link) return false;

    NodeWeight wu = lg_.weight(u), wv = lg_.weight(v);
    NodeWeight bound;
    if (via_edge) {
        // cheap aggregate test before building any set difference
        if (lg_.nbr_weight_sum(u) >= lg_.link_weight_sum(v) + lg_.nbr_weight_sum(v)) {
            exclude_set(rule_id::split_neighbor_removal, v, {u});
            return true;
        }
        auto ball_u = closed_ball(u);
        bound = 0;
        for (NodeID x : sorted_diff(lg_.links(v), ball_u)) bound += lg_.weight(x);
    } else {
        auto ball_u = closed_ball(u);
        NodeWeight whole = 0;
        for (NodeID x : sorted_diff(closed_ball(v), ball_u)) whole += lg_.weight(x);
        NodeWeight lsum = 0;
        for (NodeID x : sorted_diff(lg_.links(v), ball_u)) lsum += lg_.weight(x);
        bound = std::min(whole, lg_.nbr_weight_max(v) + lsum);
    }
    if (bound + wu > wv) return false;
    exclude_set(rule_id::split_neighbor_removal, v, {u});
    return true;
}

// ---- Reduction 5 ----------------------------------------------------------

bool reducer::try_intersection_removal(NodeID v, NodeID u) {
    if (!lg_.alive(v) || !lg_.alive(u) || u == v) return false;
    lg_.materialize_links(v);
    if (!lg_.adjacent(v, u) && !lg_.linked(v, u)) return false;
    NodeWeight rest = lg_.nbr_weight_sum(v) + lg_.link_weight_sum(v) - lg_.weight(u);
    if (lg_.weight(v) < rest) return false;
    auto K = sorted_intersect(closed_ball(u), closed_ball(v));
    std::erase_if(K, [&](NodeID x) { return x == u || x == v; });
    exclude_set(rule_id::intersection_removal, v, K);
    return true;
}

// ---- Reduction 6 ----------------------------------------------------------

bool reducer::try_split_intersection_removal(NodeID v, NodeID u) {
    if (!lg_.alive(v) || !lg_.alive(u) || u == v) return false;
    lg_.materialize_links(v);
    bool via_edge = lg_.adjacent(v, u);
    bool via_link = !via_edge && lg_.linked(v, u);
    if (!via_edge && !via_link) return false;

    bool ok;
    if (via_edge) {
        NodeWeight mx = 0;
        for (NodeID x : lg_.edges(v))
            if (x != u) mx = std::max(mx, lg_.weight(x));
        ok = lg_.weight(v) >= lg_.link_weight_sum(v) + mx;
    } else {
        ok = lg_.weight(v) >= lg_.link_weight_sum(v) - lg_.weight(u) + lg_.nbr_weight_max(v);
    }
    if (!ok) return false;
    auto K = sorted_intersect(closed_ball(u), closed_ball(v));
    std::erase_if(K, [&](NodeID x) { return x == u || x == v; });
    if (K.empty()) return false;
    exclude_set(rule_id::split_intersection_removal, v, K);
    return true;
}

// ---- Reduction 7 ----------------------------------------------------------

bool reducer::try_domination(NodeID v, NodeID u) {
    if (!lg_.alive(v) || !lg_.alive(u) || !lg_.adjacent(v, u)) return false;
    for (NodeID x : lg_.edges(v))
        if (x != u && !lg_.adjacent(u, x)) return false;
    lg_.materialize_links(v);
    if (static_cast<std::size_t>(lg_.link_degree(v)) + lg_.degree(v) != lg_.degree(u)) return false;

    if (lg_.weight(v) >= std::max(lg_.weight(u), lg_.nbr_weight_max(u))) {
        include_ball(rule_id::domination, v);
        return true;
    }
    if (lg_.weight(v) >= lg_.nbr_weight_sum(u) - lg_.weight(v)) {
        std::vector<NodeID> K(lg_.edges(u).begin(), lg_.edges(u).end());
        std::erase_if(K, [&](NodeID x) { return x == v; });
        if (!K.empty()) {
            exclude_set(rule_id::domination, v, K);
            return true;
        }
    }
    if (lg_.weight(v) >= lg_.weight(u)) {
        exclude_set(rule_id::domination, v, {u});
        return true;
    }
    return false;
}

// ---- Reduction 8 ----------------------------------------------------------

bool reducer::try_weighted_clique(NodeID v) {
    if (!lg_.alive(v)) return false;
    if (!is_d2_simplicial(v)) return false;
    NodeWeight mx = lg_.nbr_weight_max(v);
    for (NodeID x : lg_.links(v)) mx = std::max(mx, lg_.weight(x));
    if (lg_.weight(v) < mx) return false;
    include_ball(rule_id::weighted_clique, v);
    return true;
}

// ---- Reduction 9 ----------------------------------------------------------

bool reducer::try_d2_weight_transfer(NodeID v) {
    if (!lg_.alive(v)) return false;
    if (!is_d2_simplicial(v)) return false;
    std::vector<NodeID> members = sorted_union(lg_.edges(v), lg_.links(v));
    NodeWeight wv = lg_.weight(v);
    for (NodeID u : members)
        if (lg_.weight(u) > wv && is_d2_simplicial(u)) return false;

    std::vector<NodeID> victims{v}, survivors;
    for (NodeID u : members)
        (lg_.weight(u) <= wv ? victims : survivors).push_back(u);
    std::sort(victims.begin(), victims.end());

    reduction_event e;
    e.rule = rule_id::d2_weight_transfer;
    e.kind = event_kind::fold;
    e.pivot = v;
    e.fold_shift = wv;
    e.fold_survivors = survivors;
    e.offset_delta = wv;
    remove_with_boundary_links(e, victims);
    for (NodeID x : survivors) {
        auto t = lg_.set_weight(x, lg_.weight(x) - wv);
        e.touched.insert(e.touched.end(), t.begin(), t.end());
    }
    ri_.offset += wv;
    finish_event(std::move(e));
    return true;
}

// ---- Reduction 10 ---------------------------------------------------------

bool reducer::try_neighborhood_folding(NodeID v) {
    if (!lg_.alive(v)) return false;
    if (lg_.degree(v) > 1) return false; // larger degrees imply a distance-2-clique
    lg_.materialize_links(v);
    std::vector<NodeID> members = sorted_union(lg_.edges(v), lg_.links(v));
    if (members.empty()) return false;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (lg_.dist2_conflict(members[i], members[j])) return false;

    NodeWeight sum = 0, mn = lg_.weight(members.front());
    for (NodeID u : members) {
        sum += lg_.weight(u);
        mn = std::min(mn, lg_.weight(u));
    }
    NodeWeight wv = lg_.weight(v);
    if (!(sum > wv && sum - mn <= wv)) return false;

    std::vector<NodeID> ball = members;
    auto it = std::lower_bound(ball.begin(), ball.end(), v);
    ball.insert(it, v);

    // everything within distance two of the folded set conflicts with the
    // placeholder vertex
    std::vector<NodeID> boundary;
    for (NodeID m : ball) {
        auto lnk = lg_.materialize_links(m);
        boundary.insert(boundary.end(), lnk.begin(), lnk.end());
        auto eds = lg_.edges(m);
        boundary.insert(boundary.end(), eds.begin(), eds.end());
    }
    sorted_unique(boundary);
    std::erase_if(boundary, [&](NodeID x) { return sorted_has(ball, x); });

    reduction_event e;
    e.rule = rule_id::neighborhood_folding;
    e.kind = event_kind::fold;
    e.pivot = v;
    e.fold_constituents = members;
    e.offset_delta = wv;
    remove_with_boundary_links(e, ball);
    NodeID vp = lg_.new_vertex(sum - wv);
    e.fold_vertex = vp;
    for (NodeID x : boundary) {
        lg_.add_link(vp, x);
        e.added_links.push_back({vp, x});
        e.touched.push_back(x);
    }
    e.touched.push_back(vp);
    ri_.offset += wv;
    finish_event(std::move(e));
    return true;
}

// ---- Reduction 11 ---------------------------------------------------------

bool reducer::try_fast_degree1(NodeID u) {
    if (u >= lg_.base_nodes()) return false;
    auto ng_u = lg_.base().neighbors(u);
    if (ng_u.empty()) return false;

    NodeID best = INVALID_NODE;
    std::vector<NodeID> lx;
    for (NodeID x : ng_u) {
        if (!lg_.alive(x) || lg_.degree(x) > 1 || fd1_skip_[x]) continue;
        bool ok = true;
        for (NodeID y : lg_.edges(x))
            if (y != u && !sorted_has(ng_u, y)) {
                ok = false;
                break;
            }
        if (ok) {
            lg_.transient_link_neighborhood(x, lx);
            for (NodeID z : lx)
                if (!sorted_has(ng_u, z)) {
                    ok = false;
                    break;
                }
        }
        if (!ok) continue;
        if (best == INVALID_NODE || lg_.weight(x) > lg_.weight(best)) best = x;
    }
    if (best == INVALID_NODE) return false;

    std::vector<NodeID> victims{best}, survivors;
    NodeWeight wb = lg_.weight(best);
    auto consider = [&](NodeID x) {
        if (x == best || !lg_.alive(x)) return;
        (lg_.weight(x) <= wb ? victims : survivors).push_back(x);
    };
    for (NodeID x : ng_u) consider(x);
    consider(u);
    std::sort(victims.begin(), victims.end());
    std::sort(survivors.begin(), survivors.end());

    reduction_event e;
    e.rule = rule_id::fast_degree1;
    e.kind = event_kind::fold;
    e.pivot = best;
    e.fold_shift = wb;
    e.fold_survivors = survivors;
    e.offset_delta = wb;
    remove_with_boundary_links(e, victims);
    for (NodeID x : survivors) {
        auto t = lg_.set_weight(x, lg_.weight(x) - wb);
        e.touched.insert(e.touched.end(), t.begin(), t.end());
    }
    ri_.offset += wb;
    finish_event(std::move(e));
    return true;
}

// ---- Reduction 12 ---------------------------------------------------------

bool reducer::try_fast_degree2(NodeID u, NodeID y) {
    if (u == y || u >= lg_.base_nodes() || y >= lg_.base_nodes()) return false;
    if (!lg_.alive(u) || !lg_.alive(y)) return false;
    auto ng_u = lg_.base().neighbors(u);
    auto ng_y = lg_.base().neighbors(y);

    std::vector<NodeID> cands;
    std::vector<std::vector<NodeID>> cand_links;
    std::vector<NodeID> lx;
    for (NodeID x : sorted_intersect(ng_u, ng_y)) {
        if (!lg_.alive(x) || lg_.degree(x) != 2) continue;
        lg_.transient_link_neighborhood(x, lx);
        bool ok = true;
        for (NodeID z : lx)
            if (!sorted_has(ng_u, z) && !sorted_has(ng_y, z)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        cands.push_back(x);
        cand_links.push_back(lx);
    }
    if (cands.empty()) return false;

    std::size_t best_i = 0;
    for (std::size_t i = 1; i < cands.size(); ++i)
        if (lg_.weight(cands[i]) > lg_.weight(cands[best_i])) best_i = i;
    NodeID best = cands[best_i];

    // twins share the pivot's whole 2-neighborhood
    std::vector<NodeID> twins;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (i == best_i) continue;
        std::vector<NodeID> a = cand_links[best_i], b = cand_links[i];
        std::erase_if(a, [&](NodeID z) { return z == cands[i]; });
        std::erase_if(b, [&](NodeID z) { return z == best; });
        if (a == b) twins.push_back(cands[i]);
    }

    // inclusion test on the unmodified pattern
    NodeWeight cu = 0, cy = 0;
    for (NodeID x : lg_.edges(u))
        if (x != y && x != best) cu = std::max(cu, lg_.weight(x));
    for (NodeID x : lg_.edges(y))
        if (x != u && x != best) cy = std::max(cy, lg_.weight(x));
    NodeWeight wb = lg_.weight(best);
    NodeWeight bound = lg_.adjacent(u, y)
                           ? std::max({lg_.weight(u), lg_.weight(y), cu + cy})
                           : std::max({lg_.weight(u) + cy, lg_.weight(y) + cu, cu + cy});
    bool include = wb >= bound;
    if (twins.empty() && !include) return false;

    reduction_event e;
    e.rule = rule_id::fast_degree2;
    e.kind = include ? event_kind::include : event_kind::exclude;
    e.pivot = best;
    if (!twins.empty()) {
        // the pivot stays (or takes its whole ball along), so twin pairs keep
        // their distance-2 witness and no links are needed
        for (NodeID x : twins) e.removed.push_back({x, lg_.weight(x)});
        auto t = lg_.bulk_hide(twins);
        e.touched.insert(e.touched.end(), t.begin(), t.end());
    }
    if (include) {
        e.included = best;
        e.offset_delta = wb;
        remove_with_boundary_links(e, closed_ball(best));
        ri_.offset += wb;
    }
    finish_event(std::move(e));
    return true;
}

// ---- Reduction 13 ---------------------------------------------------------

void reducer::ensure_fast13_table() {
    if (fast13_ready_) return;
    const weighted_graph &g = lg_.base();
    std::vector<NodeWeight> nbr_sum(g.number_of_nodes(), 0);
    for (NodeID v = 0; v < g.number_of_nodes(); ++v)
        for (NodeID x : g.neighbors(v)) nbr_sum[v] += g.weight(x);
    fast13_bound_.assign(g.number_of_nodes(), 0);
    for (NodeID v = 0; v < g.number_of_nodes(); ++v) {
        NodeWeight mx = 0, link_bound = 0;
        for (NodeID u : g.neighbors(v)) {
            mx = std::max(mx, g.weight(u));
            link_bound += std::max<NodeWeight>(0, nbr_sum[u] - g.weight(v));
        }
        fast13_bound_[v] = mx + link_bound;
    }
    fast13_ready_ = true;
}

bool reducer::try_fast_neighborhood_removal(NodeID v) {
    if (v >= lg_.base_nodes() || !lg_.alive(v)) return false;
    // the precomputed bound only covers link partners reachable in the base
    // graph; fold placeholders and seeded links are not
    if (lg_.has_base_link(v)) return false;
    auto lnk = lg_.links(v);
    if (!lnk.empty() && lnk.back() >= lg_.base_nodes()) return false;
    ensure_fast13_table();
    if (lg_.weight(v) < fast13_bound_[v]) return false;
    include_ball(rule_id::fast_neighborhood_removal, v);
    return true;
}

// ---- engine ----------------------------------------------------------------

bool reducer::try_rule_at(int rule, NodeID pivot) {
    switch (rule) {
    case 1:
        return try_heavy_vertex(pivot);
    case 3:
        return lg_.alive(pivot) && try_neighborhood_removal(pivot);
    case 8:
        return lg_.alive(pivot) && try_weighted_clique(pivot);
    case 9:
        return lg_.alive(pivot) && try_d2_weight_transfer(pivot);
    case 10:
        return lg_.alive(pivot) && try_neighborhood_folding(pivot);
    case 13:
        return try_fast_neighborhood_removal(pivot);
    case 11: {
        if (pivot >= lg_.base_nodes()) return false;
        if (try_fast_degree1(pivot)) return true;
        // sweep the pivot's own anchors; no anchor working is cached until
        // the pivot's neighborhood changes again
        if (!lg_.alive(pivot) || lg_.degree(pivot) > 1 || fd1_skip_[pivot]) return false;
        for (NodeID u : lg_.base().neighbors(pivot))
            if (try_fast_degree1(u)) return true;
        fd1_skip_[pivot] = 1;
        return false;
    }
    case 12: {
        if (pivot >= lg_.capacity() || !lg_.alive(pivot) || lg_.degree(pivot) != 2) return false;
        NodeID u = lg_.edges(pivot)[0], y = lg_.edges(pivot)[1];
        return try_fast_degree2(u, y);
    }
    case 2:
    case 4:
    case 5:
    case 6: {
        if (!lg_.alive(pivot)) return false;
        auto lnk = lg_.materialize_links(pivot);
        std::vector<NodeID> partners = sorted_union(lg_.edges(pivot), lnk);
        for (NodeID u : partners) {
            if (!lg_.alive(u)) continue;
            bool hit = false;
            if (rule == 2) hit = try_neighbor_removal(pivot, u);
            else if (rule == 4) hit = try_split_neighbor_removal(pivot, u);
            else if (rule == 5) hit = try_intersection_removal(pivot, u);
            else hit = try_split_intersection_removal(pivot, u);
            if (hit) return true;
        }
        return false;
    }
    case 7: {
        if (!lg_.alive(pivot)) return false;
        std::vector<NodeID> partners(lg_.edges(pivot).begin(), lg_.edges(pivot).end());
        for (NodeID u : partners) {
            if (!lg_.alive(pivot)) break;
            if (!lg_.alive(u)) continue;
            if (try_domination(pivot, u)) return true;
        }
        return false;
    }
    default:
        return false;
    }
}

std::vector<NodeID> reducer::affected_region(const reduction_event &e) const {
    std::vector<NodeID> affected = e.touched;
    for (int hop = 0; hop < 2; ++hop) {
        std::vector<NodeID> next = affected;
        for (NodeID x : affected) {
            if (!lg_.alive(x)) continue;
            next.insert(next.end(), lg_.edges(x).begin(), lg_.edges(x).end());
            next.insert(next.end(), lg_.links(x).begin(), lg_.links(x).end());
        }
        sorted_unique(next);
        affected = std::move(next);
    }
    return affected;
}

void reducer::run(const reduction_config &cfg) {
    if (cfg.order.empty()) return;
    const std::size_t nq = cfg.order.size();
    std::vector<std::deque<NodeID>> queue(nq);
    std::vector<std::vector<char>> in_queue(nq);

    auto enqueue = [&](std::size_t qi, NodeID v) {
        if (in_queue[qi].size() < lg_.capacity()) in_queue[qi].resize(lg_.capacity(), 0);
        if (!in_queue[qi][v]) {
            in_queue[qi][v] = 1;
            queue[qi].push_back(v);
        }
    };

    if (cfg.order != engine_order_) {
        // fresh order: every live vertex is a candidate
        std::vector<NodeID> order = lg_.live_nodes();
        if (shuffle_) {
            std::mt19937_64 rng(seed_);
            std::shuffle(order.begin(), order.end(), rng);
        }
        for (std::size_t qi = 0; qi < nq; ++qi)
            for (NodeID v : order) enqueue(qi, v);
        engine_order_ = cfg.order;
    } else {
        // the previous call ended at a fixpoint: only the region around
        // events appended since then can have become reducible
        for (std::size_t i = engine_cursor_; i < ri_.stack.size(); ++i)
            for (NodeID x : affected_region(ri_.stack[i]))
                if (lg_.alive(x))
                    for (std::size_t qi = 0; qi < nq; ++qi) enqueue(qi, x);
    }

    std::size_t qi = 0;
    while (qi < nq) {
        if (queue[qi].empty()) {
            ++qi;
            continue;
        }
        NodeID p = queue[qi].front();
        queue[qi].pop_front();
        in_queue[qi][p] = 0;
        if (!try_rule_at(cfg.order[qi], p)) continue;

        // re-test every rule on the region whose 2-neighborhood changed,
        // restarting from the earliest rule of the order
        std::vector<NodeID> affected = affected_region(ri_.stack.back());
        if (lg_.alive(p)) affected.push_back(p);
        for (std::size_t q2 = 0; q2 < nq; ++q2)
            for (NodeID x : affected)
                if (lg_.alive(x)) enqueue(q2, x);
        qi = 0;
    }
    engine_cursor_ = ri_.stack.size();
}

reduced_instance reduce_exhaustively(const link_graph &lg, const reduction_config &cfg,
                                     std::uint64_t seed, bool shuffle_candidates) {
    reduced_instance ri = reduced_instance::wrap(lg);
    reducer r(ri, seed, shuffle_candidates);
    r.run(cfg);
    return ri;
}

// ---- reconstruction ---------------------------------------------------------

solution restore(const reduced_instance &ri, const solution &reduced_sol) {
    if (!is_2packing(ri.graph, reduced_sol.nodes))
        throw std::invalid_argument("restore: reduced solution is not a 2-packing set");
    const link_graph &base = *ri.base;
    std::vector<char> in(std::max(ri.graph.capacity(), base.capacity()), 0);
    for (NodeID v : reduced_sol.nodes) in[v] = 1;

    for (auto it = ri.stack.rbegin(); it != ri.stack.rend(); ++it) {
        const reduction_event &e = *it;
        switch (e.kind) {
        case event_kind::include:
            in[e.included] = 1;
            break;
        case event_kind::exclude:
            break;
        case event_kind::fold:
            if (e.rule == rule_id::neighborhood_folding) {
                if (in[e.fold_vertex]) {
                    in[e.fold_vertex] = 0;
                    for (NodeID m : e.fold_constituents) in[m] = 1;
                } else {
                    in[e.pivot] = 1;
                }
            } else {
                bool survivor_taken = false;
                for (NodeID s : e.fold_survivors)
                    if (in[s]) {
                        survivor_taken = true;
                        break;
                    }
                if (!survivor_taken) in[e.pivot] = 1;
            }
            break;
        }
    }

    solution out;
    for (NodeID v = 0; v < in.size(); ++v) {
        if (!in[v]) continue;
        if (v >= base.capacity() || !base.alive(v))
            throw std::logic_error("restore: reconstruction left a vertex outside the base instance");
        out.nodes.push_back(v);
        out.weight += base.weight(v);
    }
    if (out.weight < reduced_sol.weight + ri.offset)
        throw std::logic_error("restore: reconstructed weight below offset bound");

    // greedy maximization: free vertices by descending weight, then id
    std::vector<char> covered(base.capacity(), 0), link_blocked(base.capacity(), 0);
    auto block = [&](NodeID s) {
        covered[s] = 1;
        for (NodeID x : base.edges(s)) covered[x] = 1;
        for (NodeID x : base.links(s)) link_blocked[x] = 1;
    };
    for (NodeID s : out.nodes) block(s);

    std::vector<NodeID> cand = base.live_nodes();
    std::stable_sort(cand.begin(), cand.end(),
                     [&](NodeID a, NodeID b) { return base.weight(a) > base.weight(b); });
    for (NodeID v : cand) {
        if (covered[v] || link_blocked[v]) continue;
        bool free = true;
        for (NodeID x : base.edges(v))
            if (covered[x]) {
                free = false;
                break;
            }
        if (!free) continue;
        out.insert(v, base.weight(v));
        block(v);
    }
    return out;
}

} // namespace w2p
