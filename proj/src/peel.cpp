#include "w2p/peel.hpp"

#include <algorithm>
#include <stdexcept>

namespace w2p {

void peel_config::validate() const {
    if (k < 1) throw std::invalid_argument("peel_config: k must be at least 1");
    if (p < 0.5 || p > 1.0) throw std::invalid_argument("peel_config: p must lie in [0.5, 1]");
    if (action == action_t::include && rating == rating_t::degree)
        throw std::invalid_argument("peel_config: include is only defined for weight_diff and weight");
}

NodeWeight rating_value(link_graph &lg, NodeID v, peel_config::rating_t kind) {
    if (!lg.alive(v)) throw std::invalid_argument("rating_value: dead vertex");
    switch (kind) {
    case peel_config::rating_t::weight:
        return lg.weight(v);
    case peel_config::rating_t::weight_diff:
        lg.materialize_links(v);
        return lg.weight(v) - lg.link_weight_sum(v) - lg.nbr_weight_sum(v);
    case peel_config::rating_t::degree:
        lg.materialize_links(v);
        return -static_cast<NodeWeight>(lg.degree(v)) - static_cast<NodeWeight>(lg.link_degree(v));
    }
    throw std::logic_error("rating_value: unknown rating");
}

peeler::peeler(reduced_instance &ri, reducer &red, const peel_config &cfg)
    : ri_(ri), lg_(ri.graph), cfg_(cfg), red_(red),
      rng_(cfg.seed ^ 0x9e3779b97f4a7c15ull) {
    cfg_.validate();
    if (cfg_.mode == peel_config::mode_t::adaptive) {
        for (NodeID v : lg_.live_nodes()) push(v);
    } else {
        ranking_ = lg_.live_nodes();
        std::vector<NodeWeight> key(lg_.capacity());
        for (NodeID v : ranking_) key[v] = keyed(v);
        std::stable_sort(ranking_.begin(), ranking_.end(),
                         [&](NodeID a, NodeID b) { return key[a] < key[b]; });
    }
    stack_cursor_ = ri_.stack.size();
}

NodeWeight peeler::keyed(NodeID v) {
    NodeWeight r = rating_value(lg_, v, cfg_.rating);
    return cfg_.action == peel_config::action_t::include ? -r : r;
}

void peeler::push(NodeID v) { heap_.push({keyed(v), v}); }

void peeler::sync_with_stack() {
    for (; stack_cursor_ < ri_.stack.size(); ++stack_cursor_) {
        if (cfg_.mode != peel_config::mode_t::adaptive) continue;
        for (NodeID x : ri_.stack[stack_cursor_].touched)
            if (lg_.alive(x)) push(x);
    }
}

NodeID peeler::pop_adaptive() {
    std::vector<NodeID> pool;
    while (pool.size() < cfg_.k && !heap_.empty()) {
        auto [key, v] = heap_.top();
        heap_.pop();
        if (!lg_.alive(v)) continue;
        NodeWeight cur = keyed(v);
        if (cur != key) {
            heap_.push({cur, v}); // stale entry, retry with the fresh rating
            continue;
        }
        if (!pool.empty() && pool.back() == v) continue; // duplicate entry
        if (std::find(pool.begin(), pool.end(), v) != pool.end()) continue;
        pool.push_back(v);
    }
    if (pool.empty()) throw std::logic_error("peeler: no candidate on a non-empty instance");
    std::size_t idx = static_cast<std::size_t>(rng_() % pool.size());
    for (std::size_t j = 0; j < pool.size(); ++j)
        if (j != idx) heap_.push({keyed(pool[j]), pool[j]});
    return pool[idx];
}

NodeID peeler::pop_non_adaptive() {
    std::erase_if(ranking_, [&](NodeID v) { return !lg_.alive(v); });
    if (ranking_.empty()) throw std::logic_error("peeler: no candidate on a non-empty instance");
    for (std::size_t i = 0; i < ranking_.size(); ++i) {
        if (std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < cfg_.p) {
            std::size_t j = i + static_cast<std::size_t>(rng_() % (ranking_.size() - i));
            std::swap(ranking_[i], ranking_[j]);
        }
    }
    return ranking_.front();
}

const reduction_event &peeler::peel_step() {
    if (lg_.empty()) throw std::invalid_argument("peel_step: empty instance");
    sync_with_stack();
    NodeID v = cfg_.mode == peel_config::mode_t::adaptive ? pop_adaptive() : pop_non_adaptive();
    const reduction_event &e = cfg_.action == peel_config::action_t::exclude
                                   ? red_.apply_exclude(rule_id::peel_exclude, v)
                                   : red_.apply_include(rule_id::peel_include, v);
    sync_with_stack();
    return e;
}

namespace {

solution run_redw2pack(reduced_instance &ri, const peel_config &cfg, deadline dl) {
    reducer red(ri, cfg.seed, cfg.shuffle_reductions);
    red.run(cfg.reduction_order);
    peeler pl(ri, red, cfg);
    while (!ri.graph.empty() && !dl.expired()) {
        pl.peel_step();
        red.run(cfg.reduction_order);
        pl.sync_with_stack();
    }
    return restore(ri, solution{});
}

} // namespace

solution redW2pack(const link_graph &instance, const peel_config &cfg, deadline dl) {
    cfg.validate();
    reduced_instance ri = reduced_instance::wrap(instance);
    return run_redw2pack(ri, cfg, dl);
}

solution redW2pack(const weighted_graph &g, const peel_config &cfg, deadline dl) {
    cfg.validate();
    reduced_instance ri = reduced_instance::wrap(link_graph::from_graph(g));
    return run_redw2pack(ri, cfg, dl);
}

} // namespace w2p
