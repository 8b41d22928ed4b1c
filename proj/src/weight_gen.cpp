#include "w2p/weight_gen.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace w2p {

weighted_graph generate_weights(const weighted_graph &g, const weight_spec &spec) {
    const NodeID n = g.number_of_nodes();
    std::vector<NodeWeight> w(n);
    std::mt19937_64 rng(spec.seed);
    if (spec.kind == "file") {
        return g;
    } else if (spec.kind == "unit") {
        std::fill(w.begin(), w.end(), 1);
    } else if (spec.kind == "uniform") {
        std::uniform_int_distribution<NodeWeight> dist(1, 200);
        for (NodeID v = 0; v < n; ++v) w[v] = dist(rng);
    } else if (spec.kind == "geometric") {
        std::geometric_distribution<NodeWeight> dist(0.5);
        for (NodeID v = 0; v < n; ++v) w[v] = std::clamp<NodeWeight>(dist(rng) + 1, 1, 200);
    } else if (spec.kind == "degree") {
        for (NodeID v = 0; v < n; ++v) w[v] = static_cast<NodeWeight>(g.degree(v)) + 1;
    } else if (spec.kind == "hybrid") {
        for (NodeID v = 0; v < n; ++v) w[v] = static_cast<NodeWeight>(v % 200) + 1;
    } else {
        throw std::invalid_argument("unknown weight kind: " + spec.kind);
    }
    weighted_graph out = g;
    out.set_weights(std::move(w));
    return out;
}

} // namespace w2p
