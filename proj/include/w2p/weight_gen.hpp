#pragma once

#include <cstdint>
#include <string>

#include "w2p/weighted_graph.hpp"

namespace w2p {

struct weight_spec {
    // unit | uniform | geometric | degree | hybrid | file
    std::string kind = "file";
    std::uint64_t seed = 0;
};

// unit: all 1; uniform: iid integers from [1,200]; geometric: iid geometric
// with success 1/2, clamped to [1,200]; degree: deg(v)+1; hybrid: (v mod
// 200)+1; file: keep the weights the graph came with.
weighted_graph generate_weights(const weighted_graph &g, const weight_spec &spec);

} // namespace w2p
