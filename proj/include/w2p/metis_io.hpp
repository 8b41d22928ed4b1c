#pragma once

#include <iosfwd>
#include <string>

#include "w2p/weighted_graph.hpp"

namespace w2p {

// METIS adjacency format: header "n m [fmt]", one line of 1-based neighbor
// ids per vertex, fmt 10 prefixes each vertex line with its weight, '%'
// starts a comment line. Parse errors carry the offending line number.
weighted_graph parse_metis(std::istream &in, const std::string &name = "<stream>");
weighted_graph parse_metis_file(const std::string &path);

void write_metis(std::ostream &out, const weighted_graph &g);
void write_metis_file(const std::string &path, const weighted_graph &g);

} // namespace w2p
