#include "w2p/metis_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace w2p {

namespace {

[[noreturn]] void fail(const std::string &name, std::size_t line, const std::string &msg) {
    throw std::runtime_error(name + ":" + std::to_string(line) + ": " + msg);
}

bool next_content_line(std::istream &in, std::string &buf, std::size_t &line_no) {
    while (std::getline(in, buf)) {
        ++line_no;
        if (!buf.empty() && buf[0] == '%') continue;
        return true;
    }
    return false;
}

} // namespace

weighted_graph parse_metis(std::istream &in, const std::string &name) {
    std::string buf;
    std::size_t line_no = 0;
    if (!next_content_line(in, buf, line_no)) fail(name, line_no, "missing header");

    std::istringstream header(buf);
    long long n = -1, m = -1;
    std::string fmt = "0";
    if (!(header >> n >> m)) fail(name, line_no, "malformed header, expected 'n m [fmt]'");
    header >> fmt;
    if (n < 0 || m < 0) fail(name, line_no, "malformed header, negative counts");
    bool has_vertex_weights;
    if (fmt == "0" || fmt == "00")
        has_vertex_weights = false;
    else if (fmt == "10")
        has_vertex_weights = true;
    else
        fail(name, line_no, "unsupported fmt code '" + fmt + "' (only 0 and 10)");

    std::vector<NodeWeight> weights(static_cast<std::size_t>(n), 1);
    std::vector<std::vector<NodeID>> adj(static_cast<std::size_t>(n));
    std::vector<std::size_t> line_of(static_cast<std::size_t>(n), 0);

    for (long long v = 0; v < n; ++v) {
        if (!next_content_line(in, buf, line_no))
            fail(name, line_no, "unexpected end of file, expected " + std::to_string(n) + " vertex lines");
        line_of[v] = line_no;
        std::istringstream row(buf);
        if (has_vertex_weights) {
            long long w;
            if (!(row >> w)) fail(name, line_no, "missing vertex weight");
            if (w < 0) fail(name, line_no, "negative vertex weight");
            weights[v] = w;
        }
        long long u;
        while (row >> u) {
            if (u < 1 || u > n)
                fail(name, line_no, "neighbor id " + std::to_string(u) + " out of range 1.." + std::to_string(n));
            if (u - 1 == v) fail(name, line_no, "self-loop at vertex " + std::to_string(v + 1));
            adj[v].push_back(static_cast<NodeID>(u - 1));
        }
        if (!row.eof()) fail(name, line_no, "trailing garbage on vertex line");
        std::sort(adj[v].begin(), adj[v].end());
        if (std::adjacent_find(adj[v].begin(), adj[v].end()) != adj[v].end())
            fail(name, line_no, "duplicate neighbor on vertex line");
    }

    std::vector<std::pair<NodeID, NodeID>> edges;
    std::size_t directed = 0;
    for (long long v = 0; v < n; ++v) {
        directed += adj[v].size();
        for (NodeID u : adj[v]) {
            if (!std::binary_search(adj[u].begin(), adj[u].end(), static_cast<NodeID>(v)))
                fail(name, line_of[v],
                     "asymmetric edge: vertex " + std::to_string(v + 1) + " lists " +
                         std::to_string(u + 1) + " but not vice versa");
            if (static_cast<NodeID>(v) < u) edges.emplace_back(static_cast<NodeID>(v), u);
        }
    }
    if (directed != 2 * static_cast<std::size_t>(m))
        fail(name, line_of.empty() ? 1 : line_of.back(),
             "edge count mismatch: header says " + std::to_string(m) + ", found " +
                 std::to_string(directed / 2));

    return weighted_graph(static_cast<NodeID>(n), edges, std::move(weights));
}

weighted_graph parse_metis_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    return parse_metis(in, path);
}

void write_metis(std::ostream &out, const weighted_graph &g) {
    bool unit = true;
    for (NodeID v = 0; v < g.number_of_nodes() && unit; ++v)
        if (g.weight(v) != 1) unit = false;
    out << g.number_of_nodes() << ' ' << g.number_of_edges();
    if (!unit) out << " 10";
    out << '\n';
    for (NodeID v = 0; v < g.number_of_nodes(); ++v) {
        bool first = true;
        if (!unit) {
            out << g.weight(v);
            first = false;
        }
        for (NodeID u : g.neighbors(v)) {
            if (!first) out << ' ';
            out << (u + 1);
            first = false;
        }
        out << '\n';
    }
}

void write_metis_file(const std::string &path, const weighted_graph &g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open file for writing");
    write_metis(out, g);
}

} // namespace w2p
