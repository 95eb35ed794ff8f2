#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "stmod/graph.hpp"
#include "stmod/io.hpp"

namespace stmod::testing {

inline MultiGraph graph_of(std::size_t n, std::vector<Edge> edges) {
    return MultiGraph(n, std::move(edges));
}

inline MultiGraph triangle() { return graph_of(3, {{0, 1}, {1, 2}, {2, 0}}); }

inline MultiGraph path(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t v = 0; v + 1 < n; ++v) edges.push_back({VertexId(v), VertexId(v + 1)});
    return graph_of(n, std::move(edges));
}

inline MultiGraph cycle(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < n; ++v) edges.push_back({VertexId(v), VertexId((v + 1) % n)});
    return graph_of(n, std::move(edges));
}

inline MultiGraph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) edges.push_back({VertexId(a), VertexId(b)});
    return graph_of(n, std::move(edges));
}

// Triangles {0,1,2} and {3,4,5}; edge 6 is the bridge 2-3.
inline MultiGraph bridged_triangles() {
    return graph_of(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
}

inline std::string fixture_path(const std::string& name) {
    return std::string(STMOD_FIXTURE_DIR) + "/" + name;
}

inline EdgeList load_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name));
    if (!in) throw std::runtime_error("missing fixture " + name);
    return parse_edge_list(in);
}

/// Graphs of the committed random corpus, split on "# graph" headers.
inline std::vector<MultiGraph> small_corpus() {
    std::ifstream in(fixture_path("small_corpus.txt"));
    if (!in) throw std::runtime_error("missing fixture small_corpus.txt");
    std::vector<MultiGraph> out;
    std::string block, line;
    auto flush = [&] {
        if (!block.empty()) {
            auto g = parse_edge_list(block).graph;
            if (g.edge_count() > 0) out.push_back(std::move(g));
        }
        block.clear();
    };
    while (std::getline(in, line)) {
        if (line.rfind("# graph", 0) == 0) flush();
        block += line + "\n";
    }
    flush();
    return out;
}

inline EdgeSubset subset_from_mask(std::size_t m, std::uint64_t mask) {
    EdgeSubset s(m);
    for (std::size_t e = 0; e < m; ++e)
        if (mask >> e & 1) s.insert(EdgeId(e));
    return s;
}

}  // namespace stmod::testing
