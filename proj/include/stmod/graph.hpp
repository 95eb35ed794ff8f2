#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "stmod/rational.hpp"

namespace stmod {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    VertexId a;
    VertexId b;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Dense set of edge ids drawn from one host graph.
class EdgeSubset {
public:
    EdgeSubset() = default;
    explicit EdgeSubset(std::size_t universe) : flags_(universe, 0) {}
    EdgeSubset(std::size_t universe, std::initializer_list<EdgeId> members);
    EdgeSubset(std::size_t universe, std::span<const EdgeId> members);

    static EdgeSubset full(std::size_t universe);

    std::size_t universe() const noexcept { return flags_.size(); }
    std::size_t count() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    bool contains(EdgeId e) const { return flags_[e] != 0; }
    void insert(EdgeId e);
    void erase(EdgeId e);

    std::vector<EdgeId> members() const;
    EdgeSubset complement() const;
    bool intersects(const EdgeSubset& other) const;
    bool is_subset_of(const EdgeSubset& other) const;

    EdgeSubset& operator|=(const EdgeSubset& other);

    friend bool operator==(const EdgeSubset& x, const EdgeSubset& y) {
        return x.flags_ == y.flags_;
    }

private:
    std::vector<std::uint8_t> flags_;
    std::size_t count_ = 0;
};

/// Undirected multigraph with stable edge ids (positions in the edge sequence).
///
/// Parallel edges are allowed; self-loops and out-of-range endpoints are rejected
/// at construction with a DomainError. Values are immutable once built.
class MultiGraph {
public:
    MultiGraph() = default;
    MultiGraph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const Edge> edges() const noexcept { return edges_; }

    /// Edge ids incident to v; a parallel bundle contributes one id per edge.
    std::span<const EdgeId> incident(VertexId v) const {
        return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
    }

    EdgeSubset all_edges() const { return EdgeSubset::full(edge_count()); }
    EdgeSubset no_edges() const { return EdgeSubset(edge_count()); }

    friend bool operator==(const MultiGraph& x, const MultiGraph& y) {
        return x.vertex_count_ == y.vertex_count_ && x.edges_ == y.edges_;
    }

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<EdgeId> incidence_;
};

/// Component label per vertex for the spanning subgraph (V, active); labels are
/// dense and assigned in order of each component's smallest vertex.
std::vector<std::size_t> component_labels(const MultiGraph& g, const EdgeSubset& active);

/// Connected components of (V, active), isolated vertices included.
std::size_t component_count(const MultiGraph& g, const EdgeSubset& active);

bool is_connected(const MultiGraph& g);

/// Graphic matroid rank f(J) = |V| - Q(G_J).
std::size_t graphic_rank(const MultiGraph& g, const EdgeSubset& j);

/// Smallest number of J-edges any spanning tree must use: Q(G - J) - 1.
/// Throws DomainError if g is disconnected.
std::size_t min_overlap(const MultiGraph& g, const EdgeSubset& j);

/// Vulnerability of an edge set, M(J)/|J|, and 0 for the empty set.
Rational theta_of_set(const MultiGraph& g, const EdgeSubset& j);

/// One component of G - J together with its vertex-induced edges.
struct Component {
    std::vector<VertexId> vertices;    // parent ids, ascending
    EdgeSubset edges;                  // parent edges with both ends in `vertices`
    MultiGraph graph;                  // relabelled copy of the induced subgraph
    std::vector<EdgeId> parent_edge;   // graph edge id -> parent edge id

    bool trivial() const noexcept { return graph.edge_count() == 0; }
};

struct Decomposition {
    EdgeSubset removed;
    std::vector<Component> components;  // ordered by smallest parent vertex
};

Decomposition decompose_after_removal(const MultiGraph& g, const EdgeSubset& j);

/// Bridges of a multigraph; an edge with a parallel twin is never a bridge.
EdgeSubset bridges(const MultiGraph& g);

}  // namespace stmod
