#include "stmod/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "stmod/detail/disjoint_sets.hpp"
#include "stmod/errors.hpp"

namespace stmod {

EdgeSubset::EdgeSubset(std::size_t universe, std::initializer_list<EdgeId> members)
    : flags_(universe, 0) {
    for (EdgeId e : members) insert(e);
}

EdgeSubset::EdgeSubset(std::size_t universe, std::span<const EdgeId> members)
    : flags_(universe, 0) {
    for (EdgeId e : members) insert(e);
}

EdgeSubset EdgeSubset::full(std::size_t universe) {
    EdgeSubset s;
    s.flags_.assign(universe, 1);
    s.count_ = universe;
    return s;
}

void EdgeSubset::insert(EdgeId e) {
    if (!flags_.at(e)) {
        flags_[e] = 1;
        ++count_;
    }
}

void EdgeSubset::erase(EdgeId e) {
    if (flags_.at(e)) {
        flags_[e] = 0;
        --count_;
    }
}

std::vector<EdgeId> EdgeSubset::members() const {
    std::vector<EdgeId> out;
    out.reserve(count_);
    for (std::size_t e = 0; e < flags_.size(); ++e)
        if (flags_[e]) out.push_back(static_cast<EdgeId>(e));
    return out;
}

EdgeSubset EdgeSubset::complement() const {
    EdgeSubset out(flags_.size());
    for (std::size_t e = 0; e < flags_.size(); ++e) out.flags_[e] = flags_[e] ? 0 : 1;
    out.count_ = flags_.size() - count_;
    return out;
}

bool EdgeSubset::intersects(const EdgeSubset& other) const {
    const std::size_t n = std::min(flags_.size(), other.flags_.size());
    for (std::size_t e = 0; e < n; ++e)
        if (flags_[e] && other.flags_[e]) return true;
    return false;
}

bool EdgeSubset::is_subset_of(const EdgeSubset& other) const {
    for (std::size_t e = 0; e < flags_.size(); ++e)
        if (flags_[e] && (e >= other.flags_.size() || !other.flags_[e])) return false;
    return true;
}

EdgeSubset& EdgeSubset::operator|=(const EdgeSubset& other) {
    if (other.universe() != universe())
        throw std::invalid_argument("EdgeSubset union over different universes");
    for (std::size_t e = 0; e < flags_.size(); ++e) {
        if (other.flags_[e] && !flags_[e]) {
            flags_[e] = 1;
            ++count_;
        }
    }
    return *this;
}

MultiGraph::MultiGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ > std::numeric_limits<VertexId>::max() ||
        edges_.size() > std::numeric_limits<EdgeId>::max())
        throw DomainError("graph too large for 32-bit ids");

    offsets_.assign(vertex_count_ + 1, 0);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& ed = edges_[e];
        if (ed.a >= vertex_count_ || ed.b >= vertex_count_)
            throw DomainError("edge " + std::to_string(e) + " has an endpoint out of range");
        if (ed.a == ed.b)
            throw DomainError("edge " + std::to_string(e) + " is a self-loop");
        ++offsets_[ed.a + 1];
        ++offsets_[ed.b + 1];
    }
    for (std::size_t v = 0; v < vertex_count_; ++v) offsets_[v + 1] += offsets_[v];

    incidence_.resize(offsets_.back());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        incidence_[fill[edges_[e].a]++] = static_cast<EdgeId>(e);
        incidence_[fill[edges_[e].b]++] = static_cast<EdgeId>(e);
    }
}

std::vector<std::size_t> component_labels(const MultiGraph& g, const EdgeSubset& active) {
    detail::DisjointSets sets(g.vertex_count());
    for (EdgeId e : active.members()) sets.unite(g.edge(e).a, g.edge(e).b);

    constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> root_label(g.vertex_count(), unset);
    std::vector<std::size_t> labels(g.vertex_count());
    std::size_t next = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::size_t& l = root_label[sets.find(v)];
        if (l == unset) l = next++;
        labels[v] = l;
    }
    return labels;
}

std::size_t component_count(const MultiGraph& g, const EdgeSubset& active) {
    detail::DisjointSets sets(g.vertex_count());
    for (EdgeId e : active.members()) sets.unite(g.edge(e).a, g.edge(e).b);
    return sets.set_count();
}

bool is_connected(const MultiGraph& g) {
    return g.vertex_count() <= 1 || component_count(g, g.all_edges()) == 1;
}

std::size_t graphic_rank(const MultiGraph& g, const EdgeSubset& j) {
    return g.vertex_count() - component_count(g, j);
}

std::size_t min_overlap(const MultiGraph& g, const EdgeSubset& j) {
    if (!is_connected(g)) throw DomainError("min_overlap requires a connected graph");
    return component_count(g, j.complement()) - 1;
}

Rational theta_of_set(const MultiGraph& g, const EdgeSubset& j) {
    if (!is_connected(g)) throw DomainError("theta_of_set requires a connected graph");
    if (j.empty()) return Rational(0);
    return Rational(BigInt(min_overlap(g, j)), BigInt(j.count()));
}

Decomposition decompose_after_removal(const MultiGraph& g, const EdgeSubset& j) {
    const auto labels = component_labels(g, j.complement());
    const std::size_t n_comp =
        labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;

    Decomposition out;
    out.removed = j;
    out.components.resize(n_comp);

    std::vector<VertexId> local(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        auto& comp = out.components[labels[v]];
        local[v] = static_cast<VertexId>(comp.vertices.size());
        comp.vertices.push_back(static_cast<VertexId>(v));
    }

    std::vector<std::vector<Edge>> local_edges(n_comp);
    for (auto& comp : out.components) comp.edges = EdgeSubset(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(static_cast<EdgeId>(e));
        if (labels[ed.a] != labels[ed.b]) continue;
        auto& comp = out.components[labels[ed.a]];
        comp.edges.insert(static_cast<EdgeId>(e));
        comp.parent_edge.push_back(static_cast<EdgeId>(e));
        local_edges[labels[ed.a]].push_back({local[ed.a], local[ed.b]});
    }
    for (std::size_t c = 0; c < n_comp; ++c) {
        auto& comp = out.components[c];
        comp.graph = MultiGraph(comp.vertices.size(), std::move(local_edges[c]));
    }
    return out;
}

EdgeSubset bridges(const MultiGraph& g) {
    const std::size_t n = g.vertex_count();
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    constexpr EdgeId no_edge = std::numeric_limits<EdgeId>::max();

    EdgeSubset out(g.edge_count());
    std::vector<std::size_t> order(n, unvisited);
    std::vector<std::size_t> low(n, 0);

    struct Frame {
        VertexId v;
        EdgeId via;
        std::size_t next;
    };
    std::vector<Frame> stack;
    std::size_t clock = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (order[root] != unvisited) continue;
        order[root] = low[root] = clock++;
        stack.push_back({static_cast<VertexId>(root), no_edge, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto inc = g.incident(f.v);
            if (f.next < inc.size()) {
                const EdgeId e = inc[f.next++];
                if (e == f.via) continue;
                const Edge& ed = g.edge(e);
                const VertexId w = ed.a == f.v ? ed.b : ed.a;
                if (order[w] == unvisited) {
                    order[w] = low[w] = clock++;
                    stack.push_back({w, e, 0});
                } else {
                    low[f.v] = std::min(low[f.v], order[w]);
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (!stack.empty()) {
                const VertexId parent = stack.back().v;
                low[parent] = std::min(low[parent], low[done.v]);
                if (low[done.v] > order[parent]) out.insert(done.via);
            }
        }
    }
    return out;
}

}  // namespace stmod
