#include "stmod/polymatroid.hpp"

#include <numeric>
#include <string>

#include "stmod/errors.hpp"

namespace stmod {

std::int64_t IncrementVector::sum(const EdgeSubset& s) const {
    std::int64_t total = 0;
    for (EdgeId e : s.members()) total += values[e];
    return total;
}

std::int64_t IncrementVector::total() const {
    return std::accumulate(values.begin(), values.end(), std::int64_t{0});
}

FlowNetwork build_aux_network(const MultiGraph& g, const IncrementVector& x_prime, EdgeId j,
                              std::int64_t q) {
    const std::size_t n = g.vertex_count();
    const auto r = static_cast<NodeId>(n);
    const auto s = static_cast<NodeId>(n + 1);
    const Edge& target = g.edge(j);

    FlowNetwork net(n + 2, r, s);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(static_cast<EdgeId>(e));
        net.add_edge(ed.a, ed.b, x_prime.values[e], static_cast<EdgeId>(e));
    }
    for (std::size_t v = 0; v < n; ++v) net.add_edge(s, static_cast<NodeId>(v), 2 * q);
    for (std::size_t v = 0; v < n; ++v) {
        if (v == target.a || v == target.b) {
            net.add_infinite_edge(r, static_cast<NodeId>(v));
            continue;
        }
        std::int64_t boundary = 0;
        for (EdgeId e : g.incident(static_cast<VertexId>(v))) boundary += x_prime.values[e];
        net.add_edge(r, static_cast<NodeId>(v), boundary);
    }
    return net;
}

TightIncrement min_tight_increment(const MultiGraph& g, const IncrementVector& x_prime, EdgeId j,
                                   std::int64_t q) {
    const CutResult cut = min_cut(build_aux_network(g, x_prime, j, q));

    // A source side U costs 2(q|U| + x'(E) - x'(E(U))); the minimum over U
    // containing both ends of j is 2(q + x'(E) + epsilon).
    if (cut.value % 2 != 0)
        throw InvariantViolation("auxiliary cut value " + std::to_string(cut.value) + " is odd");

    TightIncrement out;
    out.epsilon = cut.value / 2 - x_prime.total() - q;
    out.tight_set = EdgeSubset(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(static_cast<EdgeId>(e));
        if (cut.source_side[ed.a] && cut.source_side[ed.b]) out.tight_set.insert(static_cast<EdgeId>(e));
    }
    if (out.epsilon < 0 || !out.tight_set.contains(j))
        throw InvariantViolation("auxiliary cut does not decode to a tight set containing the edge");
    return out;
}

BasisResult cunningham_basis(const MultiGraph& g, std::int64_t p, std::int64_t q,
                             const BasisOptions& options) {
    // p = 0 arises from the shifted rerun on a single-edge graph.
    if (p < 0 || q < 1) throw DomainError("cunningham_basis needs p >= 0 and q >= 1");
    if (g.vertex_count() < 2 || g.edge_count() == 0)
        throw DomainError("cunningham_basis needs a nontrivial graph");
    if (!is_connected(g)) throw DomainError("cunningham_basis needs a connected graph");

    std::vector<EdgeId> order = options.visit_order;
    if (order.empty()) {
        order.resize(g.edge_count());
        std::iota(order.begin(), order.end(), EdgeId{0});
    } else {
        std::vector<bool> seen(g.edge_count(), false);
        for (EdgeId e : order) {
            if (e >= g.edge_count() || seen[e])
                throw DomainError("visit order must list every edge exactly once");
            seen[e] = true;
        }
        if (order.size() != g.edge_count())
            throw DomainError("visit order must list every edge exactly once");
    }

    BasisResult out;
    out.x_prime = IncrementVector::zero(q, g.edge_count());
    out.j_bar = EdgeSubset(g.edge_count());

    for (EdgeId j : order) {
        if (options.deadline && std::chrono::steady_clock::now() > *options.deadline)
            throw Timeout("basis computation exceeded its deadline");

        const TightIncrement sub = min_tight_increment(g, out.x_prime, j, q);
        const std::int64_t headroom = p - out.x_prime[j];
        const bool grows = sub.epsilon < headroom;
        if (options.on_step) options.on_step(BasisStep{j, out.x_prime, sub, grows});

        if (grows) {
            out.j_bar |= sub.tight_set;
            out.x_prime.values[j] += sub.epsilon;
        } else {
            out.x_prime.values[j] += headroom;
        }
    }
    out.j_set = out.j_bar.complement();
    out.basis_total = out.x_prime.total();
    return out;
}

}  // namespace stmod
