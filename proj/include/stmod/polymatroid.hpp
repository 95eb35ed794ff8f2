#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "stmod/flow.hpp"
#include "stmod/graph.hpp"

namespace stmod {

/// Integer point x' of the scaled graphic polymatroid P(q f), one entry per edge.
struct IncrementVector {
    std::int64_t scale = 1;  // q
    std::vector<std::int64_t> values;

    IncrementVector() = default;
    IncrementVector(std::int64_t q, std::vector<std::int64_t> v) : scale(q), values(std::move(v)) {}

    static IncrementVector zero(std::int64_t q, std::size_t edge_count) {
        return {q, std::vector<std::int64_t>(edge_count, 0)};
    }

    std::int64_t operator[](EdgeId e) const { return values[e]; }
    std::int64_t sum(const EdgeSubset& s) const;
    std::int64_t total() const;
};

/// Largest increment on one edge that stays inside P(q f), with a set attaining it.
struct TightIncrement {
    std::int64_t epsilon = 0;
    EdgeSubset tight_set;
};

struct BasisResult {
    IncrementVector x_prime;
    EdgeSubset j_bar;  // accumulated tight set
    EdgeSubset j_set;  // E \ j_bar
    std::int64_t basis_total = 0;
};

/// Snapshot handed to BasisOptions::on_step before each edge is incremented.
struct BasisStep {
    EdgeId edge;
    const IncrementVector& x_before;
    const TightIncrement& subproblem;
    bool grew_tight_set;
};

struct BasisOptions {
    std::vector<EdgeId> visit_order;  // empty: ascending edge id
    std::function<void(const BasisStep&)> on_step;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Auxiliary network for the line-4 subproblem, scaled by 2q. Nodes 0..|V|-1
/// are the graph vertices, |V| is the source r and |V|+1 the sink s. Flow
/// edges are added in the order: graph edges (capacity x'(e)), sink edges
/// (2q each), then source edges (infinite at the ends of j, x'(delta(v))
/// elsewhere).
FlowNetwork build_aux_network(const MultiGraph& g, const IncrementVector& x_prime, EdgeId j,
                              std::int64_t q);

/// min { q f(J') - x'(J') : j in J' }, decoded from a minimum r/s cut of the
/// auxiliary network. The tight set is every edge with both ends on the
/// source side of the inclusion-minimal minimum cut.
TightIncrement min_tight_increment(const MultiGraph& g, const IncrementVector& x_prime, EdgeId j,
                                   std::int64_t q);

/// Integer Cunningham greedy: a P(q f)-basis of the constant vector p together
/// with a tight set. Requires a connected graph with at least one edge.
BasisResult cunningham_basis(const MultiGraph& g, std::int64_t p, std::int64_t q,
                             const BasisOptions& options = {});

}  // namespace stmod
