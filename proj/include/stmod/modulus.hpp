#pragma once

#include <chrono>
#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "stmod/graph.hpp"
#include "stmod/rational.hpp"

namespace stmod {

/// One pass of the peeling loop: a subgraph, its vulnerability and the
/// critical edges removed from it. Ids refer to the root graph.
struct PeelRecord {
    static constexpr std::size_t no_parent = std::numeric_limits<std::size_t>::max();

    std::size_t parent = no_parent;  // index of the peel that produced this subgraph
    std::vector<VertexId> vertices;
    std::size_t edge_count = 0;
    Rational theta;
    std::vector<EdgeId> critical;
    bool used_fallback = false;
};

struct ModulusResult {
    std::vector<Rational> eta_star;  // optimal expected edge usage, per edge
    std::vector<Rational> rho_star;  // optimal density, per edge
    Rational modulus;
    std::vector<PeelRecord> trace;
};

struct ModulusOptions {
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Spanning tree modulus by repeated critical-set peeling. Subgraphs are
/// processed first-in first-out; components are queued in order of their
/// smallest vertex. Throws DomainError for a disconnected or edgeless graph.
ModulusResult spanning_tree_modulus(const MultiGraph& g, const ModulusOptions& options = {});

/// Sets rho* and Mod from eta* and checks sum(eta*) = |V| - 1 and 0 < eta* <= 1.
void finish_modulus(const MultiGraph& g, ModulusResult& result);

/// Distinct eta* values with multiplicities, largest value first.
std::vector<std::pair<Rational, std::size_t>> eta_histogram(const ModulusResult& result);

}  // namespace stmod
