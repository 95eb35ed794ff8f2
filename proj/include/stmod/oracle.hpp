#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stmod/graph.hpp"
#include "stmod/modulus.hpp"
#include "stmod/polymatroid.hpp"
#include "stmod/rational.hpp"

// Brute-force and algebraic reference computations. Everything here avoids the
// flow and polymatroid code paths so it can be used to check them.
namespace stmod::oracle {

inline constexpr std::size_t default_tree_guard = 1'000'000;
inline constexpr std::size_t max_theta_edges = 21;
inline constexpr std::size_t max_increment_edges = 16;
inline constexpr std::size_t max_modulus_edges = 16;

/// Every spanning tree exactly once (parallel edges give distinct trees).
/// Throws GuardError, quoting the count, when there are more than `guard`.
std::vector<EdgeSubset> enumerate_spanning_trees(const MultiGraph& g,
                                                 std::size_t guard = default_tree_guard);

/// Kirchhoff count via fraction-free (Bareiss) elimination of a Laplacian minor.
BigInt count_spanning_trees(const MultiGraph& g);

struct BruteTheta {
    Rational theta;
    std::vector<EdgeSubset> maximizers;
};

/// Exhaustive maximum of M(J)/|J| over nonempty J, with every maximizer.
BruteTheta brute_theta(const MultiGraph& g);

/// Exhaustive min { q f(J') - x'(J') : j in J' }; ties go to the smallest set,
/// then to the lexicographically smallest id list.
TightIncrement brute_min_increment(const MultiGraph& g, const IncrementVector& x_prime, EdgeId j,
                                   std::int64_t q);

/// Peeling with exhaustive vulnerability at every level.
ModulusResult brute_modulus(const MultiGraph& g);

/// Weight of a minimum spanning tree under exact rational edge weights.
Rational minimum_spanning_tree_weight(const MultiGraph& g, const std::vector<Rational>& weights);

struct Check {
    std::string name;
    bool passed;
    std::string detail;
};

struct VerificationReport {
    std::vector<Check> checks;

    bool all_passed() const;
    const Check* find(const std::string& name) const;
};

/// Exact-arithmetic certificate checks for a modulus result: usage range,
/// usage total, normalisation, density scaling, bridges, the minimum-tree
/// identity and monotone theta along the peel trace.
VerificationReport verify_modulus(const MultiGraph& g, const ModulusResult& r);

}  // namespace stmod::oracle
