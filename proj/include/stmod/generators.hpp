#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

#include "stmod/graph.hpp"

namespace stmod::gen {

/// Generators draw from std::mt19937_64, whose output sequence is fixed by the
/// C++ standard; uniform reals are built from the top 53 bits by hand so no
/// library distribution (implementation-defined) is involved.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

inline constexpr std::size_t default_attempts = 1000;

MultiGraph complete(std::size_t n);

/// Parts of sizes 1, 2, ..., k with every vertex of part i joined to every
/// vertex of part i + 1.
MultiGraph growing_multipartite(std::size_t k);

double gnp_probability(std::size_t n);  // 2 ln(n) / n, capped at 1
double geometric_radius(std::size_t n);  // 3 / sqrt(n)

/// Connected G(n, p) sample; disconnected draws are rejected.
MultiGraph gnp(std::size_t n, std::uint64_t seed, std::size_t max_attempts = default_attempts);

/// Connected random geometric graph in the unit square (strict distance < r).
MultiGraph geometric(std::size_t n, std::uint64_t seed, std::size_t max_attempts = default_attempts);

bool is_family(std::string_view family);
bool is_random_family(std::string_view family);

/// Dispatch by family name: complete, multipartite, gnp, geometric.
MultiGraph generate(std::string_view family, std::size_t param, std::uint64_t seed);

}  // namespace stmod::gen
