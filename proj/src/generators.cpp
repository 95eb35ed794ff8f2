#include "stmod/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "stmod/errors.hpp"

namespace stmod::gen {

MultiGraph complete(std::size_t n) {
    if (n < 2) throw DomainError("complete graph needs n >= 2");
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b)});
    return MultiGraph(n, std::move(edges));
}

MultiGraph growing_multipartite(std::size_t k) {
    if (k < 2) throw DomainError("multipartite family needs k >= 2");
    std::vector<std::size_t> start(k + 1, 0);
    for (std::size_t i = 1; i <= k; ++i) start[i] = start[i - 1] + i;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < k; ++i)
        for (std::size_t u = start[i]; u < start[i + 1]; ++u)
            for (std::size_t w = start[i + 1]; w < start[i + 2]; ++w)
                edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(w)});
    return MultiGraph(start[k], std::move(edges));
}

double gnp_probability(std::size_t n) {
    return std::min(1.0, 2.0 * std::log(static_cast<double>(n)) / static_cast<double>(n));
}

double geometric_radius(std::size_t n) { return 3.0 / std::sqrt(static_cast<double>(n)); }

namespace {

[[noreturn]] void give_up(const std::string& family, std::size_t n, std::size_t attempts) {
    throw DomainError("no connected " + family + " sample with n = " + std::to_string(n) + " after " +
                      std::to_string(attempts) + " attempts; try a larger n");
}

}  // namespace

MultiGraph gnp(std::size_t n, std::uint64_t seed, std::size_t max_attempts) {
    if (n < 2) throw DomainError("gnp needs n >= 2");
    Rng rng(seed);
    const double p = gnp_probability(n);
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Edge> edges;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (rng.uniform() < p) edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b)});
        MultiGraph g(n, std::move(edges));
        if (is_connected(g)) return g;
    }
    give_up("gnp", n, max_attempts);
}

MultiGraph geometric(std::size_t n, std::uint64_t seed, std::size_t max_attempts) {
    if (n < 2) throw DomainError("geometric needs n >= 2");
    Rng rng(seed);
    const double r2 = geometric_radius(n) * geometric_radius(n);
    std::vector<double> x(n), y(n);
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        for (std::size_t v = 0; v < n; ++v) {
            x[v] = rng.uniform();
            y[v] = rng.uniform();
        }
        std::vector<Edge> edges;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                const double dx = x[a] - x[b];
                const double dy = y[a] - y[b];
                if (dx * dx + dy * dy < r2) edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b)});
            }
        MultiGraph g(n, std::move(edges));
        if (is_connected(g)) return g;
    }
    give_up("geometric", n, max_attempts);
}

bool is_family(std::string_view family) {
    return family == "complete" || family == "multipartite" || is_random_family(family);
}

bool is_random_family(std::string_view family) { return family == "gnp" || family == "geometric"; }

MultiGraph generate(std::string_view family, std::size_t param, std::uint64_t seed) {
    if (family == "complete") return complete(param);
    if (family == "multipartite") return growing_multipartite(param);
    if (family == "gnp") return gnp(param, seed);
    if (family == "geometric") return geometric(param, seed);
    throw DomainError("unknown graph family '" + std::string(family) + "'");
}

}  // namespace stmod::gen
