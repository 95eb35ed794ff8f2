#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "stmod/errors.hpp"
#include "stmod/oracle.hpp"
#include "stmod/polymatroid.hpp"
#include "test_support.hpp"

using namespace stmod;
using namespace stmod::testing;

namespace {

std::vector<std::int64_t> all_ranks(const MultiGraph& g) {
    const std::size_t m = g.edge_count();
    std::vector<std::int64_t> rank(std::size_t{1} << m);
    for (std::uint64_t s = 0; s < rank.size(); ++s)
        rank[s] = static_cast<std::int64_t>(graphic_rank(g, subset_from_mask(m, s)));
    return rank;
}

bool in_scaled_polymatroid(const std::vector<std::int64_t>& rank, const IncrementVector& x) {
    const std::size_t m = x.values.size();
    for (std::uint64_t s = 0; s < rank.size(); ++s) {
        std::int64_t sum = 0;
        for (std::size_t e = 0; e < m; ++e)
            if (s >> e & 1) sum += x.values[e];
        if (sum > x.scale * rank[s]) return false;
    }
    return std::all_of(x.values.begin(), x.values.end(), [](std::int64_t v) { return v >= 0; });
}

// min over J of p|J| + q f(E \ J)
std::int64_t basis_total_by_enumeration(const MultiGraph& g, std::int64_t p, std::int64_t q) {
    const std::size_t m = g.edge_count();
    const std::uint64_t all = (std::uint64_t{1} << m) - 1;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::uint64_t s = 0; s <= all; ++s) {
        const auto rest = static_cast<std::int64_t>(graphic_rank(g, subset_from_mask(m, all & ~s)));
        best = std::min(best, p * std::popcount(s) + q * rest);
    }
    return best;
}

}  // namespace

TEST_CASE("build_aux_network follows the scaled construction") {
    SUBCASE("triangle at zero") {
        const auto net = build_aux_network(triangle(), IncrementVector::zero(3, 3), 0, 3);
        REQUIRE(net.node_count() == 5);
        CHECK(net.source() == 3);
        CHECK(net.sink() == 4);
        const auto& e = net.edges();
        REQUIRE(e.size() == 9);
        for (int i = 0; i < 3; ++i) {
            CHECK(e[i].capacity == 0);
            CHECK(e[i].origin == EdgeId(i));
        }
        for (int i = 3; i < 6; ++i) {
            CHECK(e[i].u == 4);
            CHECK(e[i].capacity == 6);
        }
        CHECK(e[6].infinite);  // r-a
        CHECK(e[7].infinite);  // r-b
        CHECK_FALSE(e[8].infinite);
        CHECK(e[8].capacity == 0);  // r-c
    }
    SUBCASE("single edge") {
        const auto net = build_aux_network(path(2), IncrementVector(1, std::vector<std::int64_t>{1}), 0, 1);
        const auto& e = net.edges();
        REQUIRE(e.size() == 5);
        CHECK(e[0].capacity == 1);
        CHECK(e[1].capacity == 2);
        CHECK(e[2].capacity == 2);
        CHECK(e[3].infinite);
        CHECK(e[4].infinite);
    }
    SUBCASE("K4 at zero") {
        const auto net = build_aux_network(complete(4), IncrementVector::zero(2, 6), 2, 2);
        int zero_original = 0, sink4 = 0, infinite = 0, zero_source = 0;
        for (const auto& e : net.edges()) {
            if (e.origin) zero_original += e.capacity == 0;
            else if (e.u == net.sink()) sink4 += e.capacity == 4;
            else if (e.infinite) ++infinite;
            else zero_source += e.capacity == 0;
        }
        CHECK(zero_original == 6);
        CHECK(sink4 == 4);
        CHECK(infinite == 2);
        CHECK(zero_source == 2);
    }
    SUBCASE("source capacities use the incident x' sum") {
        // path 0-1-2 with x' = (2, 5); j = edge 0, so vertex 2 gets x'(delta(2)) = 5
        const auto net = build_aux_network(path(3), IncrementVector(7, {2, 5}), 0, 7);
        CHECK(net.edges().back().capacity == 5);
    }
}

TEST_CASE("min_tight_increment examples") {
    SUBCASE("triangle at zero") {
        const auto t = min_tight_increment(triangle(), IncrementVector::zero(3, 3), 0, 3);
        CHECK(t.epsilon == 3);
        CHECK(t.tight_set == EdgeSubset(3, {0}));
        const auto b = oracle::brute_min_increment(triangle(), IncrementVector::zero(3, 3), 0, 3);
        CHECK(b.epsilon == 3);
        CHECK(b.tight_set == EdgeSubset(3, {0}));
    }
    SUBCASE("single edge") {
        const auto t = min_tight_increment(path(2), IncrementVector::zero(5, 1), 0, 5);
        CHECK(t.epsilon == 5);
        CHECK(t.tight_set == EdgeSubset(1, {0}));
    }
    SUBCASE("triangle after two increments") {
        const IncrementVector x(3, {2, 2, 0});
        const auto t = min_tight_increment(triangle(), x, 2, 3);
        CHECK(t.epsilon == 2);
        CHECK(t.tight_set == triangle().all_edges());
        const auto b = oracle::brute_min_increment(triangle(), x, 2, 3);
        CHECK(b.epsilon == 2);
        CHECK(b.tight_set == triangle().all_edges());
    }
}

TEST_CASE("cunningham_basis examples") {
    SUBCASE("triangle at 2/3") {
        const auto r = cunningham_basis(triangle(), 2, 3);
        CHECK(r.x_prime.values == std::vector<std::int64_t>{2, 2, 2});
        CHECK(r.basis_total == 6);
        CHECK(r.j_set == triangle().all_edges());
        CHECK(r.j_bar.empty());
    }
    SUBCASE("triangle at 5/9") {
        const auto r = cunningham_basis(triangle(), 5, 9);
        CHECK(r.x_prime.values == std::vector<std::int64_t>{5, 5, 5});
        CHECK(r.basis_total == 15);
        CHECK(r.j_set == triangle().all_edges());
    }
    SUBCASE("single edge") {
        const auto r = cunningham_basis(path(2), 1, 1);
        CHECK(r.x_prime.values == std::vector<std::int64_t>{1});
        CHECK(r.basis_total == 1);
        CHECK(r.j_set == EdgeSubset(1, {0}));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(cunningham_basis(graph_of(3, {{0, 1}}), 1, 1), DomainError);
        CHECK_THROWS_AS(cunningham_basis(graph_of(1, {}), 1, 1), DomainError);
        CHECK_THROWS_AS(cunningham_basis(triangle(), -1, 1), DomainError);
        CHECK_THROWS_AS(cunningham_basis(triangle(), 1, 0), DomainError);
        BasisOptions bad;
        bad.visit_order = {0, 0, 1};
        CHECK_THROWS_AS(cunningham_basis(triangle(), 1, 1, bad), DomainError);
    }
}

TEST_CASE("min_tight_increment agrees with enumeration at every step of a run") {
    std::mt19937_64 rng(77);
    std::size_t probes = 0;
    for (const auto& g : small_corpus()) {
        if (g.edge_count() > 12) continue;
        const std::int64_t q = 1 + static_cast<std::int64_t>(rng() % g.edge_count());
        const std::int64_t p = 1 + static_cast<std::int64_t>(rng() % q);
        const auto rank = all_ranks(g);
        BasisOptions opts;
        bool ok = true;
        opts.on_step = [&](const BasisStep& step) {
            ++probes;
            const auto brute = oracle::brute_min_increment(g, step.x_before, step.edge, q);
            ok &= step.subproblem.epsilon == brute.epsilon;
            // the decoded set attains the minimum
            const auto& t = step.subproblem.tight_set;
            std::uint64_t mask = 0;
            for (EdgeId e : t.members()) mask |= std::uint64_t{1} << e;
            ok &= q * rank[mask] - step.x_before.sum(t) == step.subproblem.epsilon;
            ok &= t.contains(step.edge);
            ok &= in_scaled_polymatroid(rank, step.x_before);
        };
        const auto r = cunningham_basis(g, p, q, opts);
        CHECK(ok);
        CHECK(in_scaled_polymatroid(rank, r.x_prime));
    }
    CHECK(probes > 1000);
}

TEST_CASE("basis total law, order invariance and tightness") {
    std::mt19937_64 rng(99);
    for (const auto& g : small_corpus()) {
        if (g.edge_count() > 12) continue;
        const std::int64_t q = 1 + static_cast<std::int64_t>(rng() % g.edge_count());
        const std::int64_t p = 1 + static_cast<std::int64_t>(rng() % q);
        const std::int64_t expected = basis_total_by_enumeration(g, p, q);

        std::vector<EdgeId> order(g.edge_count());
        std::iota(order.begin(), order.end(), EdgeId{0});
        for (int round = 0; round < 3; ++round) {
            BasisOptions opts;
            opts.visit_order = order;
            const auto r = cunningham_basis(g, p, q, opts);
            CHECK(r.basis_total == expected);
            CHECK(r.x_prime.sum(r.j_bar) == q * static_cast<std::int64_t>(graphic_rank(g, r.j_bar)));
            for (EdgeId e : r.j_set.members()) CHECK(r.x_prime[e] == p);
            CHECK(r.j_set == r.j_bar.complement());
            std::shuffle(order.begin(), order.end(), rng);
        }
    }
}

TEST_CASE("entries never decrease during a run") {
    const auto g = complete(5);
    std::vector<std::int64_t> last(g.edge_count(), 0);
    bool ok = true;
    BasisOptions opts;
    opts.on_step = [&](const BasisStep& step) {
        for (std::size_t e = 0; e < last.size(); ++e) ok &= step.x_before.values[e] >= last[e];
        last = step.x_before.values;
    };
    cunningham_basis(g, 2, 5, opts);
    CHECK(ok);
}
