#include <doctest.h>

#include <limits>
#include <random>

#include "stmod/errors.hpp"
#include "stmod/flow.hpp"
#include "stmod/polymatroid.hpp"
#include "test_support.hpp"

using namespace stmod;
using namespace stmod::testing;

namespace {

// Minimum over every bipartition with the source on one side and the sink on
// the other; also returns the intersection of all minimizing source sides.
struct ExhaustiveCut {
    Capacity value;
    std::vector<bool> minimal_source_side;
};

ExhaustiveCut exhaustive_min_cut(const FlowNetwork& net) {
    const std::size_t n = net.node_count();
    std::vector<std::size_t> free_nodes;
    for (std::size_t v = 0; v < n; ++v)
        if (v != net.source() && v != net.sink()) free_nodes.push_back(v);

    ExhaustiveCut best{std::numeric_limits<Capacity>::max(), std::vector<bool>(n, true)};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_nodes.size()); ++mask) {
        std::vector<bool> side(n, false);
        side[net.source()] = true;
        for (std::size_t i = 0; i < free_nodes.size(); ++i) side[free_nodes[i]] = mask >> i & 1;
        Capacity value = 0;
        for (const auto& e : net.edges())
            if (side[e.u] != side[e.v]) value += net.capacity_of(e);
        if (value < best.value) {
            best.value = value;
            best.minimal_source_side = side;
        } else if (value == best.value) {
            for (std::size_t v = 0; v < n; ++v)
                best.minimal_source_side[v] = best.minimal_source_side[v] && side[v];
        }
    }
    return best;
}

}  // namespace

TEST_CASE("min_cut on small hand networks") {
    SUBCASE("single edge") {
        FlowNetwork net(2, 0, 1);
        net.add_edge(0, 1, 5);
        CHECK(min_cut(net).value == 5);
    }
    SUBCASE("two parallel paths") {
        // r=0, s=1, a=2, b=3
        FlowNetwork net(4, 0, 1);
        net.add_edge(0, 2, 3);
        net.add_edge(2, 1, 4);
        net.add_edge(0, 3, 2);
        net.add_edge(3, 1, 2);
        CHECK(exhaustive_min_cut(net).value == 5);
        const auto cut = min_cut(net);
        CHECK(cut.value == 5);
        CHECK(cut.source_side == std::vector<bool>{true, false, false, false});
    }
    SUBCASE("auxiliary network of the triangle") {
        const std::int64_t q = 3;
        const auto g = triangle();
        const auto net = build_aux_network(g, IncrementVector::zero(q, 3), 0, q);
        const auto oracle = exhaustive_min_cut(net);
        CHECK(oracle.value == 4 * q);  // source side {r, a, b}: two sink edges of 2q
        const auto cut = min_cut(net);
        CHECK(cut.value == oracle.value);
        CHECK(cut.source_side == std::vector<bool>{true, true, false, true, false});
        Capacity crossing = 0;
        for (std::size_t id : cut.cut_edges) crossing += net.capacity_of(net.edges()[id]);
        CHECK(crossing == cut.value);
    }
}

TEST_CASE("min_cut errors") {
    FlowNetwork net(3, 0, 1);
    net.add_infinite_edge(0, 2);
    net.add_infinite_edge(2, 1);
    CHECK_THROWS_AS(min_cut(net), DomainError);

    CHECK_THROWS_AS(FlowNetwork(2, 0, 0), DomainError);
    FlowNetwork big(2, 0, 1);
    CHECK_THROWS_AS(big.add_edge(0, 1, std::numeric_limits<Capacity>::max() / 2), DomainError);
    CHECK_THROWS_AS(big.add_edge(0, 0, 1), DomainError);
}

TEST_CASE("min_cut matches exhaustive enumeration on random networks") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 2 + rng() % 11;  // up to 12 nodes
        const std::size_t m = rng() % (3 * n);
        FlowNetwork net(n, 0, static_cast<NodeId>(n - 1));
        for (std::size_t i = 0; i < m; ++i) {
            const auto u = static_cast<NodeId>(rng() % n);
            auto v = static_cast<NodeId>(rng() % n);
            if (u == v) v = static_cast<NodeId>((v + 1) % n);
            if ((u == 0 || v == 0) && rng() % 6 == 0 && u != n - 1 && v != n - 1)
                net.add_infinite_edge(u, v);
            else
                net.add_edge(u, v, static_cast<Capacity>(rng() % 20));
        }
        const auto oracle = exhaustive_min_cut(net);
        if (oracle.value >= net.infinite_capacity()) {
            CHECK_THROWS_AS(min_cut(net), DomainError);
            continue;
        }
        const auto cut = min_cut(net);
        INFO("trial " << trial);
        CHECK(cut.value == oracle.value);
        CHECK(cut.source_side == oracle.minimal_source_side);
        const auto again = min_cut(net);
        CHECK(again.cut_edges == cut.cut_edges);
    }
}
