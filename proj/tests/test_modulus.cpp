#include <doctest.h>

#include <algorithm>
#include <map>

#include "stmod/errors.hpp"
#include "stmod/modulus.hpp"
#include "stmod/oracle.hpp"
#include "test_support.hpp"

using namespace stmod;
using namespace stmod::testing;

namespace {

void check_certificate(const MultiGraph& g, const ModulusResult& r) {
    const auto report = oracle::verify_modulus(g, r);
    for (const auto& c : report.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.passed);
    }
    CHECK(r.trace.size() <= g.edge_count());
}

}  // namespace

TEST_CASE("karate club modulus") {
    const auto g = load_fixture("karate.txt").graph;
    const auto r = spanning_tree_modulus(g);
    CHECK(r.modulus == make_rational(680, 9969));

    const std::vector<std::pair<Rational, std::size_t>> expected{
        {make_rational(1, 1), 1},
        {make_rational(1, 2), 30},
        {make_rational(2, 5), 5},
        {make_rational(3, 8), 8},
        {make_rational(6, 17), 34}};
    CHECK(eta_histogram(r) == expected);

    std::multiset<std::pair<Rational, std::size_t>> peels;
    for (const auto& rec : r.trace) peels.insert({rec.theta, rec.critical.size()});
    CHECK(peels == std::multiset<std::pair<Rational, std::size_t>>(expected.begin(), expected.end()));
    CHECK(r.trace.front().parent == PeelRecord::no_parent);
    CHECK(r.trace.front().theta == 1);
    check_certificate(g, r);
}

TEST_CASE("trees use every edge") {
    for (const auto& g : {path(2), path(7), graph_of(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})}) {
        const auto r = spanning_tree_modulus(g);
        for (const auto& eta : r.eta_star) CHECK(eta == 1);
        CHECK(r.modulus == make_rational(1, std::int64_t(g.vertex_count() - 1)));
        CHECK(eta_histogram(r) ==
              std::vector<std::pair<Rational, std::size_t>>{{Rational(1), g.vertex_count() - 1}});
        check_certificate(g, r);
    }
}

TEST_CASE("cycles and complete graphs peel in one step") {
    for (std::size_t n = 3; n <= 9; ++n) {
        const auto g = cycle(n);
        const auto r = spanning_tree_modulus(g);
        const Rational eta = make_rational(std::int64_t(n - 1), std::int64_t(n));
        for (const auto& e : r.eta_star) CHECK(e == eta);
        CHECK(r.modulus == make_rational(std::int64_t(n), std::int64_t((n - 1) * (n - 1))));
        CHECK(r.trace.size() == 1);
        check_certificate(g, r);
    }
    {
        const auto r = spanning_tree_modulus(cycle(5));
        CHECK(eta_histogram(r) ==
              std::vector<std::pair<Rational, std::size_t>>{{make_rational(4, 5), 5}});
    }
    {
        const auto r = spanning_tree_modulus(complete(4));
        for (const auto& e : r.eta_star) CHECK(e == make_rational(1, 2));
        CHECK(r.modulus == make_rational(2, 3));
        for (const auto& rho : r.rho_star) CHECK(rho == make_rational(1, 3));
    }
}

TEST_CASE("parallel bundles") {
    SUBCASE("a lone bundle") {
        const auto g = graph_of(2, {{0, 1}, {0, 1}, {1, 0}});
        const auto r = spanning_tree_modulus(g);
        for (const auto& e : r.eta_star) CHECK(e == make_rational(1, 3));
        CHECK(r.modulus == 3);
        check_certificate(g, r);
    }
    SUBCASE("bundle left behind after a peel") {
        // a doubled edge 0-1 hanging off a 5-cycle through a bridge 1-2
        const auto g = graph_of(7, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 2}});
        const auto r = spanning_tree_modulus(g);
        CHECK(r.eta_star[0] == make_rational(1, 2));
        CHECK(r.eta_star[1] == make_rational(1, 2));
        CHECK(r.eta_star[2] == 1);
        for (std::size_t e = 3; e < 8; ++e) CHECK(r.eta_star[e] == make_rational(4, 5));
        check_certificate(g, r);
        CHECK(r.eta_star == oracle::brute_modulus(g).eta_star);
    }
}

TEST_CASE("modulus errors") {
    CHECK_THROWS_AS(spanning_tree_modulus(graph_of(4, {{0, 1}, {2, 3}})), DomainError);
    CHECK_THROWS_AS(spanning_tree_modulus(graph_of(1, {})), DomainError);
}

TEST_CASE("modulus equals the brute-force peeling on the corpus") {
    for (const auto& g : small_corpus()) {
        INFO(format_edge_list(g));
        const auto r = spanning_tree_modulus(g);
        const auto brute = oracle::brute_modulus(g);
        CHECK(r.eta_star == brute.eta_star);
        CHECK(r.modulus == brute.modulus);
        check_certificate(g, r);
        for (const auto& rec : r.trace)
            if (rec.parent != PeelRecord::no_parent) CHECK(rec.theta <= r.trace[rec.parent].theta);
    }
}

TEST_CASE("queue order: components are visited by smallest vertex") {
    // two disjoint 4-cycles hung off a bridge; after the bridge peel both are queued
    const auto g = graph_of(8, {{4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}});
    const auto r = spanning_tree_modulus(g);
    REQUIRE(r.trace.size() == 3);
    CHECK(r.trace[0].critical == std::vector<EdgeId>{8});
    CHECK(r.trace[1].vertices == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(r.trace[2].vertices == std::vector<VertexId>{4, 5, 6, 7});
    CHECK(r.trace[1].parent == 0);
    CHECK(r.trace[2].parent == 0);
}
