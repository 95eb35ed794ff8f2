#include "stmod/vulnerability.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "stmod/errors.hpp"
#include "stmod/polymatroid.hpp"

namespace stmod {

ThetaCandidates::ThetaCandidates(std::size_t vertex_count, std::size_t edge_count) {
    if (vertex_count < 2 || edge_count < 1)
        throw DomainError("theta candidates need |V| >= 2 and |E| >= 1");
    const auto max_q = static_cast<std::int64_t>(edge_count);
    const auto max_p = static_cast<std::int64_t>(vertex_count - 1);
    // Every value has its reduced form in the set, so keeping coprime pairs dedups.
    for (std::int64_t q = 1; q <= max_q; ++q)
        for (std::int64_t p = 1; p <= std::min(max_p, q); ++p)
            if (std::gcd(p, q) == 1) values_.push_back({p, q});
    std::sort(values_.begin(), values_.end());
}

namespace {

void check_graph(const MultiGraph& g) {
    if (g.vertex_count() < 2 || g.edge_count() == 0)
        throw DomainError("vulnerability needs a graph with at least one edge");
    if (!is_connected(g)) throw DomainError("vulnerability needs a connected graph");
}

bool reaches_rank(const MultiGraph& g, const BasisResult& basis, std::int64_t q) {
    return basis.basis_total >= q * static_cast<std::int64_t>(g.vertex_count() - 1);
}

}  // namespace

bool is_theta_le(const MultiGraph& g, std::int64_t p, std::int64_t q) {
    check_graph(g);
    if (p < 1 || q < 1) throw DomainError("is_theta_le needs p, q >= 1");
    return reaches_rank(g, cunningham_basis(g, p, q), q);
}

CriticalSetResult vulnerability(const MultiGraph& g, const VulnerabilityOptions& options) {
    check_graph(g);
    const ThetaCandidates candidates(g.vertex_count(), g.edge_count());
    const auto& values = candidates.values();

    BasisOptions basis_options;
    basis_options.deadline = options.deadline;

    CriticalSetResult out;
    auto probe = [&](const Ratio& c) {
        BasisResult basis = cunningham_basis(g, c.num, c.den, basis_options);
        const bool le = reaches_rank(g, basis, c.den);
        out.probes.push_back({c, basis.basis_total, le});
        return std::pair{le, std::move(basis)};
    };

    const Ratio lower{static_cast<std::int64_t>(g.vertex_count() - 1),
                      static_cast<std::int64_t>(g.edge_count())};
    std::size_t lo = static_cast<std::size_t>(
        std::lower_bound(values.begin(), values.end(), lower) - values.begin());
    std::size_t hi = values.size() - 1;

    std::optional<BasisResult> at_hi;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        auto [le, basis] = probe(values[mid]);
        if (le) {
            hi = mid;
            at_hi = std::move(basis);
        } else {
            lo = mid + 1;
        }
    }
    const Ratio theta = values[lo];
    if (!at_hi || !(values[hi] == theta)) {
        auto [le, basis] = probe(theta);
        if (!le) throw InvariantViolation("binary search ended on a candidate below theta(G)");
        at_hi = std::move(basis);
    }

    out.theta_ratio = theta;
    out.theta = theta.to_rational();
    if (!options.force_fallback && !at_hi->j_set.empty()) {
        out.critical = at_hi->j_set;
    } else {
        // Nothing in Theta lies in (theta - 1/|E|^2, theta), so J from this run is critical.
        const auto m2 = static_cast<std::int64_t>(g.edge_count() * g.edge_count());
        const std::int64_t p_shift = theta.num * m2 - theta.den;
        const std::int64_t q_shift = theta.den * m2;
        BasisResult shifted = cunningham_basis(g, p_shift, q_shift, basis_options);
        out.probes.push_back({{p_shift, q_shift}, shifted.basis_total,
                              reaches_rank(g, shifted, q_shift)});
        if (shifted.j_set.empty())
            throw InvariantViolation("shifted basis run returned an empty set");
        out.critical = std::move(shifted.j_set);
        out.used_fallback = true;
    }

    const Rational achieved = theta_of_set(g, out.critical);
    if (achieved != out.theta)
        throw InvariantViolation("extracted set has vulnerability " + to_fraction_string(achieved) +
                                 ", expected " + to_fraction_string(out.theta));
    return out;
}

}  // namespace stmod
