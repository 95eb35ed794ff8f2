#include "stmod/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "stmod/detail/disjoint_sets.hpp"
#include "stmod/errors.hpp"

namespace stmod::oracle {

namespace {

using Mask = std::uint64_t;

std::size_t components_of(const MultiGraph& g, Mask edges) {
    detail::DisjointSets sets(g.vertex_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (edges >> e & 1) sets.unite(g.edge(static_cast<EdgeId>(e)).a, g.edge(static_cast<EdgeId>(e)).b);
    return sets.set_count();
}

EdgeSubset subset_of(std::size_t universe, Mask m) {
    EdgeSubset s(universe);
    for (std::size_t e = 0; e < universe; ++e)
        if (m >> e & 1) s.insert(static_cast<EdgeId>(e));
    return s;
}

void require_connected(const MultiGraph& g, const char* what) {
    if (!is_connected(g)) throw DomainError(std::string(what) + " requires a connected graph");
}

}  // namespace

std::vector<EdgeSubset> enumerate_spanning_trees(const MultiGraph& g, std::size_t guard) {
    require_connected(g, "enumerate_spanning_trees");
    const BigInt total = count_spanning_trees(g);
    if (total > guard)
        throw GuardError("graph has " + total.str() + " spanning trees, above the guard of " +
                         std::to_string(guard));

    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    std::vector<EdgeSubset> trees;
    if (n <= 1) {
        trees.emplace_back(m);
        return trees;
    }

    std::vector<EdgeId> chosen;
    // Branch on each edge: contract it (keep) when it joins two pieces, or
    // delete it while the kept edges plus the undecided ones still span.
    std::function<void(std::size_t)> branch = [&](std::size_t next) {
        if (chosen.size() == n - 1) {
            trees.emplace_back(m, std::span<const EdgeId>(chosen));
            return;
        }
        if (next == m || n - 1 - chosen.size() > m - next) return;

        detail::DisjointSets sets(n);
        for (EdgeId e : chosen) sets.unite(g.edge(e).a, g.edge(e).b);
        const Edge& ed = g.edge(static_cast<EdgeId>(next));
        if (sets.find(ed.a) != sets.find(ed.b)) {
            chosen.push_back(static_cast<EdgeId>(next));
            branch(next + 1);
            chosen.pop_back();
        }
        for (std::size_t e = next + 1; e < m; ++e) sets.unite(g.edge(static_cast<EdgeId>(e)).a, g.edge(static_cast<EdgeId>(e)).b);
        if (sets.set_count() == 1) branch(next + 1);
    };
    branch(0);
    return trees;
}

BigInt count_spanning_trees(const MultiGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n <= 1) return BigInt(1);
    const std::size_t k = n - 1;  // drop the last row and column

    std::vector<std::vector<BigInt>> a(k, std::vector<BigInt>(k, BigInt(0)));
    for (const Edge& e : g.edges()) {
        if (e.a < k) a[e.a][e.a] += 1;
        if (e.b < k) a[e.b][e.b] += 1;
        if (e.a < k && e.b < k) {
            a[e.a][e.b] -= 1;
            a[e.b][e.a] -= 1;
        }
    }

    BigInt previous(1);
    int sign = 1;
    for (std::size_t p = 0; p < k; ++p) {
        if (a[p][p] == 0) {
            std::size_t swap_row = p + 1;
            while (swap_row < k && a[swap_row][p] == 0) ++swap_row;
            if (swap_row == k) return BigInt(0);
            std::swap(a[p], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < k; ++i) {
            for (std::size_t j = p + 1; j < k; ++j) {
                a[i][j] = a[i][j] * a[p][p] - a[i][p] * a[p][j];
                a[i][j] /= previous;  // exact by Sylvester's identity
            }
            a[i][p] = 0;
        }
        previous = a[p][p];
    }
    BigInt det = a[k - 1][k - 1];
    return sign < 0 ? BigInt(-det) : det;
}

BruteTheta brute_theta(const MultiGraph& g) {
    require_connected(g, "brute_theta");
    const std::size_t m = g.edge_count();
    if (m == 0) throw DomainError("brute_theta needs at least one edge");
    if (m > max_theta_edges)
        throw GuardError("brute_theta limited to " + std::to_string(max_theta_edges) + " edges");

    const Mask all = (Mask{1} << m) - 1;
    std::size_t best_overlap = 0;
    std::size_t best_size = 1;
    std::vector<Mask> best;
    for (Mask mask = 1; mask <= all; ++mask) {
        const std::size_t overlap = components_of(g, all & ~mask) - 1;
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        // compare overlap/size against best_overlap/best_size
        const std::size_t lhs = overlap * best_size;
        const std::size_t rhs = best_overlap * size;
        if (lhs > rhs) {
            best_overlap = overlap;
            best_size = size;
            best.assign(1, mask);
        } else if (lhs == rhs) {
            best.push_back(mask);
        }
    }

    BruteTheta out;
    out.theta = Rational(BigInt(best_overlap), BigInt(best_size));
    for (Mask mask : best) out.maximizers.push_back(subset_of(m, mask));
    return out;
}

TightIncrement brute_min_increment(const MultiGraph& g, const IncrementVector& x_prime, EdgeId j,
                                   std::int64_t q) {
    const std::size_t m = g.edge_count();
    if (m > max_increment_edges)
        throw GuardError("brute_min_increment limited to " + std::to_string(max_increment_edges) + " edges");
    if (j >= m) throw DomainError("edge id out of range");

    const std::size_t n = g.vertex_count();
    const Mask all = (Mask{1} << m) - 1;
    bool have = false;
    std::int64_t best_value = 0;
    Mask best_mask = 0;

    auto ids = [m](Mask mask) {
        std::vector<EdgeId> out;
        for (std::size_t e = 0; e < m; ++e)
            if (mask >> e & 1) out.push_back(static_cast<EdgeId>(e));
        return out;
    };

    for (Mask mask = 1; mask <= all; ++mask) {
        if (!(mask >> j & 1)) continue;
        const auto rank = static_cast<std::int64_t>(n - components_of(g, mask));
        std::int64_t value = q * rank;
        for (std::size_t e = 0; e < m; ++e)
            if (mask >> e & 1) value -= x_prime.values[e];

        bool better = !have || value < best_value;
        if (have && value == best_value) {
            const int a = std::popcount(mask);
            const int b = std::popcount(best_mask);
            better = a < b || (a == b && ids(mask) < ids(best_mask));
        }
        if (better) {
            have = true;
            best_value = value;
            best_mask = mask;
        }
    }
    return {best_value, subset_of(m, best_mask)};
}

ModulusResult brute_modulus(const MultiGraph& g) {
    require_connected(g, "brute_modulus");
    if (g.vertex_count() < 2 || g.edge_count() == 0)
        throw DomainError("brute_modulus needs a graph with at least one edge");

    ModulusResult out;
    out.eta_star.assign(g.edge_count(), Rational(0));

    struct Piece {
        MultiGraph graph;
        std::vector<VertexId> root_vertex;
        std::vector<EdgeId> root_edge;
        std::size_t parent;
    };
    std::vector<Piece> stack;
    {
        Piece root{g, std::vector<VertexId>(g.vertex_count()), std::vector<EdgeId>(g.edge_count()),
                   PeelRecord::no_parent};
        std::iota(root.root_vertex.begin(), root.root_vertex.end(), VertexId{0});
        std::iota(root.root_edge.begin(), root.root_edge.end(), EdgeId{0});
        stack.push_back(std::move(root));
    }

    while (!stack.empty()) {
        Piece cur = std::move(stack.back());
        stack.pop_back();
        if (cur.graph.edge_count() > max_modulus_edges)
            throw GuardError("brute_modulus limited to " + std::to_string(max_modulus_edges) +
                             " edges per subgraph");

        const BruteTheta bt = brute_theta(cur.graph);
        const EdgeSubset& critical = *std::max_element(
            bt.maximizers.begin(), bt.maximizers.end(),
            [](const EdgeSubset& a, const EdgeSubset& b) { return a.count() < b.count(); });

        PeelRecord rec;
        rec.parent = cur.parent;
        rec.vertices = cur.root_vertex;
        rec.edge_count = cur.graph.edge_count();
        rec.theta = bt.theta;
        for (EdgeId e : critical.members()) {
            out.eta_star[cur.root_edge[e]] = bt.theta;
            rec.critical.push_back(cur.root_edge[e]);
        }
        const std::size_t index = out.trace.size();
        out.trace.push_back(std::move(rec));

        // Components of the graph with the critical edges deleted.
        const EdgeSubset rest = critical.complement();
        const auto labels = component_labels(cur.graph, rest);
        const std::size_t n_comp = *std::max_element(labels.begin(), labels.end()) + 1;
        std::vector<Piece> pieces(n_comp);
        std::vector<VertexId> local(cur.graph.vertex_count());
        for (std::size_t v = 0; v < cur.graph.vertex_count(); ++v) {
            local[v] = static_cast<VertexId>(pieces[labels[v]].root_vertex.size());
            pieces[labels[v]].root_vertex.push_back(cur.root_vertex[v]);
        }
        std::vector<std::vector<Edge>> edges(n_comp);
        for (EdgeId e : rest.members()) {
            const Edge& ed = cur.graph.edge(e);
            edges[labels[ed.a]].push_back({local[ed.a], local[ed.b]});
            pieces[labels[ed.a]].root_edge.push_back(cur.root_edge[e]);
        }
        for (std::size_t c = 0; c < n_comp; ++c) {
            if (edges[c].empty()) continue;
            pieces[c].graph = MultiGraph(pieces[c].root_vertex.size(), std::move(edges[c]));
            pieces[c].parent = index;
            stack.push_back(std::move(pieces[c]));
        }
    }

    finish_modulus(g, out);
    return out;
}

Rational minimum_spanning_tree_weight(const MultiGraph& g, const std::vector<Rational>& weights) {
    if (weights.size() != g.edge_count()) throw DomainError("one weight per edge required");
    std::vector<EdgeId> order(g.edge_count());
    std::iota(order.begin(), order.end(), EdgeId{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](EdgeId a, EdgeId b) { return weights[a] < weights[b]; });

    detail::DisjointSets sets(g.vertex_count());
    Rational total(0);
    for (EdgeId e : order)
        if (sets.unite(g.edge(e).a, g.edge(e).b)) total += weights[e];
    if (sets.set_count() != 1) throw DomainError("graph has no spanning tree");
    return total;
}

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* VerificationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

VerificationReport verify_modulus(const MultiGraph& g, const ModulusResult& r) {
    VerificationReport report;
    auto add = [&](std::string name, bool ok, std::string detail) {
        report.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    const std::size_t m = g.edge_count();
    if (r.eta_star.size() != m || r.rho_star.size() != m) {
        add("shape", false, "result does not have one entry per edge");
        return report;
    }

    Rational usage(0);
    Rational energy(0);
    std::size_t out_of_range = 0;
    for (const Rational& eta : r.eta_star) {
        if (eta <= 0 || eta > 1) ++out_of_range;
        usage += eta;
        energy += eta * eta;
    }
    add("eta_range", out_of_range == 0, std::to_string(out_of_range) + " edges outside (0, 1]");

    const Rational rank(BigInt(g.vertex_count() - 1));
    add("eta_sum", usage == rank,
        "sum eta* = " + to_fraction_string(usage) + ", |V| - 1 = " + to_fraction_string(rank));

    add("normalization", r.modulus * energy == 1,
        "Mod * sum eta*^2 = " + to_fraction_string(r.modulus * energy));

    std::size_t bad_rho = 0;
    for (std::size_t e = 0; e < m; ++e)
        if (r.rho_star[e] != r.eta_star[e] * r.modulus) ++bad_rho;
    add("rho_scaling", bad_rho == 0, std::to_string(bad_rho) + " edges with rho* != eta* Mod");

    std::size_t bad_bridges = 0;
    const EdgeSubset br = bridges(g);
    for (EdgeId e : br.members())
        if (r.eta_star[e] != 1) ++bad_bridges;
    add("bridges", bad_bridges == 0,
        std::to_string(br.count()) + " bridges, " + std::to_string(bad_bridges) + " with eta* != 1");

    bool mst_ok = false;
    std::string mst_detail;
    try {
        const Rational mst = minimum_spanning_tree_weight(g, r.eta_star);
        mst_ok = mst == energy;
        mst_detail = "MST weight " + to_fraction_string(mst) + ", sum eta*^2 " + to_fraction_string(energy);
    } catch (const DomainError& e) {
        mst_detail = e.what();
    }
    add("mst_identity", mst_ok, mst_detail);

    std::size_t bad_steps = 0;
    for (const PeelRecord& rec : r.trace)
        if (rec.parent != PeelRecord::no_parent &&
            (rec.parent >= r.trace.size() || rec.theta > r.trace[rec.parent].theta))
            ++bad_steps;
    add("trace_monotone", bad_steps == 0,
        std::to_string(r.trace.size()) + " peels, " + std::to_string(bad_steps) + " increase theta");

    return report;
}

}  // namespace stmod::oracle
