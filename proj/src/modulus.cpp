#include "stmod/modulus.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "stmod/errors.hpp"
#include "stmod/vulnerability.hpp"

namespace stmod {

namespace {

struct Pending {
    MultiGraph graph;
    std::vector<VertexId> root_vertex;
    std::vector<EdgeId> root_edge;
    std::size_t parent;
};

}  // namespace

ModulusResult spanning_tree_modulus(const MultiGraph& g, const ModulusOptions& options) {
    if (g.vertex_count() < 2 || g.edge_count() == 0)
        throw DomainError("modulus needs a graph with at least one edge");
    if (!is_connected(g)) throw DomainError("modulus needs a connected graph");

    ModulusResult out;
    out.eta_star.assign(g.edge_count(), Rational(0));
    std::vector<bool> assigned(g.edge_count(), false);

    std::deque<Pending> queue;
    {
        Pending root{g, {}, {}, PeelRecord::no_parent};
        root.root_vertex.resize(g.vertex_count());
        root.root_edge.resize(g.edge_count());
        for (std::size_t v = 0; v < g.vertex_count(); ++v) root.root_vertex[v] = static_cast<VertexId>(v);
        for (std::size_t e = 0; e < g.edge_count(); ++e) root.root_edge[e] = static_cast<EdgeId>(e);
        queue.push_back(std::move(root));
    }

    VulnerabilityOptions vopts;
    vopts.deadline = options.deadline;

    while (!queue.empty()) {
        Pending cur = std::move(queue.front());
        queue.pop_front();

        const CriticalSetResult crit = vulnerability(cur.graph, vopts);

        PeelRecord rec;
        rec.parent = cur.parent;
        rec.vertices = cur.root_vertex;
        rec.edge_count = cur.graph.edge_count();
        rec.theta = crit.theta;
        rec.used_fallback = crit.used_fallback;
        for (EdgeId e : crit.critical.members()) {
            const EdgeId root_e = cur.root_edge[e];
            if (assigned[root_e]) throw InvariantViolation("edge assigned by two peels");
            assigned[root_e] = true;
            out.eta_star[root_e] = crit.theta;
            rec.critical.push_back(root_e);
        }
        const std::size_t index = out.trace.size();
        out.trace.push_back(std::move(rec));

        const Decomposition parts = decompose_after_removal(cur.graph, crit.critical);
        for (const Component& comp : parts.components) {
            if (comp.trivial()) continue;
            if (comp.edges.intersects(crit.critical))
                throw InvariantViolation("critical set has an edge inside a remaining component");
            Pending next{comp.graph, {}, {}, index};
            for (VertexId v : comp.vertices) next.root_vertex.push_back(cur.root_vertex[v]);
            for (EdgeId e : comp.parent_edge) next.root_edge.push_back(cur.root_edge[e]);
            queue.push_back(std::move(next));
        }
    }

    if (!std::all_of(assigned.begin(), assigned.end(), [](bool b) { return b; }))
        throw InvariantViolation("peeling finished with unassigned edges");
    finish_modulus(g, out);
    return out;
}

void finish_modulus(const MultiGraph& g, ModulusResult& result) {
    Rational usage(0);
    Rational energy(0);
    for (const Rational& eta : result.eta_star) {
        if (eta <= 0 || eta > 1) throw InvariantViolation("eta* outside (0, 1]: " + to_fraction_string(eta));
        usage += eta;
        energy += eta * eta;
    }
    if (usage != Rational(BigInt(g.vertex_count() - 1)))
        throw InvariantViolation("sum of eta* is " + to_fraction_string(usage) + ", expected |V| - 1");

    result.modulus = 1 / energy;
    result.rho_star.clear();
    result.rho_star.reserve(result.eta_star.size());
    for (const Rational& eta : result.eta_star) result.rho_star.push_back(eta * result.modulus);
}

std::vector<std::pair<Rational, std::size_t>> eta_histogram(const ModulusResult& result) {
    std::map<Rational, std::size_t, std::greater<>> buckets;
    for (const Rational& eta : result.eta_star) ++buckets[eta];
    return {buckets.begin(), buckets.end()};
}

}  // namespace stmod
