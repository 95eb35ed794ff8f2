#include "stmod/report.hpp"

#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

namespace stmod::report {

namespace {

nlohmann::json integer_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

BigInt integer_from_json(const nlohmann::json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<std::int64_t>());
}

std::string label_of(const std::vector<std::string>& labels, VertexId v) {
    return labels.empty() ? std::to_string(v) : labels.at(v);
}

std::string decimal(const Rational& r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", to_double(r));
    return buf;
}

nlohmann::json edge_json(const MultiGraph& g, EdgeId e) {
    return nlohmann::json::array({g.edge(e).a, g.edge(e).b});
}

}  // namespace

nlohmann::json fraction_json(const Rational& r) {
    return {{"num", integer_json(boost::multiprecision::numerator(r))},
            {"den", integer_json(boost::multiprecision::denominator(r))}};
}

Rational fraction_from_json(const nlohmann::json& j) {
    return Rational(integer_from_json(j.at("num")), integer_from_json(j.at("den")));
}

nlohmann::json vulnerability_json(const MultiGraph& g, const std::vector<std::string>& labels,
                                  const CriticalSetResult& r) {
    nlohmann::json critical = nlohmann::json::array();
    for (EdgeId e : r.critical.members())
        critical.push_back({{"id", e}, {"edge", edge_json(g, e)}});
    nlohmann::json doc{{"theta", fraction_json(r.theta)},
                       {"critical", std::move(critical)},
                       {"fallback", r.used_fallback}};
    if (!labels.empty()) doc["labels"] = labels;
    return doc;
}

std::string vulnerability_text(const MultiGraph& g, const std::vector<std::string>& labels,
                               const CriticalSetResult& r) {
    std::ostringstream out;
    out << "theta = " << to_fraction_string(r.theta) << " (~" << decimal(r.theta) << ")\n";
    out << "critical edges: " << r.critical.count() << (r.used_fallback ? " (shifted rerun)" : "") << '\n';
    for (EdgeId e : r.critical.members())
        out << "  " << e << ": " << label_of(labels, g.edge(e).a) << ' ' << label_of(labels, g.edge(e).b)
            << '\n';
    return out.str();
}

nlohmann::json modulus_json(const MultiGraph& g, const std::vector<std::string>& labels,
                            const ModulusResult& r) {
    nlohmann::json eta = nlohmann::json::array();
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        nlohmann::json item = fraction_json(r.eta_star[e]);
        item["edge"] = edge_json(g, static_cast<EdgeId>(e));
        item["rho"] = fraction_json(r.rho_star[e]);
        eta.push_back(std::move(item));
    }
    nlohmann::json trace = nlohmann::json::array();
    for (const PeelRecord& rec : r.trace) {
        trace.push_back({{"parent", rec.parent == PeelRecord::no_parent ? nlohmann::json(nullptr)
                                                                        : nlohmann::json(rec.parent)},
                         {"vertices", rec.vertices.size()},
                         {"edges", rec.edge_count},
                         {"theta", fraction_json(rec.theta)},
                         {"critical", rec.critical},
                         {"fallback", rec.used_fallback}});
    }
    nlohmann::json doc{{"modulus", fraction_json(r.modulus)}, {"eta", std::move(eta)}, {"trace", std::move(trace)}};
    if (!labels.empty()) doc["labels"] = labels;
    return doc;
}

std::string modulus_text(const MultiGraph& g, const std::vector<std::string>& labels,
                         const ModulusResult& r) {
    std::ostringstream out;
    out << "vertices = " << g.vertex_count() << ", edges = " << g.edge_count() << '\n';
    out << "modulus = " << to_fraction_string(r.modulus) << " (~" << decimal(r.modulus) << ")\n";
    out << "peels = " << r.trace.size() << '\n';
    out << "eta* histogram:\n";
    for (const auto& [value, count] : eta_histogram(r))
        out << "  " << to_fraction_string(value) << " x " << count << '\n';
    out << "edges:\n";
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        out << "  " << e << ": " << label_of(labels, g.edge(static_cast<EdgeId>(e)).a) << ' '
            << label_of(labels, g.edge(static_cast<EdgeId>(e)).b) << "  eta* = "
            << to_fraction_string(r.eta_star[e]) << "  rho* = " << to_fraction_string(r.rho_star[e]) << '\n';
    return out.str();
}

std::string modulus_csv(const MultiGraph& g, const std::vector<std::string>& labels,
                        const ModulusResult& r) {
    std::ostringstream out;
    out << "edge,a,b,eta_num,eta_den,rho_num,rho_den\n";
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(static_cast<EdgeId>(e));
        out << e << ',' << label_of(labels, ed.a) << ',' << label_of(labels, ed.b) << ','
            << boost::multiprecision::numerator(r.eta_star[e]) << ','
            << boost::multiprecision::denominator(r.eta_star[e]) << ','
            << boost::multiprecision::numerator(r.rho_star[e]) << ','
            << boost::multiprecision::denominator(r.rho_star[e]) << '\n';
    }
    return out.str();
}

const std::vector<std::string>& dot_palette() {
    // Tableau 10
    static const std::vector<std::string> palette{"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                                                  "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};
    return palette;
}

std::string modulus_dot(const MultiGraph& g, const std::vector<std::string>& labels,
                        const ModulusResult& r) {
    const auto hist = eta_histogram(r);
    std::map<Rational, std::size_t> bucket;
    for (std::size_t i = 0; i < hist.size(); ++i) bucket[hist[i].first] = i;
    const auto& palette = dot_palette();

    std::ostringstream out;
    out << "graph modulus {\n";
    out << "  // modulus = " << to_fraction_string(r.modulus) << '\n';
    for (std::size_t i = 0; i < hist.size(); ++i)
        out << "  // bucket " << i << ": eta* = " << to_fraction_string(hist[i].first) << " ("
            << hist[i].second << " edges) " << palette[i % palette.size()] << '\n';
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        out << "  " << v << " [label=\"" << label_of(labels, static_cast<VertexId>(v)) << "\"];\n";
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(static_cast<EdgeId>(e));
        const std::size_t b = bucket.at(r.eta_star[e]);
        out << "  " << ed.a << " -- " << ed.b << " [color=\"" << palette[b % palette.size()]
            << "\", label=\"" << to_fraction_string(r.eta_star[e]) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

Rational modulus_from_eta_json(const nlohmann::json& doc) {
    Rational energy(0);
    for (const auto& item : doc.at("eta")) {
        const Rational eta = fraction_from_json(item);
        energy += eta * eta;
    }
    return 1 / energy;
}

std::string verification_text(const oracle::VerificationReport& report) {
    std::ostringstream out;
    for (const auto& c : report.checks)
        out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    out << (report.all_passed() ? "all checks passed\n" : "some checks failed\n");
    return out.str();
}

}  // namespace stmod::report
