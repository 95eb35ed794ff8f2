#include "stmod/io.hpp"

#include <sstream>
#include <unordered_map>

#include "stmod/errors.hpp"

namespace stmod {

EdgeList parse_edge_list(std::istream& in) {
    EdgeList out;
    std::unordered_map<std::string, VertexId> ids;
    std::vector<Edge> edges;

    auto vertex_of = [&](const std::string& label) {
        auto [it, inserted] = ids.try_emplace(label, static_cast<VertexId>(out.labels.size()));
        if (inserted) out.labels.push_back(label);
        return it->second;
    };

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::vector<std::string> words;
        for (std::string w; tokens >> w;) words.push_back(std::move(w));
        if (words.empty()) continue;
        if (words.size() != 2)
            throw ParseError(lineno, "expected two vertex labels, found " +
                                         std::to_string(words.size()) + " tokens");
        const VertexId a = vertex_of(words[0]);
        const VertexId b = vertex_of(words[1]);
        if (a == b) {
            ++out.self_loops_dropped;
            out.warnings.push_back("line " + std::to_string(lineno) + ": self-loop on '" +
                                   words[0] + "' dropped");
            continue;
        }
        edges.push_back({a, b});
    }
    out.graph = MultiGraph(out.labels.size(), std::move(edges));
    return out;
}

EdgeList parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

std::string format_edge_list(const MultiGraph& g, const std::vector<std::string>& labels) {
    std::ostringstream out;
    auto name = [&](VertexId v) { return labels.empty() ? std::to_string(v) : labels.at(v); };
    for (const Edge& e : g.edges()) out << name(e.a) << ' ' << name(e.b) << '\n';
    return out.str();
}

nlohmann::json to_json(const MultiGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.a, e.b});
    return {{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

MultiGraph graph_from_json(const nlohmann::json& j) {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<VertexId>(), e.at(1).get<VertexId>()});
    return MultiGraph(j.at("vertices").get<std::size_t>(), std::move(edges));
}

}  // namespace stmod
