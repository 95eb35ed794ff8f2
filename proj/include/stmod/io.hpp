#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "stmod/graph.hpp"

namespace stmod {

/// A parsed edge list: the normalized graph plus the original vertex labels.
struct EdgeList {
    MultiGraph graph;
    std::vector<std::string> labels;  // dense vertex id -> label as written
    std::size_t self_loops_dropped = 0;
    std::vector<std::string> warnings;
};

/// Reads "a b" lines; '#' starts a comment, blank lines are skipped.
/// Vertices are numbered in order of first appearance, self-loops are dropped
/// with a warning and repeated lines become parallel edges.
/// Throws ParseError when a data line does not hold exactly two tokens.
EdgeList parse_edge_list(std::istream& in);
EdgeList parse_edge_list(std::string_view text);

/// One "a b" line per edge in id order, using labels when given.
std::string format_edge_list(const MultiGraph& g, const std::vector<std::string>& labels = {});

nlohmann::json to_json(const MultiGraph& g);
MultiGraph graph_from_json(const nlohmann::json& j);

}  // namespace stmod
