#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "stmod/graph.hpp"

namespace stmod {

using Capacity = std::int64_t;
using NodeId = std::uint32_t;

struct FlowEdge {
    NodeId u;
    NodeId v;
    Capacity capacity;             // ignored when infinite
    bool infinite = false;
    std::optional<EdgeId> origin;  // original graph edge this flow edge stands for
};

/// Undirected capacitated network with a designated source and sink.
///
/// Infinite edges are realised as (sum of finite capacities) + 1 when solved,
/// which exceeds every finite cut. Finite capacities are rejected once twice
/// their running sum could overflow.
class FlowNetwork {
public:
    FlowNetwork(std::size_t node_count, NodeId source, NodeId sink);

    std::size_t add_edge(NodeId u, NodeId v, Capacity capacity,
                         std::optional<EdgeId> origin = std::nullopt);
    std::size_t add_infinite_edge(NodeId u, NodeId v, std::optional<EdgeId> origin = std::nullopt);

    std::size_t node_count() const noexcept { return node_count_; }
    NodeId source() const noexcept { return source_; }
    NodeId sink() const noexcept { return sink_; }
    const std::vector<FlowEdge>& edges() const noexcept { return edges_; }

    Capacity finite_total() const noexcept { return finite_total_; }
    Capacity infinite_capacity() const noexcept { return finite_total_ + 1; }
    Capacity capacity_of(const FlowEdge& e) const {
        return e.infinite ? infinite_capacity() : e.capacity;
    }

private:
    void check_endpoints(NodeId u, NodeId v) const;

    std::size_t node_count_;
    NodeId source_;
    NodeId sink_;
    std::vector<FlowEdge> edges_;
    Capacity finite_total_ = 0;
};

struct CutResult {
    Capacity value = 0;
    std::vector<bool> source_side;       // indexed by node; includes the source
    std::vector<std::size_t> cut_edges;  // flow-edge ids crossing the partition
};

/// Minimum source/sink cut by highest-label preflow-push (gap relabelling and
/// periodic global relabelling). The source side is the set of nodes reachable
/// from the source in the final residual network, i.e. the inclusion-minimal
/// minimum cut. Throws DomainError when every source/sink cut is infinite.
CutResult min_cut(const FlowNetwork& net);

}  // namespace stmod
