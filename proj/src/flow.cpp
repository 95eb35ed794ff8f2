#include "stmod/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "stmod/errors.hpp"

namespace stmod {

FlowNetwork::FlowNetwork(std::size_t node_count, NodeId source, NodeId sink)
    : node_count_(node_count), source_(source), sink_(sink) {
    if (source >= node_count || sink >= node_count)
        throw DomainError("source or sink out of range");
    if (source == sink) throw DomainError("source and sink must differ");
}

void FlowNetwork::check_endpoints(NodeId u, NodeId v) const {
    if (u >= node_count_ || v >= node_count_) throw DomainError("flow edge endpoint out of range");
    if (u == v) throw DomainError("flow edge is a self-loop");
}

std::size_t FlowNetwork::add_edge(NodeId u, NodeId v, Capacity capacity,
                                  std::optional<EdgeId> origin) {
    check_endpoints(u, v);
    if (capacity < 0) throw DomainError("negative capacity");
    // Keep 2 * (sum + 1) representable: residuals of an undirected edge reach 2c.
    constexpr Capacity limit = std::numeric_limits<Capacity>::max() / 4;
    if (capacity > limit - finite_total_) throw DomainError("capacities overflow 64-bit range");
    finite_total_ += capacity;
    edges_.push_back({u, v, capacity, false, origin});
    return edges_.size() - 1;
}

std::size_t FlowNetwork::add_infinite_edge(NodeId u, NodeId v, std::optional<EdgeId> origin) {
    check_endpoints(u, v);
    edges_.push_back({u, v, 0, true, origin});
    return edges_.size() - 1;
}

namespace {

// Arc 2i runs u->v and arc 2i+1 runs v->u for undirected edge i; both start
// with the edge capacity as residual, so pushing on one arc frees the other.
class PushRelabel {
public:
    explicit PushRelabel(const FlowNetwork& net)
        : n_(net.node_count()),
          source_(net.source()),
          sink_(net.sink()),
          head_(2 * net.edges().size()),
          residual_(2 * net.edges().size()),
          offsets_(n_ + 1, 0),
          excess_(n_, 0),
          label_(n_, 0),
          current_(n_, 0),
          count_(2 * n_ + 1, 0),
          buckets_(2 * n_ + 1) {
        const auto& edges = net.edges();
        for (const auto& e : edges) {
            ++offsets_[e.u + 1];
            ++offsets_[e.v + 1];
        }
        for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
        arcs_.resize(offsets_.back());
        std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const Capacity c = net.capacity_of(edges[i]);
            head_[2 * i] = edges[i].v;
            head_[2 * i + 1] = edges[i].u;
            residual_[2 * i] = c;
            residual_[2 * i + 1] = c;
            arcs_[fill[edges[i].u]++] = 2 * i;
            arcs_[fill[edges[i].v]++] = 2 * i + 1;
        }
    }

    void run() {
        for (std::size_t k = offsets_[source_]; k < offsets_[source_ + 1]; ++k) {
            const std::size_t a = arcs_[k];
            const Capacity c = residual_[a];
            if (c == 0) continue;
            residual_[a] = 0;
            residual_[a ^ 1] += c;
            excess_[head_[a]] += c;
            excess_[source_] -= c;
        }
        global_relabel();

        std::size_t relabels_since_global = 0;
        while (true) {
            while (top_ > 0 && buckets_[top_].empty()) --top_;
            if (buckets_[top_].empty()) break;
            const NodeId v = buckets_[top_].back();
            buckets_[top_].pop_back();
            if (!is_active(v) || label_[v] != top_) continue;
            relabels_since_global += discharge(v);
            if (relabels_since_global > n_) {
                global_relabel();
                relabels_since_global = 0;
            }
        }
    }

    Capacity flow_value() const { return excess_[sink_]; }

    std::vector<bool> residual_reachable_from_source() const {
        std::vector<bool> seen(n_, false);
        std::deque<NodeId> queue{source_};
        seen[source_] = true;
        while (!queue.empty()) {
            const NodeId v = queue.front();
            queue.pop_front();
            for (std::size_t k = offsets_[v]; k < offsets_[v + 1]; ++k) {
                const std::size_t a = arcs_[k];
                if (residual_[a] > 0 && !seen[head_[a]]) {
                    seen[head_[a]] = true;
                    queue.push_back(static_cast<NodeId>(head_[a]));
                }
            }
        }
        return seen;
    }

private:
    bool is_active(NodeId v) const {
        return v != source_ && v != sink_ && excess_[v] > 0 && label_[v] < 2 * n_;
    }

    void activate(NodeId v) {
        buckets_[label_[v]].push_back(v);
        top_ = std::max(top_, label_[v]);
    }

    void set_label(NodeId v, std::size_t l) {
        if (label_[v] < n_) --count_[label_[v]];
        label_[v] = l;
        if (l < n_) ++count_[l];
    }

    // Returns the number of relabels performed.
    std::size_t discharge(NodeId v) {
        std::size_t relabels = 0;
        while (excess_[v] > 0) {
            if (current_[v] == offsets_[v + 1]) {
                relabel(v);
                ++relabels;
                if (label_[v] >= 2 * n_) break;
                continue;
            }
            const std::size_t a = arcs_[current_[v]];
            const NodeId w = static_cast<NodeId>(head_[a]);
            if (residual_[a] > 0 && label_[v] == label_[w] + 1) {
                const Capacity delta = std::min(excess_[v], residual_[a]);
                residual_[a] -= delta;
                residual_[a ^ 1] += delta;
                const bool was_idle = excess_[w] == 0;
                excess_[v] -= delta;
                excess_[w] += delta;
                if (was_idle && is_active(w)) activate(w);
                if (excess_[v] == 0) break;
            }
            ++current_[v];
        }
        return relabels;
    }

    void relabel(NodeId v) {
        const std::size_t old = label_[v];
        std::size_t lowest = 2 * n_;
        for (std::size_t k = offsets_[v]; k < offsets_[v + 1]; ++k) {
            const std::size_t a = arcs_[k];
            if (residual_[a] > 0) lowest = std::min(lowest, label_[head_[a]] + 1);
        }
        set_label(v, lowest);
        current_[v] = offsets_[v];

        if (old < n_ && count_[old] == 0) {
            // Gap: nothing above `old` below n can reach the sink any more.
            for (std::size_t u = 0; u < n_; ++u) {
                if (u == source_ || u == sink_) continue;
                if (label_[u] > old && label_[u] < n_) {
                    set_label(static_cast<NodeId>(u), n_ + 1);
                    current_[u] = offsets_[u];
                    if (is_active(static_cast<NodeId>(u)) && u != v) activate(static_cast<NodeId>(u));
                }
            }
        }
        if (is_active(v)) top_ = std::max(top_, label_[v]);
    }

    // Exact labels: distance to the sink in the residual network, or n plus the
    // distance to the source for nodes cut off from the sink.
    void global_relabel() {
        constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
        std::vector<std::size_t> dist(n_, unset);
        auto bfs = [&](NodeId root, std::size_t base) {
            std::deque<NodeId> queue{root};
            dist[root] = base;
            while (!queue.empty()) {
                const NodeId w = queue.front();
                queue.pop_front();
                for (std::size_t k = offsets_[w]; k < offsets_[w + 1]; ++k) {
                    const std::size_t a = arcs_[k];
                    const NodeId u = static_cast<NodeId>(head_[a]);
                    // residual arc u -> w is the partner of w -> u
                    if (dist[u] == unset && residual_[a ^ 1] > 0 && u != source_ && u != sink_) {
                        dist[u] = dist[w] + 1;
                        queue.push_back(u);
                    }
                }
            }
        };
        bfs(sink_, 0);
        bfs(source_, n_);

        std::fill(count_.begin(), count_.end(), 0);
        for (auto& b : buckets_) b.clear();
        top_ = 0;
        for (std::size_t v = 0; v < n_; ++v) {
            label_[v] = dist[v] == unset ? 2 * n_ : dist[v];
            if (v == source_) label_[v] = n_;
            if (v == sink_) label_[v] = 0;
            if (label_[v] < n_) ++count_[label_[v]];
            current_[v] = offsets_[v];
            if (is_active(static_cast<NodeId>(v))) activate(static_cast<NodeId>(v));
        }
    }

    std::size_t n_;
    NodeId source_;
    NodeId sink_;
    std::vector<std::size_t> head_;
    std::vector<Capacity> residual_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> arcs_;
    std::vector<Capacity> excess_;
    std::vector<std::size_t> label_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> count_;
    std::vector<std::vector<NodeId>> buckets_;
    std::size_t top_ = 0;
};

}  // namespace

CutResult min_cut(const FlowNetwork& net) {
    PushRelabel solver(net);
    solver.run();

    CutResult out;
    out.source_side = solver.residual_reachable_from_source();
    if (out.source_side[net.sink()])
        throw InvariantViolation("sink reachable in residual network after max-flow");

    const auto& edges = net.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (out.source_side[edges[i].u] == out.source_side[edges[i].v]) continue;
        if (edges[i].infinite) throw DomainError("no finite source/sink cut exists");
        out.cut_edges.push_back(i);
        out.value += edges[i].capacity;
    }
    if (out.value != solver.flow_value())
        throw InvariantViolation("cut capacity " + std::to_string(out.value) +
                                 " differs from flow value " + std::to_string(solver.flow_value()));
    return out;
}

}  // namespace stmod
