#include <algorithm>
#include <limits>

#include "hacs/local_search.hpp"

namespace hacs {

LayeredGraph::LayeredGraph(const GtspInstance& instance, std::span<const ClusterId> order)
    : instance_(&instance), order_(order.begin(), order.end()) {
    if (order_.size() < 2) throw DomainError("a layered graph needs at least two clusters");
}

std::span<const NodeId> LayeredGraph::layer(int i) const noexcept {
    const auto m = order_.size();
    return instance_->cluster(order_[static_cast<std::size_t>(i) % m]);
}

Tour LayeredGraph::shortest_cycle() const {
    constexpr Weight inf = std::numeric_limits<Weight>::max();
    const int m = static_cast<int>(order_.size());

    std::vector<std::span<const NodeId>> layers;
    layers.reserve(static_cast<std::size_t>(m));
    std::vector<std::size_t> offset(static_cast<std::size_t>(m) + 1, 0);
    for (int i = 0; i < m; ++i) {
        layers.push_back(layer(i));
        offset[static_cast<std::size_t>(i) + 1] = offset[static_cast<std::size_t>(i)] + layers.back().size();
    }

    // cost/pred are flat over all layer nodes of layers 1..m-1.
    std::vector<Weight> cost(offset.back(), inf);
    std::vector<int> pred(offset.back(), -1);

    Tour best;
    best.weight = inf;

    for (NodeId source : layers[0]) {
        const auto first = layers[1];
        for (std::size_t j = 0; j < first.size(); ++j) {
            cost[offset[1] + j] = instance_->dist(source, first[j]);
            pred[offset[1] + j] = -1;
        }
        for (int i = 2; i < m; ++i) {
            const auto prev = layers[static_cast<std::size_t>(i) - 1];
            const auto cur = layers[static_cast<std::size_t>(i)];
            const std::size_t prev_off = offset[static_cast<std::size_t>(i) - 1];
            const std::size_t cur_off = offset[static_cast<std::size_t>(i)];
            for (std::size_t j = 0; j < cur.size(); ++j) {
                Weight best_cost = inf;
                int best_pred = -1;
                for (std::size_t p = 0; p < prev.size(); ++p) {
                    const Weight c = cost[prev_off + p] + instance_->dist(prev[p], cur[j]);
                    if (c < best_cost) {
                        best_cost = c;
                        best_pred = static_cast<int>(p);
                    }
                }
                cost[cur_off + j] = best_cost;
                pred[cur_off + j] = best_pred;
            }
        }

        // Close the cycle into the copy of the source.
        const auto last = layers[static_cast<std::size_t>(m) - 1];
        const std::size_t last_off = offset[static_cast<std::size_t>(m) - 1];
        Weight total = inf;
        int tail = -1;
        for (std::size_t p = 0; p < last.size(); ++p) {
            const Weight c = cost[last_off + p] + instance_->dist(last[p], source);
            if (c < total) {
                total = c;
                tail = static_cast<int>(p);
            }
        }

        if (total < best.weight) {
            best.weight = total;
            best.nodes.assign(static_cast<std::size_t>(m), source);
            int idx = tail;
            for (int i = m - 1; i >= 1; --i) {
                best.nodes[static_cast<std::size_t>(i)] = layers[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx)];
                idx = pred[offset[static_cast<std::size_t>(i)] + static_cast<std::size_t>(idx)];
            }
        }
    }
    return best;
}

Tour co_optimize(const GtspInstance& instance, const Tour& tour) {
    const int m = static_cast<int>(tour.nodes.size());
    if (m < 3) {
        throw DomainError("cluster optimization needs at least 3 clusters, tour has " + std::to_string(m));
    }
    check_feasible(instance, tour.nodes);

    // Start the layered graph at the smallest cluster.
    int start = 0;
    for (int i = 1; i < m; ++i) {
        const auto size_i = instance.cluster(instance.cluster_of(tour.nodes[static_cast<std::size_t>(i)])).size();
        const auto size_s = instance.cluster(instance.cluster_of(tour.nodes[static_cast<std::size_t>(start)])).size();
        if (size_i < size_s) start = i;
    }
    std::vector<ClusterId> order(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        order[static_cast<std::size_t>(k)] =
            instance.cluster_of(tour.nodes[static_cast<std::size_t>((start + k) % m)]);
    }

    Tour rotated = LayeredGraph(instance, order).shortest_cycle();
    if (rotated.weight >= tour.weight) return tour;

    Tour out;
    out.weight = rotated.weight;
    out.nodes.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        out.nodes[static_cast<std::size_t>(i)] = rotated.nodes[static_cast<std::size_t>((i - start + m) % m)];
    }
    return out;
}

}  // namespace hacs
