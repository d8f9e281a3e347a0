#include <limits>

#include "hacs/heuristics.hpp"

namespace hacs {

namespace {

// Builds the greedy tour from `start`, abandoning it once its partial weight
// reaches `cutoff`. Returns false when abandoned.
bool greedy_from(const GtspInstance& instance, NodeId start, Weight cutoff, std::vector<char>& visited,
                 Tour& out) {
    const int n = instance.node_count();
    const int m = instance.cluster_count();
    std::fill(visited.begin(), visited.end(), 0);
    out.nodes.clear();
    out.nodes.push_back(start);
    visited[static_cast<std::size_t>(instance.cluster_of(start))] = 1;
    Weight partial = 0;
    NodeId current = start;
    for (int step = 1; step < m; ++step) {
        NodeId next = -1;
        Distance best = std::numeric_limits<Distance>::max();
        for (NodeId u = 0; u < n; ++u) {
            if (visited[static_cast<std::size_t>(instance.cluster_of(u))]) continue;
            const Distance du = instance.dist(current, u);
            if (du < best) {
                best = du;
                next = u;
            }
        }
        partial += best;
        if (partial >= cutoff) return false;
        visited[static_cast<std::size_t>(instance.cluster_of(next))] = 1;
        out.nodes.push_back(next);
        current = next;
    }
    partial += instance.dist(current, start);
    if (partial >= cutoff) return false;
    out.weight = partial;
    return true;
}

}  // namespace

Tour nearest_neighbor_from(const GtspInstance& instance, NodeId start) {
    std::vector<char> visited(static_cast<std::size_t>(instance.cluster_count()), 0);
    Tour tour;
    greedy_from(instance, start, std::numeric_limits<Weight>::max(), visited, tour);
    return tour;
}

Tour nearest_neighbor(const GtspInstance& instance) {
    std::vector<char> visited(static_cast<std::size_t>(instance.cluster_count()), 0);
    Tour best;
    best.weight = std::numeric_limits<Weight>::max();
    Tour candidate;
    for (NodeId v = 0; v < instance.node_count(); ++v) {
        if (greedy_from(instance, v, best.weight, visited, candidate)) best = candidate;
    }
    return best;
}

}  // namespace hacs
