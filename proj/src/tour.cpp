#include "hacs/tour.hpp"

#include <algorithm>
#include <sstream>

namespace hacs {

void check_feasible(const GtspInstance& instance, std::span<const NodeId> nodes) {
    const int m = instance.cluster_count();
    if (static_cast<int>(nodes.size()) != m) {
        throw FeasibilityError("tour has " + std::to_string(nodes.size()) + " nodes, expected one per cluster (" +
                               std::to_string(m) + ")");
    }
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    for (NodeId v : nodes) {
        if (v < 0 || v >= instance.node_count()) {
            throw FeasibilityError("tour node " + std::to_string(v + 1) + " does not exist");
        }
        auto& flag = used[static_cast<std::size_t>(instance.cluster_of(v))];
        if (flag) {
            throw FeasibilityError("cluster " + std::to_string(instance.cluster_of(v) + 1) +
                                   " is visited more than once");
        }
        flag = 1;
    }
}

bool is_feasible(const GtspInstance& instance, std::span<const NodeId> nodes) noexcept {
    try {
        check_feasible(instance, nodes);
        return true;
    } catch (const FeasibilityError&) {
        return false;
    }
}

Weight cycle_weight(const GtspInstance& instance, std::span<const NodeId> nodes) noexcept {
    if (nodes.size() < 2) return 0;
    Weight total = instance.dist(nodes.back(), nodes.front());
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) total += instance.dist(nodes[i], nodes[i + 1]);
    return total;
}

Weight tour_weight(const GtspInstance& instance, std::span<const NodeId> nodes) {
    check_feasible(instance, nodes);
    return cycle_weight(instance, nodes);
}

Tour make_tour(const GtspInstance& instance, std::vector<NodeId> nodes) {
    const Weight w = tour_weight(instance, nodes);
    return Tour{std::move(nodes), w};
}

double relative_error(Weight w, Weight best) {
    if (best <= 0) throw DomainError("reference weight must be positive, got " + std::to_string(best));
    if (w == best) return 0.0;
    return 100.0 * static_cast<double>(w - best) / static_cast<double>(best);
}

std::vector<NodeId> canonical_order(std::span<const NodeId> nodes) {
    std::vector<NodeId> out(nodes.begin(), nodes.end());
    if (out.size() < 2) return out;
    std::rotate(out.begin(), std::min_element(out.begin(), out.end()), out.end());
    if (out.size() > 2 && out[1] > out.back()) std::reverse(out.begin() + 1, out.end());
    return out;
}

std::string format_tour(std::span<const NodeId> nodes) {
    std::ostringstream out;
    bool first = true;
    for (NodeId v : canonical_order(nodes)) {
        if (!first) out << ' ';
        out << v + 1;
        first = false;
    }
    return out.str();
}

std::vector<ClusterId> cluster_sequence(const GtspInstance& instance, std::span<const NodeId> nodes) {
    std::vector<ClusterId> out;
    out.reserve(nodes.size());
    for (NodeId v : nodes) out.push_back(instance.cluster_of(v));
    return out;
}

}  // namespace hacs
