#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "hacs/instance.hpp"
#include "hacs/tour.hpp"

namespace hacs {

/// Multilayer graph for a fixed cyclic cluster order: layers are the clusters
/// in visiting order followed by a copy of the first one. Every arc between
/// consecutive layers weighs the instance distance of its endpoints.
class LayeredGraph {
public:
    LayeredGraph(const GtspInstance& instance, std::span<const ClusterId> order);

    /// m + 1 layers; the last is a copy of the first.
    int layer_count() const noexcept { return static_cast<int>(order_.size()) + 1; }
    std::span<const NodeId> layer(int i) const noexcept;

    Weight arc_weight(NodeId u, NodeId v) const noexcept { return instance_->dist(u, v); }

    /// Shortest source-to-copy path over all sources in the first layer,
    /// returned as the corresponding tour. Equal-weight predecessors and
    /// sources resolve to the lowest node id.
    Tour shortest_cycle() const;

private:
    const GtspInstance* instance_;
    std::vector<ClusterId> order_;
};

/// Best tour among all tours that keep the cyclic cluster order of `tour`
/// and pick any node within each cluster. The first layer is the smallest
/// cluster of the tour. The result starts at the same cluster as the input;
/// if no strictly better tour exists the input is returned unchanged.
/// Throws DomainError when m < 3.
Tour co_optimize(const GtspInstance& instance, const Tour& tour);

/// Best-improvement 3-opt (2-opt moves included) on the TSP induced by the
/// nodes of `tour`. Node choices are never changed. Returns the input for m < 4.
Tour three_opt(const GtspInstance& instance, const Tour& tour);

/// One pass of three_opt followed by one pass of co_optimize.
Tour improve(const GtspInstance& instance, const Tour& tour);

enum class LocalSearchMode { composite, three_opt_only, none };

std::string_view to_string(LocalSearchMode mode) noexcept;
/// Accepts "composite", "3opt"/"three_opt" and "none". Throws UsageError otherwise.
LocalSearchMode parse_local_search_mode(std::string_view text);

Tour apply_local_search(const GtspInstance& instance, const Tour& tour, LocalSearchMode mode);

}  // namespace hacs
