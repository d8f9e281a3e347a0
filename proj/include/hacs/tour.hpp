#pragma once

#include <span>
#include <string>
#include <vector>

#include "hacs/instance.hpp"

namespace hacs {

/// A closed tour visiting one node of every cluster. `weight` caches the
/// cycle weight and must be kept in sync by whoever edits `nodes`.
struct Tour {
    std::vector<NodeId> nodes;
    Weight weight = 0;

    friend bool operator==(const Tour&, const Tour&) = default;
};

/// Throws FeasibilityError unless `nodes` holds exactly one node of every cluster.
void check_feasible(const GtspInstance& instance, std::span<const NodeId> nodes);

bool is_feasible(const GtspInstance& instance, std::span<const NodeId> nodes) noexcept;

/// Cycle weight including the closing edge. Throws FeasibilityError for
/// sequences that are not feasible tours.
Weight tour_weight(const GtspInstance& instance, std::span<const NodeId> nodes);

/// Same as tour_weight without the feasibility check.
Weight cycle_weight(const GtspInstance& instance, std::span<const NodeId> nodes) noexcept;

/// Builds a Tour after checking feasibility.
Tour make_tour(const GtspInstance& instance, std::vector<NodeId> nodes);

/// 100 * (w - best) / best. Negative values mean `w` beats the reference.
double relative_error(Weight w, Weight best);

/// Rotation starting at the lowest node id, oriented so that the second node
/// id is smaller than the last one.
std::vector<NodeId> canonical_order(std::span<const NodeId> nodes);

/// Space-separated 1-based ids of the canonical order.
std::string format_tour(std::span<const NodeId> nodes);

/// Cluster indices in visiting order.
std::vector<ClusterId> cluster_sequence(const GtspInstance& instance, std::span<const NodeId> nodes);

}  // namespace hacs
