#pragma once

#include "hacs/instance.hpp"
#include "hacs/tour.hpp"

namespace hacs {

/// GTSP nearest neighbor: a greedy tour from every start node, each step
/// moving to the closest node of a not yet visited cluster (ties to the lowest
/// id). Returns the shortest of these tours, earliest start on ties.
Tour nearest_neighbor(const GtspInstance& instance);

/// Greedy tour from a single start node.
Tour nearest_neighbor_from(const GtspInstance& instance, NodeId start);

struct BruteForceLimits {
    int max_clusters = 8;
    /// Bound on prod |C_i| * (m-1)!/2, the number of distinct tours.
    double max_tours = 2e9;
};

/// Number of distinct tours up to rotation and reversal.
double distinct_tour_count(const GtspInstance& instance);

/// Exact optimum: enumerates cluster orders with the first cluster fixed and
/// one of each reversal pair, solving node choices per order with the
/// layered-graph shortest path. Throws BudgetExceededError when the instance
/// exceeds `limits`; it never falls back to an approximation.
Tour brute_force_optimum(const GtspInstance& instance, const BruteForceLimits& limits = {});

}  // namespace hacs
