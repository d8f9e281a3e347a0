#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hacs/types.hpp"

namespace hacs {

/// A symmetric GTSP instance: n nodes partitioned into m non-empty clusters,
/// with distances defined between nodes of different clusters.
///
/// Immutable after construction and safe to share between concurrent runs.
/// Distances live in a dense n x n matrix; intra-cluster entries hold
/// kForbiddenDistance and must never be read (asserted in debug builds).
class GtspInstance {
public:
    /// `clusters` must partition {0..n-1} where n = sqrt(matrix.size()).
    /// `matrix` is row-major n x n; intra-cluster entries are ignored.
    /// Throws ValidationError on any broken invariant.
    GtspInstance(std::string name, std::vector<std::vector<NodeId>> clusters,
                 std::vector<Distance> matrix);

    const std::string& name() const noexcept { return name_; }
    int node_count() const noexcept { return n_; }
    int cluster_count() const noexcept { return static_cast<int>(clusters_.size()); }

    /// Nodes of cluster c in ascending id order.
    std::span<const NodeId> cluster(ClusterId c) const noexcept {
        return clusters_[static_cast<std::size_t>(c)];
    }
    ClusterId cluster_of(NodeId v) const noexcept {
        return cluster_of_[static_cast<std::size_t>(v)];
    }

    Distance dist(NodeId u, NodeId v) const noexcept {
        const Distance d = matrix_[index(u, v)];
        assert(d != kForbiddenDistance && "read of an intra-cluster distance");
        return d;
    }

    /// Size of the largest cluster (s).
    int largest_cluster_size() const noexcept { return largest_; }
    /// Size of the smallest cluster (gamma).
    int smallest_cluster_size() const noexcept { return smallest_; }

    /// Row-major matrix with kForbiddenDistance on intra-cluster entries.
    std::span<const Distance> matrix() const noexcept { return matrix_; }

private:
    std::size_t index(NodeId u, NodeId v) const noexcept {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(v);
    }

    std::string name_;
    int n_ = 0;
    std::vector<std::vector<NodeId>> clusters_;
    std::vector<ClusterId> cluster_of_;
    std::vector<Distance> matrix_;
    int largest_ = 0;
    int smallest_ = 0;
};

}  // namespace hacs
