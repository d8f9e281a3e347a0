#include "hacs/instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hacs {

GtspInstance::GtspInstance(std::string name, std::vector<std::vector<NodeId>> clusters,
                           std::vector<Distance> matrix)
    : name_(std::move(name)), clusters_(std::move(clusters)), matrix_(std::move(matrix)) {
    const auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(matrix_.size()))));
    if (side * side != matrix_.size() || side == 0) {
        throw ValidationError("distance matrix is not square");
    }
    if (side > static_cast<std::size_t>(std::numeric_limits<NodeId>::max())) {
        throw ValidationError("too many nodes");
    }
    n_ = static_cast<int>(side);

    if (clusters_.size() < 2) {
        throw ValidationError("an instance needs at least 2 clusters, got " +
                              std::to_string(clusters_.size()));
    }

    cluster_of_.assign(side, -1);
    for (std::size_t c = 0; c < clusters_.size(); ++c) {
        auto& members = clusters_[c];
        if (members.empty()) {
            throw ValidationError("cluster " + std::to_string(c + 1) + " is empty");
        }
        std::sort(members.begin(), members.end());
        for (NodeId v : members) {
            if (v < 0 || v >= n_) {
                throw ValidationError("node " + std::to_string(v + 1) + " in cluster " +
                                      std::to_string(c + 1) + " is out of range 1.." +
                                      std::to_string(n_));
            }
            auto& slot = cluster_of_[static_cast<std::size_t>(v)];
            if (slot != -1) {
                throw ValidationError("node " + std::to_string(v + 1) +
                                      " is assigned to clusters " + std::to_string(slot + 1) +
                                      " and " + std::to_string(c + 1));
            }
            slot = static_cast<ClusterId>(c);
        }
    }
    for (NodeId v = 0; v < n_; ++v) {
        if (cluster_of_[static_cast<std::size_t>(v)] == -1) {
            throw ValidationError("node " + std::to_string(v + 1) + " is not assigned to any cluster");
        }
    }

    for (NodeId u = 0; u < n_; ++u) {
        for (NodeId v = 0; v < n_; ++v) {
            Distance& d = matrix_[index(u, v)];
            if (cluster_of_[static_cast<std::size_t>(u)] == cluster_of_[static_cast<std::size_t>(v)]) {
                d = kForbiddenDistance;
                continue;
            }
            if (d < 0) {
                throw ValidationError("negative distance between nodes " + std::to_string(u + 1) +
                                      " and " + std::to_string(v + 1));
            }
            if (v < u && d != matrix_[index(v, u)]) {
                throw ValidationError("asymmetric distance between nodes " + std::to_string(v + 1) +
                                      " and " + std::to_string(u + 1));
            }
        }
    }

    largest_ = 0;
    smallest_ = n_;
    for (const auto& members : clusters_) {
        largest_ = std::max(largest_, static_cast<int>(members.size()));
        smallest_ = std::min(smallest_, static_cast<int>(members.size()));
    }
}

}  // namespace hacs
