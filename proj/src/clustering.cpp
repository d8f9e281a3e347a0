#include "hacs/clustering.hpp"

#include <cctype>
#include <limits>

namespace hacs {

std::string clustered_name(const std::string& tsp_name, int clusters, int nodes) {
    std::string base = tsp_name;
    while (!base.empty() && std::isdigit(static_cast<unsigned char>(base.back()))) base.pop_back();
    if (base.empty()) base = "tsp";
    return std::to_string(clusters) + base + std::to_string(nodes);
}

GtspInstance cluster_instance(const TspData& tsp) {
    const int n = tsp.dimension;
    if (!tsp.has_coordinates()) {
        throw DomainError("clustering needs node coordinates; " + tsp.name + " has an explicit matrix");
    }
    if (n < 10) {
        throw DomainError("clustering needs at least 10 nodes (m = ceil(n/5) >= 2), got " + std::to_string(n));
    }
    const int m = (n + 4) / 5;
    const std::vector<Distance> matrix = tsp.distance_matrix();
    const auto d = [&](int u, int v) {
        return matrix[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
    };

    std::vector<int> centers;
    centers.reserve(static_cast<std::size_t>(m));
    {
        long long best_total = -1;
        int first = 0;
        for (int u = 0; u < n; ++u) {
            long long total = 0;
            for (int v = 0; v < n; ++v) total += d(u, v);
            if (total > best_total) {
                best_total = total;
                first = u;
            }
        }
        centers.push_back(first);
    }

    std::vector<Distance> to_centers(static_cast<std::size_t>(n), std::numeric_limits<Distance>::max());
    std::vector<int> center_index(static_cast<std::size_t>(n), -1);
    center_index[static_cast<std::size_t>(centers[0])] = 0;
    while (static_cast<int>(centers.size()) < m) {
        const int last = centers.back();
        int next = -1;
        Distance farthest = -1;
        for (int u = 0; u < n; ++u) {
            to_centers[static_cast<std::size_t>(u)] = std::min(to_centers[static_cast<std::size_t>(u)], d(u, last));
            if (center_index[static_cast<std::size_t>(u)] >= 0) continue;
            if (to_centers[static_cast<std::size_t>(u)] > farthest) {
                farthest = to_centers[static_cast<std::size_t>(u)];
                next = u;
            }
        }
        center_index[static_cast<std::size_t>(next)] = static_cast<int>(centers.size());
        centers.push_back(next);
    }

    std::vector<std::vector<NodeId>> clusters(static_cast<std::size_t>(m));
    for (int u = 0; u < n; ++u) {
        int owner = center_index[static_cast<std::size_t>(u)];
        if (owner < 0) {
            Distance best = std::numeric_limits<Distance>::max();
            for (int c = 0; c < m; ++c) {
                const Distance du = d(u, centers[static_cast<std::size_t>(c)]);
                if (du < best) {
                    best = du;
                    owner = c;
                }
            }
        }
        clusters[static_cast<std::size_t>(owner)].push_back(static_cast<NodeId>(u));
    }

    return GtspInstance(clustered_name(tsp.name, m, n), std::move(clusters), matrix);
}

}  // namespace hacs
