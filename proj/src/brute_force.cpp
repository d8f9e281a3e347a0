#include <algorithm>
#include <limits>
#include <numeric>

#include "hacs/heuristics.hpp"
#include "hacs/local_search.hpp"

namespace hacs {

double distinct_tour_count(const GtspInstance& instance) {
    const int m = instance.cluster_count();
    double count = 1.0;
    for (ClusterId c = 0; c < m; ++c) count *= static_cast<double>(instance.cluster(c).size());
    double orders = 1.0;
    for (int k = 2; k < m; ++k) orders *= k;
    if (m >= 3) orders /= 2.0;
    return count * orders;
}

Tour brute_force_optimum(const GtspInstance& instance, const BruteForceLimits& limits) {
    const int m = instance.cluster_count();
    if (m > limits.max_clusters) {
        throw BudgetExceededError("exhaustive search refused: " + std::to_string(m) + " clusters exceed the limit of " +
                                  std::to_string(limits.max_clusters));
    }
    const double tours = distinct_tour_count(instance);
    if (tours > limits.max_tours) {
        throw BudgetExceededError("exhaustive search refused: " + std::to_string(tours) +
                                  " distinct tours exceed the budget of " + std::to_string(limits.max_tours));
    }

    // Cluster 0 stays first; the rest are permuted. An order and its reversal
    // describe the same cycles, so only orders with rest.front() < rest.back() run.
    std::vector<ClusterId> rest(static_cast<std::size_t>(m) - 1);
    std::iota(rest.begin(), rest.end(), 1);
    std::vector<ClusterId> order(static_cast<std::size_t>(m));
    order[0] = 0;

    Tour best;
    best.weight = std::numeric_limits<Weight>::max();
    do {
        if (rest.size() >= 2 && rest.front() > rest.back()) continue;
        std::copy(rest.begin(), rest.end(), order.begin() + 1);
        Tour candidate = LayeredGraph(instance, order).shortest_cycle();
        if (candidate.weight < best.weight) best = std::move(candidate);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return best;
}

}  // namespace hacs
