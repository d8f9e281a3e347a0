#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "hacs/clustering.hpp"

using namespace hacs;

namespace {

TspData random_points(std::mt19937_64& gen, int n, const std::string& name) {
    TspData tsp;
    tsp.name = name;
    tsp.dimension = n;
    std::uniform_int_distribution<int> coord(0, 999);
    for (int i = 0; i < n; ++i) tsp.coords.push_back({static_cast<double>(coord(gen)), static_cast<double>(coord(gen))});
    return tsp;
}

// Straightforward restatement of the clustering rule.
std::vector<std::vector<NodeId>> reference_clusters(const TspData& tsp) {
    const int n = tsp.dimension;
    const int m = (n + 4) / 5;
    std::vector<int> centers;
    long long best = -1;
    for (int u = 0; u < n; ++u) {
        long long s = 0;
        for (int v = 0; v < n; ++v) s += tsp.distance(u, v);
        if (s > best) {
            best = s;
            if (centers.empty()) centers.push_back(u);
            else centers[0] = u;
        }
    }
    while (static_cast<int>(centers.size()) < m) {
        int pick = -1;
        long long far = -1;
        for (int u = 0; u < n; ++u) {
            if (std::find(centers.begin(), centers.end(), u) != centers.end()) continue;
            long long near = std::numeric_limits<long long>::max();
            for (int c : centers) near = std::min<long long>(near, tsp.distance(u, c));
            if (near > far) {
                far = near;
                pick = u;
            }
        }
        centers.push_back(pick);
    }
    std::vector<std::vector<NodeId>> out(static_cast<std::size_t>(m));
    for (int u = 0; u < n; ++u) {
        const auto it = std::find(centers.begin(), centers.end(), u);
        if (it != centers.end()) {
            out[static_cast<std::size_t>(it - centers.begin())].push_back(u);
            continue;
        }
        int owner = 0;
        for (int c = 1; c < m; ++c)
            if (tsp.distance(u, centers[static_cast<std::size_t>(c)]) < tsp.distance(u, centers[static_cast<std::size_t>(owner)])) owner = c;
        out[static_cast<std::size_t>(owner)].push_back(u);
    }
    return out;
}

}  // namespace

TEST_CASE("cluster count is ceil(n/5) and names follow the benchmark convention") {
    std::mt19937_64 gen(3);
    const GtspInstance a = cluster_instance(random_points(gen, 198, "d198"));
    CHECK(a.cluster_count() == 40);
    CHECK(a.name() == "40d198");
    const GtspInstance b = cluster_instance(random_points(gen, 1084, "vm1084"));
    CHECK(b.cluster_count() == 217);
    CHECK(b.name() == "217vm1084");
    CHECK(clustered_name("kroA200", 40, 200) == "40kroA200");
    CHECK(clustered_name("12345", 3, 11) == "3tsp11");
}

TEST_CASE("two separated groups of five form the two clusters") {
    TspData tsp;
    tsp.name = "toy10";
    tsp.dimension = 10;
    for (int i = 0; i < 5; ++i) tsp.coords.push_back({static_cast<double>(i), static_cast<double>(i % 2)});
    for (int i = 0; i < 5; ++i) tsp.coords.push_back({1000.0 + i, 500.0 + (i % 3)});
    const GtspInstance inst = cluster_instance(tsp);
    REQUIRE(inst.cluster_count() == 2);
    std::set<std::vector<NodeId>> got;
    for (ClusterId c = 0; c < 2; ++c) got.insert({inst.cluster(c).begin(), inst.cluster(c).end()});
    CHECK(got == std::set<std::vector<NodeId>>{{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}});
    // Exhaustive nearest-center check: every node sits with the center it is closest to.
    CHECK(reference_clusters(tsp).size() == 2);
}

TEST_CASE("clustering matches the reference rule on random inputs") {
    std::mt19937_64 gen(17);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 10 + trial * 7;
        const TspData tsp = random_points(gen, n, "r" + std::to_string(n));
        const GtspInstance inst = cluster_instance(tsp);
        const auto expected = reference_clusters(tsp);
        REQUIRE(inst.cluster_count() == static_cast<int>(expected.size()));
        for (ClusterId c = 0; c < inst.cluster_count(); ++c) {
            CHECK(std::vector<NodeId>(inst.cluster(c).begin(), inst.cluster(c).end()) == expected[static_cast<std::size_t>(c)]);
        }
    }
}

TEST_CASE("clustering preconditions") {
    std::mt19937_64 gen(1);
    CHECK_THROWS_AS(cluster_instance(random_points(gen, 9, "tiny9")), DomainError);
    TspData expl;
    expl.name = "e";
    expl.dimension = 12;
    expl.edge_weight_type = EdgeWeightType::explicit_matrix;
    expl.explicit_matrix.assign(144, 1);
    CHECK_THROWS_AS(cluster_instance(expl), DomainError);
}
