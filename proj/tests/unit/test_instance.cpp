#include <random>

#include "doctest.h"
#include "hacs/instance.hpp"
#include "oracles.hpp"

using namespace hacs;

namespace {

std::vector<Distance> full(int n, Distance d) {
    std::vector<Distance> m(static_cast<std::size_t>(n * n), d);
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 0;
    return m;
}

std::string message_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const ValidationError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("instance accessors") {
    const GtspInstance inst("toy", {{2, 0}, {1}, {3, 4, 5}}, full(6, 7));
    CHECK(inst.node_count() == 6);
    CHECK(inst.cluster_count() == 3);
    CHECK(inst.cluster(0)[0] == 0);  // sorted
    CHECK(inst.cluster(0)[1] == 2);
    CHECK(inst.cluster_of(4) == 2);
    CHECK(inst.largest_cluster_size() == 3);
    CHECK(inst.smallest_cluster_size() == 1);
    CHECK(inst.dist(0, 1) == 7);
    CHECK(inst.matrix()[0 * 6 + 2] == kForbiddenDistance);
    CHECK(inst.matrix()[3 * 6 + 4] == kForbiddenDistance);
    CHECK(inst.matrix()[0] == kForbiddenDistance);  // diagonal
}

TEST_CASE("instance validation names the broken invariant") {
    CHECK(message_of([] { GtspInstance("x", {{0, 1}, {1, 2}}, full(3, 1)); }).find("node 2") != std::string::npos);
    CHECK(message_of([] { GtspInstance("x", {{0}, {1}}, full(3, 1)); }) ==
          "node 3 is not assigned to any cluster");
    CHECK(message_of([] { GtspInstance("x", {{0}, {}, {1, 2}}, full(3, 1)); }).find("empty") != std::string::npos);
    CHECK(message_of([] { GtspInstance("x", {{0}, {1, 3}}, full(3, 1)); }).find("out of range") != std::string::npos);
    CHECK(message_of([] { GtspInstance("x", {{0, 1, 2}}, full(3, 1)); }).find("at least 2") != std::string::npos);
    CHECK(message_of([] { GtspInstance("x", {{0}, {1}}, std::vector<Distance>(3, 1)); }).find("square") !=
          std::string::npos);
    CHECK(message_of([] {
              auto m = full(3, 1);
              m[0 * 3 + 2] = 4;
              GtspInstance("x", {{0}, {1}, {2}}, m);
          }).find("asymmetric") != std::string::npos);
    CHECK(message_of([] {
              auto m = full(3, 1);
              m[1 * 3 + 2] = m[2 * 3 + 1] = -5;
              GtspInstance("x", {{0}, {1}, {2}}, m);
          }).find("negative") != std::string::npos);
}

TEST_CASE("intra-cluster entries are ignored, even when asymmetric or negative") {
    auto m = full(4, 3);
    m[0 * 4 + 1] = -9;
    m[1 * 4 + 0] = 42;
    const GtspInstance inst("x", {{0, 1}, {2, 3}}, m);
    CHECK(inst.dist(0, 2) == 3);
}

TEST_CASE("random instances satisfy the partition and symmetry invariants") {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 50; ++trial) {
        const GtspInstance inst = oracle::random_instance(gen, {});
        std::vector<int> seen(static_cast<std::size_t>(inst.node_count()), 0);
        int smallest = inst.node_count(), largest = 0;
        for (ClusterId c = 0; c < inst.cluster_count(); ++c) {
            const int size = static_cast<int>(inst.cluster(c).size());
            smallest = std::min(smallest, size);
            largest = std::max(largest, size);
            for (NodeId v : inst.cluster(c)) {
                ++seen[static_cast<std::size_t>(v)];
                CHECK(inst.cluster_of(v) == c);
            }
        }
        for (int s : seen) CHECK(s == 1);
        CHECK(inst.smallest_cluster_size() == smallest);
        CHECK(inst.largest_cluster_size() == largest);
        for (NodeId u = 0; u < inst.node_count(); ++u)
            for (NodeId v = 0; v < inst.node_count(); ++v)
                if (inst.cluster_of(u) != inst.cluster_of(v)) CHECK(inst.dist(u, v) == inst.dist(v, u));
    }
}
