#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hacs/instance.hpp"
#include "hacs/local_search.hpp"
#include "hacs/rng.hpp"
#include "hacs/tour.hpp"

namespace hacs {

/// Which count scales the local-update deposit xi / (count * w(T_NN)).
enum class LocalUpdateDenominator { nodes, clusters };

std::string_view to_string(LocalUpdateDenominator d) noexcept;
LocalUpdateDenominator parse_local_update_denominator(std::string_view text);

struct AcsParams {
    double beta = 3.0;
    double rho = 0.4;
    double xi = 0.03;
    double q0 = 0.0;
    int delta = 300;
    int num_ants = 10;
    std::uint64_t seed = 1;
    LocalSearchMode local_search = LocalSearchMode::composite;
    LocalUpdateDenominator local_update_denominator = LocalUpdateDenominator::nodes;
    std::optional<long long> max_iterations;
    std::optional<double> max_time_seconds;
    bool record_trace = false;

    /// Throws DomainError when a rate is outside [0,1], num_ants < 1 or delta < 1.
    void validate() const;
};

/// Symmetric pheromone levels over all node pairs. Intra-cluster entries
/// exist in storage but are never read or written.
class PheromoneState {
public:
    PheromoneState(int node_count, double tau0);

    double tau0() const noexcept { return tau0_; }
    int node_count() const noexcept { return n_; }

    double get(NodeId u, NodeId v) const noexcept { return tau_[index(u, v)]; }
    void set(NodeId u, NodeId v, double value) noexcept {
        tau_[index(u, v)] = value;
        tau_[index(v, u)] = value;
    }
    std::span<const double> row(NodeId u) const noexcept {
        return std::span<const double>(tau_).subspan(index(u, 0), static_cast<std::size_t>(n_));
    }
    std::span<const double> values() const noexcept { return tau_; }

private:
    std::size_t index(NodeId u, NodeId v) const noexcept {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    int n_;
    double tau0_;
    std::vector<double> tau_;
};

/// Visibility raised to beta, (1 / max(d, eps))^beta, for every inter-cluster pair.
class VisibilityTable {
public:
    static constexpr double kMinDistance = 1e-6;

    VisibilityTable(const GtspInstance& instance, double beta);

    double eta_beta(NodeId u, NodeId v) const noexcept { return table_[index(u, v)]; }
    std::span<const double> row(NodeId u) const noexcept {
        return std::span<const double>(table_).subspan(index(u, 0), static_cast<std::size_t>(n_));
    }

private:
    std::size_t index(NodeId u, NodeId v) const noexcept {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    int n_;
    std::vector<double> table_;
};

/// A partial tour under construction. The available set is every node whose
/// cluster is not yet in `visited_clusters`.
struct Ant {
    std::vector<NodeId> path;
    std::vector<char> visited_clusters;

    Ant(const GtspInstance& instance, NodeId start);

    NodeId current() const noexcept { return path.back(); }
    void visit(const GtspInstance& instance, NodeId v);
    bool is_available(const GtspInstance& instance, NodeId v) const noexcept {
        return !visited_clusters[static_cast<std::size_t>(instance.cluster_of(v))];
    }
};

struct CandidateScore {
    NodeId node = -1;
    double eta = 0.0;  // 1 / max(d, eps)
    double a = 0.0;    // tau * eta^beta
    double p = 0.0;    // a / sum(a)
};

/// Scores every node available to `ant`, in ascending node order.
std::vector<CandidateScore> score_candidates(const GtspInstance& instance, const Ant& ant,
                                             const PheromoneState& pheromone, double beta);

/// How often the exploitation (argmax) and exploration (sampling) branches ran.
struct SelectionCounters {
    std::uint64_t exploit = 0;
    std::uint64_t explore = 0;
};

/// Pseudo-random proportional rule over precomputed attractiveness values:
/// with probability q0 the index of the largest value (first on ties),
/// otherwise an index drawn with probability proportional to its value.
/// Always consumes one uniform draw for the branch decision.
std::size_t choose_candidate(std::span<const double> attractiveness, double q0, Rng& rng,
                             SelectionCounters* counters = nullptr);

/// Next node for `ant` by the pseudo-random proportional rule. Throws
/// std::logic_error when every cluster is already visited.
NodeId select_next(const GtspInstance& instance, const Ant& ant, const PheromoneState& pheromone,
                   const VisibilityTable& visibility, const AcsParams& params, Rng& rng,
                   SelectionCounters* counters = nullptr);

/// tau_uv <- (1 - xi) tau_uv + xi / (count * w(T_NN)), count being n or m.
void local_update(PheromoneState& pheromone, NodeId u, NodeId v, const AcsParams& params,
                  const GtspInstance& instance, Weight nn_weight);

/// tau_uv <- (1 - rho) tau_uv + rho / w(best) on every edge of `best`.
void global_update(PheromoneState& pheromone, const Tour& best, const AcsParams& params);

struct IterationRecord {
    long long iteration = 0;
    Weight iteration_best = 0;
    Weight best = 0;
    double elapsed_ms = 0.0;
};

/// One line-delimited JSON record.
std::string to_json_line(const IterationRecord& record);

struct SearchState {
    Tour best;
    Tour t_nn;
    long long iteration = 0;
    int stagnation = 0;
    std::vector<IterationRecord> history;
};

/// Nearest neighbor tour, best := T_NN and tau := |K| / w(T_NN) everywhere.
struct InitResult {
    PheromoneState pheromone;
    SearchState state;
};
InitResult init(const GtspInstance& instance, const AcsParams& params);

/// Builds |K| tours. Each ant starts at a uniformly random node, takes m-1
/// steps and applies the local update after every step and on the closing edge.
/// Ants are built one after another.
std::vector<Tour> construct_all(const GtspInstance& instance, PheromoneState& pheromone,
                                const VisibilityTable& visibility, const AcsParams& params, Weight nn_weight,
                                Rng& rng, SelectionCounters* counters = nullptr);

/// Read-only view of one finished iteration, for tests and tracing.
struct IterationView {
    long long iteration = 0;
    const PheromoneState& pheromone;
    std::span<const Tour> constructed;
    std::span<const Tour> improved;
    const Tour& best;
};

struct RunHooks {
    std::function<void(const IterationView&)> on_iteration;
};

struct RunResult {
    Tour best;
    Weight nn_weight = 0;
    double tau0 = 0.0;
    long long iterations = 0;
    double seconds = 0.0;
    bool terminated_by_cap = false;
    SelectionCounters counters;
    std::vector<IterationRecord> trace;
};

/// Hybrid ACS main loop. Stops once the best tour has not improved for
/// `delta` consecutive iterations, or when a cap in `params` is hit.
RunResult run(const GtspInstance& instance, const AcsParams& params, const RunHooks& hooks = {});

}  // namespace hacs
