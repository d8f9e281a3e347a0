#include "hacs/acs.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hacs/heuristics.hpp"

namespace hacs {

std::string_view to_string(LocalUpdateDenominator d) noexcept {
    return d == LocalUpdateDenominator::nodes ? "nodes" : "clusters";
}

LocalUpdateDenominator parse_local_update_denominator(std::string_view text) {
    if (text == "nodes" || text == "n") return LocalUpdateDenominator::nodes;
    if (text == "clusters" || text == "m") return LocalUpdateDenominator::clusters;
    throw UsageError("unknown local update denominator '" + std::string(text) + "' (expected nodes or clusters)");
}

void AcsParams::validate() const {
    const auto rate = [](double v, const char* name) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw DomainError(std::string(name) + " must lie in [0, 1], got " + std::to_string(v));
        }
    };
    rate(rho, "rho");
    rate(xi, "xi");
    rate(q0, "q0");
    if (!std::isfinite(beta)) throw DomainError("beta must be finite");
    if (num_ants < 1) throw DomainError("the colony needs at least one ant");
    if (delta < 1) throw DomainError("delta must be at least 1");
    if (max_iterations && *max_iterations < 1) throw DomainError("max_iterations must be positive");
    if (max_time_seconds && !(*max_time_seconds > 0.0)) throw DomainError("max_time must be positive");
}

PheromoneState::PheromoneState(int node_count, double tau0)
    : n_(node_count),
      tau0_(tau0),
      tau_(static_cast<std::size_t>(node_count) * static_cast<std::size_t>(node_count), tau0) {}

VisibilityTable::VisibilityTable(const GtspInstance& instance, double beta)
    : n_(instance.node_count()), table_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0.0) {
    for (NodeId u = 0; u < n_; ++u) {
        for (NodeId v = 0; v < n_; ++v) {
            if (instance.cluster_of(u) == instance.cluster_of(v)) continue;
            const double d = std::max(static_cast<double>(instance.dist(u, v)), kMinDistance);
            table_[index(u, v)] = std::pow(1.0 / d, beta);
        }
    }
}

Ant::Ant(const GtspInstance& instance, NodeId start)
    : visited_clusters(static_cast<std::size_t>(instance.cluster_count()), 0) {
    path.reserve(static_cast<std::size_t>(instance.cluster_count()));
    visit(instance, start);
}

void Ant::visit(const GtspInstance& instance, NodeId v) {
    path.push_back(v);
    visited_clusters[static_cast<std::size_t>(instance.cluster_of(v))] = 1;
}

std::vector<CandidateScore> score_candidates(const GtspInstance& instance, const Ant& ant,
                                             const PheromoneState& pheromone, double beta) {
    std::vector<CandidateScore> out;
    const NodeId u = ant.current();
    double total = 0.0;
    for (NodeId v = 0; v < instance.node_count(); ++v) {
        if (!ant.is_available(instance, v)) continue;
        CandidateScore score;
        score.node = v;
        score.eta = 1.0 / std::max(static_cast<double>(instance.dist(u, v)), VisibilityTable::kMinDistance);
        score.a = pheromone.get(u, v) * std::pow(score.eta, beta);
        total += score.a;
        out.push_back(score);
    }
    for (auto& score : out) score.p = score.a / total;
    return out;
}

std::size_t choose_candidate(std::span<const double> attractiveness, double q0, Rng& rng,
                             SelectionCounters* counters) {
    if (attractiveness.empty()) throw std::logic_error("no candidate to choose from");
    const double r = rng.uniform01();
    if (r < q0) {
        if (counters) ++counters->exploit;
        return static_cast<std::size_t>(
            std::distance(attractiveness.begin(), std::max_element(attractiveness.begin(), attractiveness.end())));
    }
    if (counters) ++counters->explore;
    double total = 0.0;
    for (double a : attractiveness) total += a;
    const double target = rng.uniform01() * total;
    double cumulative = 0.0;
    for (std::size_t i = 0; i < attractiveness.size(); ++i) {
        cumulative += attractiveness[i];
        if (target < cumulative) return i;
    }
    // Rounding can leave target == total; fall back to the last positive entry.
    for (std::size_t i = attractiveness.size(); i-- > 0;) {
        if (attractiveness[i] > 0.0) return i;
    }
    return attractiveness.size() - 1;
}

namespace {

// Candidate buffers reused across steps of one construction.
struct SelectionScratch {
    std::vector<NodeId> nodes;
    std::vector<double> attractiveness;
};

NodeId select_next_into(const GtspInstance& instance, const Ant& ant, const PheromoneState& pheromone,
                        const VisibilityTable& visibility, const AcsParams& params, Rng& rng,
                        SelectionCounters* counters, SelectionScratch& scratch) {
    scratch.nodes.clear();
    scratch.attractiveness.clear();
    const NodeId u = ant.current();
    const auto tau = pheromone.row(u);
    const auto eta = visibility.row(u);
    for (NodeId v = 0; v < instance.node_count(); ++v) {
        if (!ant.is_available(instance, v)) continue;
        scratch.nodes.push_back(v);
        scratch.attractiveness.push_back(tau[static_cast<std::size_t>(v)] * eta[static_cast<std::size_t>(v)]);
    }
    if (scratch.nodes.empty()) {
        throw std::logic_error("ant has visited every cluster; no next node to select");
    }
    return scratch.nodes[choose_candidate(scratch.attractiveness, params.q0, rng, counters)];
}

}  // namespace

NodeId select_next(const GtspInstance& instance, const Ant& ant, const PheromoneState& pheromone,
                   const VisibilityTable& visibility, const AcsParams& params, Rng& rng,
                   SelectionCounters* counters) {
    SelectionScratch scratch;
    return select_next_into(instance, ant, pheromone, visibility, params, rng, counters, scratch);
}

void local_update(PheromoneState& pheromone, NodeId u, NodeId v, const AcsParams& params,
                  const GtspInstance& instance, Weight nn_weight) {
    const double count = params.local_update_denominator == LocalUpdateDenominator::nodes
                             ? static_cast<double>(instance.node_count())
                             : static_cast<double>(instance.cluster_count());
    const double deposit = params.xi / (count * static_cast<double>(std::max<Weight>(nn_weight, 1)));
    pheromone.set(u, v, (1.0 - params.xi) * pheromone.get(u, v) + deposit);
}

void global_update(PheromoneState& pheromone, const Tour& best, const AcsParams& params) {
    const std::size_t m = best.nodes.size();
    const double deposit = params.rho / static_cast<double>(std::max<Weight>(best.weight, 1));
    // A 2-node cycle uses the same edge twice; it is updated once.
    const std::size_t edges = m == 2 ? 1 : m;
    for (std::size_t i = 0; i < edges; ++i) {
        const NodeId u = best.nodes[i];
        const NodeId v = best.nodes[(i + 1) % m];
        pheromone.set(u, v, (1.0 - params.rho) * pheromone.get(u, v) + deposit);
    }
}

std::string to_json_line(const IterationRecord& record) {
    std::ostringstream out;
    out << "{\"iteration\":" << record.iteration << ",\"iteration_best\":" << record.iteration_best
        << ",\"best\":" << record.best << ",\"elapsed_ms\":" << record.elapsed_ms << '}';
    return out.str();
}

InitResult init(const GtspInstance& instance, const AcsParams& params) {
    params.validate();
    SearchState state;
    state.t_nn = nearest_neighbor(instance);
    state.best = state.t_nn;
    const double tau0 = static_cast<double>(params.num_ants) /
                        static_cast<double>(std::max<Weight>(state.t_nn.weight, 1));
    return InitResult{PheromoneState(instance.node_count(), tau0), std::move(state)};
}

namespace {

std::vector<Tour> construct_with(const GtspInstance& instance, PheromoneState& pheromone,
                                 const VisibilityTable& visibility, const AcsParams& params, Weight nn_weight,
                                 Rng& rng, SelectionCounters* counters, SelectionScratch& scratch) {
    const int m = instance.cluster_count();
    std::vector<Tour> tours;
    tours.reserve(static_cast<std::size_t>(params.num_ants));
    for (int k = 0; k < params.num_ants; ++k) {
        const auto start = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(instance.node_count())));
        Ant ant(instance, start);
        for (int step = 1; step < m; ++step) {
            const NodeId u = ant.current();
            const NodeId v = select_next_into(instance, ant, pheromone, visibility, params, rng, counters, scratch);
            ant.visit(instance, v);
            local_update(pheromone, u, v, params, instance, nn_weight);
        }
        local_update(pheromone, ant.current(), ant.path.front(), params, instance, nn_weight);
        Tour tour;
        tour.weight = cycle_weight(instance, ant.path);
        tour.nodes = std::move(ant.path);
        tours.push_back(std::move(tour));
    }
    return tours;
}

}  // namespace

std::vector<Tour> construct_all(const GtspInstance& instance, PheromoneState& pheromone,
                                const VisibilityTable& visibility, const AcsParams& params, Weight nn_weight,
                                Rng& rng, SelectionCounters* counters) {
    SelectionScratch scratch;
    return construct_with(instance, pheromone, visibility, params, nn_weight, rng, counters, scratch);
}

RunResult run(const GtspInstance& instance, const AcsParams& params, const RunHooks& hooks) {
    using clock = std::chrono::steady_clock;
    const auto started = clock::now();
    const auto elapsed_seconds = [&] {
        return std::chrono::duration<double>(clock::now() - started).count();
    };

    auto [pheromone, state] = init(instance, params);
    RunResult result;
    result.nn_weight = state.t_nn.weight;
    result.tau0 = pheromone.tau0();

    const VisibilityTable visibility(instance, params.beta);
    Rng rng(params.seed);
    SelectionScratch scratch;

    // A zero-weight tour cannot be improved on.
    const bool already_optimal = state.best.weight == 0;

    while (!already_optimal) {
        ++state.iteration;
        std::vector<Tour> constructed =
            construct_with(instance, pheromone, visibility, params, state.t_nn.weight, rng, &result.counters, scratch);

        std::vector<Tour> improved;
        improved.reserve(constructed.size());
        for (const Tour& tour : constructed) {
            improved.push_back(apply_local_search(instance, tour, params.local_search));
        }

        std::size_t iteration_best = 0;
        for (std::size_t k = 1; k < improved.size(); ++k) {
            if (improved[k].weight < improved[iteration_best].weight) iteration_best = k;
        }
        if (improved[iteration_best].weight < state.best.weight) {
            state.best = improved[iteration_best];
            state.stagnation = 0;
        } else {
            ++state.stagnation;
        }

        global_update(pheromone, state.best, params);

        const double elapsed = elapsed_seconds();
        if (params.record_trace) {
            state.history.push_back(
                {state.iteration, improved[iteration_best].weight, state.best.weight, elapsed * 1000.0});
        }
        if (hooks.on_iteration) {
            hooks.on_iteration(IterationView{state.iteration, pheromone, constructed, improved, state.best});
        }

        if (state.stagnation >= params.delta) break;
        if (params.max_iterations && state.iteration >= *params.max_iterations) {
            result.terminated_by_cap = true;
            break;
        }
        if (params.max_time_seconds && elapsed >= *params.max_time_seconds) {
            result.terminated_by_cap = true;
            break;
        }
    }

    result.best = std::move(state.best);
    result.iterations = state.iteration;
    result.trace = std::move(state.history);
    result.seconds = elapsed_seconds();
    return result;
}

}  // namespace hacs
