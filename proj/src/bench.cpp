#include "hacs/bench.hpp"

#include <time.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include "hacs/tour.hpp"

namespace hacs {

void RunReport::aggregate() {
    mean_error.reset();
    optimal_pct.reset();
    mean_time = 0.0;
    best_found = 0;
    if (runs.empty()) return;
    double time_sum = 0.0;
    double error_sum = 0.0;
    int hits = 0;
    best_found = runs.front().weight;
    for (const RunRecord& r : runs) {
        time_sum += r.wall_seconds;
        best_found = std::min(best_found, r.weight);
        if (r.error) error_sum += *r.error;
        if (r.hit) ++hits;
    }
    mean_time = time_sum / static_cast<double>(runs.size());
    if (best_known) {
        mean_error = error_sum / static_cast<double>(runs.size());
        optimal_pct = 100.0 * hits / static_cast<double>(runs.size());
    }
}

namespace {

double thread_cpu_seconds() {
    timespec ts{};
    clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
    return static_cast<double>(ts.tv_sec) + static_cast<double>(ts.tv_nsec) * 1e-9;
}

std::string trace_file_name(const std::string& instance, LocalSearchMode mode, std::uint64_t seed) {
    return instance + "_" + std::string(to_string(mode)) + "_seed" + std::to_string(seed) + ".jsonl";
}

RunRecord execute_run(const GtspInstance& instance, std::optional<Weight> best_known, AcsParams params,
                      const ExperimentOptions& options) {
    params.record_trace = params.record_trace || options.trace_dir.has_value();
    const auto wall_start = std::chrono::steady_clock::now();
    const double cpu_start = thread_cpu_seconds();
    RunResult result = run(instance, params);
    RunRecord record;
    record.cpu_seconds = thread_cpu_seconds() - cpu_start;
    record.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
    record.seed = params.seed;
    record.weight = result.best.weight;
    record.iterations = result.iterations;
    record.terminated_by_cap = result.terminated_by_cap;
    record.tour = result.best.nodes;
    if (best_known) {
        record.error = relative_error(record.weight, *best_known);
        record.hit = record.weight == *best_known;
        record.new_best = record.weight < *best_known;
    }
    if (options.trace_dir) {
        std::filesystem::create_directories(*options.trace_dir);
        std::ofstream out(*options.trace_dir / trace_file_name(instance.name(), params.local_search, params.seed));
        for (const IterationRecord& rec : result.trace) out << to_json_line(rec) << '\n';
    }
    return record;
}

}  // namespace

std::vector<RunReport> run_experiment(std::span<const GtspInstance> instances, const BestKnownRegistry& registry,
                                      const AcsParams& params, const ExperimentOptions& options) {
    params.validate();
    if (options.repeats < 1) throw DomainError("repeats must be at least 1");

    std::vector<RunReport> reports(instances.size());
    for (std::size_t i = 0; i < instances.size(); ++i) {
        reports[i].instance = instances[i].name();
        reports[i].best_known = registry.find(instances[i].name());
        reports[i].config = params;
        reports[i].runs.resize(static_cast<std::size_t>(options.repeats));
    }

    const std::size_t total = instances.size() * static_cast<std::size_t>(options.repeats);
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr failure;

    const auto worker = [&] {
        while (true) {
            const std::size_t task = next.fetch_add(1);
            if (task >= total) return;
            const std::size_t i = task / static_cast<std::size_t>(options.repeats);
            const std::size_t r = task % static_cast<std::size_t>(options.repeats);
            AcsParams run_params = params;
            run_params.seed = params.seed + r;
            try {
                reports[i].runs[r] = execute_run(instances[i], reports[i].best_known, run_params, options);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };

    const int workers = std::max(1, std::min<int>(options.workers, static_cast<int>(total)));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    for (RunReport& report : reports) report.aggregate();
    return reports;
}

AblationReport ablation(std::span<const GtspInstance> instances, const BestKnownRegistry& registry,
                        const AcsParams& params, const ExperimentOptions& options) {
    AcsParams hacs_params = params;
    hacs_params.local_search = LocalSearchMode::composite;
    AcsParams hacs0_params = params;
    hacs0_params.local_search = LocalSearchMode::three_opt_only;
    AblationReport out;
    out.hacs = run_experiment(instances, registry, hacs_params, options);
    out.hacs0 = run_experiment(instances, registry, hacs0_params, options);
    return out;
}

PooledStats pool(std::span<const RunReport> reports) {
    PooledStats stats;
    double error_sum = 0.0;
    std::size_t hits = 0;
    for (const RunReport& report : reports) {
        for (const RunRecord& r : report.runs) {
            if (!r.error) continue;
            error_sum += *r.error;
            hits += r.hit ? 1 : 0;
            ++stats.runs;
        }
    }
    if (stats.runs > 0) {
        stats.mean_error = error_sum / static_cast<double>(stats.runs);
        stats.optimal_pct = 100.0 * static_cast<double>(hits) / static_cast<double>(stats.runs);
    }
    return stats;
}

}  // namespace hacs
