// Acceptance checks that need the clustered TSPLIB benchmark files.
// Usage: hacs_acceptance_benchmarks <dir with NAME.gtsp files>
// Exits 77 when nothing could be checked, 1 on any failure.

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include "hacs/bench.hpp"
#include "hacs/tsplib.hpp"

using namespace hacs;
namespace fs = std::filesystem;

namespace {

constexpr int kSeeds = 10;
constexpr int kMinHits = 8;
constexpr double kTimeFactor = 10.0;
constexpr double kMaxMeanError = 0.5;  // percent
constexpr int kSubsetMaxClusters = 89;

const std::vector<std::string> kSpotInstances{"40d198", "46pr226", "53pr264", "64lin318",
                                              "84fl417", "88pr439", "131p654"};

int leading_number(const std::string& name) {
    std::size_t k = 0;
    while (k < name.size() && std::isdigit(static_cast<unsigned char>(name[k]))) ++k;
    return k == 0 ? 0 : std::stoi(name.substr(0, k));
}

ExperimentOptions options() {
    ExperimentOptions o;
    o.repeats = kSeeds;
    o.workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    return o;
}

std::vector<GtspInstance> load_all(const fs::path& dir, const std::vector<std::string>& names) {
    std::vector<GtspInstance> out;
    for (const auto& name : names) out.push_back(load_gtsp(dir / (name + ".gtsp")));
    return out;
}

bool all_present(const fs::path& dir, const std::vector<std::string>& names) {
    return std::all_of(names.begin(), names.end(), [&](const auto& n) { return fs::exists(dir / (n + ".gtsp")); });
}

}  // namespace

int main(int argc, char** argv) {
    const fs::path data = HACS_DATA_DIR;
    const fs::path dir = argc > 1 ? fs::path(argv[1]) : data / "benchmarks";
    const BestKnownRegistry registry = BestKnownRegistry::load(data / "best_known.csv");
    const PublishedReference published = PublishedReference::load(data / "published_reference.csv");
    const AcsParams params;

    int failures = 0, checked = 0;

    if (!all_present(dir, kSpotInstances)) {
        std::printf("SKIP [3] published best values on clustered TSPLIB instances: files missing in %s\n",
                    dir.string().c_str());
    } else {
        const auto instances = load_all(dir, kSpotInstances);
        const auto reports = run_experiment(instances, registry, params, options());
        bool ok = true;
        std::string detail;
        for (const RunReport& r : reports) {
            const int hits = static_cast<int>(std::count_if(r.runs.begin(), r.runs.end(), [](const RunRecord& x) { return x.hit; }));
            const PublishedRow* row = published.find(r.instance);
            const double limit = row && row->hacs_time ? kTimeFactor * *row->hacs_time : 0.0;
            const bool inst_ok = hits >= kMinHits && (limit == 0.0 || r.mean_time <= limit);
            ok = ok && inst_ok;
            char buf[160];
            std::snprintf(buf, sizeof buf, "%s%s %d/%d hits, %.2f s/run (limit %.2f)", detail.empty() ? "" : "; ",
                          r.instance.c_str(), hits, kSeeds, r.mean_time, limit);
            detail += buf;
        }
        std::printf("%s [3] published best values on clustered TSPLIB instances: %s\n", ok ? "PASS" : "FAIL",
                    detail.c_str());
        ++checked;
        if (!ok) ++failures;
    }

    std::vector<std::string> subset;
    for (const auto& [name, best] : registry.entries()) {
        if (leading_number(name) <= kSubsetMaxClusters) subset.push_back(name);
    }
    if (subset.empty() || !all_present(dir, subset)) {
        std::printf("SKIP [4] aggregate quality: %zu registry instances with m <= %d, not all present in %s\n",
                    subset.size(), kSubsetMaxClusters, dir.string().c_str());
    } else {
        const auto reports = run_experiment(load_all(dir, subset), registry, params, options());
        double sum = 0.0;
        for (const RunReport& r : reports) sum += r.mean_error.value_or(0.0);
        const double mean = sum / static_cast<double>(reports.size());
        const bool ok = mean <= kMaxMeanError;
        std::printf("%s [4] aggregate quality: mean error %.3f%% over %zu instances (limit %.1f%%)\n",
                    ok ? "PASS" : "FAIL", mean, reports.size(), kMaxMeanError);
        ++checked;
        if (!ok) ++failures;
    }

    if (failures > 0) return 1;
    return checked == 0 ? 77 : 0;
}
