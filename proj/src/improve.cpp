#include "hacs/local_search.hpp"

namespace hacs {

Tour improve(const GtspInstance& instance, const Tour& tour) {
    Tour out = three_opt(instance, tour);
    if (out.nodes.size() >= 3) out = co_optimize(instance, out);
    return out;
}

std::string_view to_string(LocalSearchMode mode) noexcept {
    switch (mode) {
        case LocalSearchMode::composite: return "composite";
        case LocalSearchMode::three_opt_only: return "3opt";
        case LocalSearchMode::none: return "none";
    }
    return "unknown";
}

LocalSearchMode parse_local_search_mode(std::string_view text) {
    if (text == "composite" || text == "hacs") return LocalSearchMode::composite;
    if (text == "3opt" || text == "three_opt" || text == "hacs0") return LocalSearchMode::three_opt_only;
    if (text == "none") return LocalSearchMode::none;
    throw UsageError("unknown local search '" + std::string(text) + "' (expected composite, 3opt or none)");
}

Tour apply_local_search(const GtspInstance& instance, const Tour& tour, LocalSearchMode mode) {
    switch (mode) {
        case LocalSearchMode::composite: return improve(instance, tour);
        case LocalSearchMode::three_opt_only: return three_opt(instance, tour);
        case LocalSearchMode::none: return tour;
    }
    return tour;
}

}  // namespace hacs
