#include "hacs/best_known.hpp"

#include <charconv>
#include <sstream>

#include "hacs/tsplib.hpp"

namespace hacs {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

BestKnownRegistry BestKnownRegistry::parse_csv(std::string_view text) {
    BestKnownRegistry registry;
    int line_no = 0;
    bool first_row = true;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = trim(text.substr(start, end - start));
        start = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string_view::npos) throw ParseError("expected 'name,best'", line_no);
        const std::string_view name = trim(line.substr(0, comma));
        std::string_view value = trim(line.substr(comma + 1));
        if (const auto extra = value.find(','); extra != std::string_view::npos) value = trim(value.substr(0, extra));
        const bool header = first_row && name == "name";
        first_row = false;
        if (header) continue;
        Weight best = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), best);
        if (ec != std::errc() || ptr != value.data() + value.size()) {
            throw ParseError("best value for '" + std::string(name) + "' is not an integer", line_no);
        }
        if (best <= 0) throw ParseError("best value for '" + std::string(name) + "' must be positive", line_no);
        if (registry.contains(std::string(name))) {
            throw ParseError("duplicate entry for '" + std::string(name) + "'", line_no);
        }
        registry.table_[std::string(name)] = best;
    }
    return registry;
}

BestKnownRegistry BestKnownRegistry::load(const std::filesystem::path& path) {
    try {
        return parse_csv(read_text_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string(), e);
    }
}

void BestKnownRegistry::set(const std::string& name, Weight best) {
    if (best <= 0) throw DomainError("best known value must be positive, got " + std::to_string(best));
    table_[name] = best;
}

std::optional<Weight> BestKnownRegistry::find(const std::string& name) const {
    if (auto it = table_.find(name); it != table_.end()) return it->second;
    return std::nullopt;
}

}  // namespace hacs
