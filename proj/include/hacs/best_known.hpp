#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "hacs/types.hpp"

namespace hacs {

/// Best known objective values by instance name.
class BestKnownRegistry {
public:
    BestKnownRegistry() = default;

    /// Parses "name,best" lines. A header line starting with "name" and
    /// '#' comments are skipped. Values must be positive integers.
    static BestKnownRegistry parse_csv(std::string_view text);
    static BestKnownRegistry load(const std::filesystem::path& path);

    /// Throws DomainError for non-positive values.
    void set(const std::string& name, Weight best);

    std::optional<Weight> find(const std::string& name) const;
    bool contains(const std::string& name) const { return table_.contains(name); }
    std::size_t size() const noexcept { return table_.size(); }
    const std::map<std::string, Weight>& entries() const noexcept { return table_; }

private:
    std::map<std::string, Weight> table_;
};

}  // namespace hacs
