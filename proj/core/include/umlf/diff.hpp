#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "umlf/model.hpp"

namespace umlf {

struct DiffEntry {
  enum class Op : std::uint8_t { Added, Removed, Changed };

  Op op;
  std::string path;
  std::string note;

  bool operator==(const DiffEntry&) const = default;
};

struct DiffReport {
  std::vector<DiffEntry> entries;

  bool empty() const { return entries.empty(); }
};

// All paths the differ compares: classes, members, relationships, patterns.
std::set<std::string> element_paths(const Model& m);

// Classes are matched by name and members by name with a positional fallback,
// so a renamed member yields a single Changed entry. Relationships and
// patterns are matched by index. When scope is given only entries whose path
// is in scope are reported.
DiffReport structural_diff(const Model& a, const Model& b,
                           const std::optional<std::set<std::string>>& scope =
                               std::nullopt);

}  // namespace umlf
