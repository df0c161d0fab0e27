#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "umlf/model.hpp"

namespace umlf {

struct ParseError {
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  std::string expected;
  std::string found;

  bool operator==(const ParseError&) const = default;
};

// "line:column: expected X, found Y"
std::string render(const ParseError& e);

struct ParseResult {
  std::optional<Model> model;
  std::vector<ParseError> errors;

  bool ok() const { return model.has_value(); }
};

// Parses model source. Parsing and name resolution run in one pass over the
// whole input; any error leaves model empty. Structural rules enforced here:
// registered tags only, unique class/member/param/event names, resolvable
// class references, no role or multiplicity on generalization/realization,
// interfaces without attributes or concrete methods, and at least one
// mandatory event per sequence pattern.
ParseResult parse_model(std::string_view source);

}  // namespace umlf
