#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "umlf/model.hpp"

namespace umlf {

struct Trace {
  std::vector<std::string> events;

  bool operator==(const Trace&) const = default;
  bool operator<(const Trace& other) const { return events < other.events; }
};

struct EffectSummary {
  std::set<std::string> reads;
  std::set<std::string> writes;
  std::optional<Trace> trace;

  bool operator==(const EffectSummary&) const = default;
};

enum class ConformanceMode : std::uint8_t { Strict, Loose };

struct ConformanceResult {
  struct Violation {
    std::size_t position;  // index into the trace; trace size when truncated
    std::string expected;

    bool operator==(const Violation&) const = default;
  };

  bool conforms = false;
  std::optional<Violation> first_violation;

  bool operator==(const ConformanceResult&) const = default;
};

// Strict: the trace must be the pattern's event list with some subset of the
// optional events deleted; no foreign events, no repetition. Loose: events
// outside the pattern's alphabet may appear anywhere, pattern events must
// still embed in order, each used at most once, all mandatory ones present.
ConformanceResult conforms(const Trace& trace, const SequencePattern& pattern,
                           ConformanceMode mode = ConformanceMode::Strict);

// All strict-conforming traces, one per subset of optional events, ordered by
// subset bitmask. Throws ModelError beyond 16 optional events.
std::vector<Trace> expand(const SequencePattern& pattern);

// Evaluates a method's declared effects against restriction clauses.
// Diagnostics are reported at element_path. Clauses flagged
// satisfied-by-construction are skipped. UMLF-E101: writes intersect a
// preserves clause. UMLF-E102: writes under a pure clause. UMLF-W101: opaque
// clause carried along unchecked.
std::vector<Diagnostic> check_effects(const EffectSummary& summary,
                                      const std::vector<RestrictionClause>& clauses,
                                      const std::string& element_path);

}  // namespace umlf
