#include "umlf/conformance.hpp"

#include <algorithm>

namespace umlf {

namespace {

ConformanceResult violation(std::size_t position, std::string expected) {
  ConformanceResult result;
  result.conforms = false;
  result.first_violation = {position, std::move(expected)};
  return result;
}

bool in_alphabet(const SequencePattern& pattern, const std::string& event) {
  return std::any_of(pattern.events.begin(), pattern.events.end(),
                     [&](const Event& e) { return e.name == event; });
}

// Description of what the walk will still accept at pattern position `from`.
std::string expectation(const SequencePattern& pattern, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < pattern.events.size(); ++i) {
    const Event& e = pattern.events[i];
    if (!out.empty()) out += " or ";
    out += e.name;
    if (!e.optional) return out;
  }
  return out.empty() ? "end of trace" : out + " or end of trace";
}

}  // namespace

ConformanceResult conforms(const Trace& trace, const SequencePattern& pattern,
                           ConformanceMode mode) {
  // Event names are unique within a pattern, so a single greedy walk that
  // skips refusable optional events is exact.
  std::size_t p = 0;
  for (std::size_t t = 0; t < trace.events.size(); ++t) {
    const std::string& event = trace.events[t];
    if (mode == ConformanceMode::Loose && !in_alphabet(pattern, event)) continue;
    const std::size_t start = p;
    bool matched = false;
    while (p < pattern.events.size()) {
      if (pattern.events[p].name == event) {
        matched = true;
        ++p;
        break;
      }
      if (pattern.events[p].optional) {
        ++p;
        continue;
      }
      break;
    }
    if (!matched) return violation(t, expectation(pattern, start));
  }
  for (; p < pattern.events.size(); ++p) {
    if (!pattern.events[p].optional)
      return violation(trace.events.size(), pattern.events[p].name);
  }
  ConformanceResult result;
  result.conforms = true;
  return result;
}

std::vector<Trace> expand(const SequencePattern& pattern) {
  std::vector<std::size_t> optional_positions;
  for (std::size_t i = 0; i < pattern.events.size(); ++i)
    if (pattern.events[i].optional) optional_positions.push_back(i);
  if (optional_positions.size() > 16)
    throw ModelError("pattern " + pattern.name + " has " +
                     std::to_string(optional_positions.size()) +
                     " optional events; expansion is capped at 16");

  std::vector<Trace> traces;
  const std::size_t count = std::size_t{1} << optional_positions.size();
  traces.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    Trace trace;
    std::size_t opt = 0;
    for (std::size_t i = 0; i < pattern.events.size(); ++i) {
      if (pattern.events[i].optional) {
        if (mask & (std::size_t{1} << opt)) trace.events.push_back(pattern.events[i].name);
        ++opt;
      } else {
        trace.events.push_back(pattern.events[i].name);
      }
    }
    traces.push_back(std::move(trace));
  }
  return traces;
}

std::vector<Diagnostic> check_effects(const EffectSummary& summary,
                                      const std::vector<RestrictionClause>& clauses,
                                      const std::string& element_path) {
  std::vector<Diagnostic> diagnostics;
  for (const RestrictionClause& clause : clauses) {
    if (clause.satisfied_by_construction) continue;
    switch (clause.form) {
      case RestrictionClause::Form::Preserves:
        if (summary.writes.count(clause.detail))
          diagnostics.push_back({"UMLF-E101", Diagnostic::Severity::Error,
                                 element_path,
                                 "writes preserved attribute '" + clause.detail + "'"});
        break;
      case RestrictionClause::Form::Pure:
        if (!summary.writes.empty())
          diagnostics.push_back({"UMLF-E102", Diagnostic::Severity::Error,
                                 element_path,
                                 "writes '" + *summary.writes.begin() +
                                     "' under a pure constraint"});
        break;
      case RestrictionClause::Form::Opaque:
        diagnostics.push_back({"UMLF-W101", Diagnostic::Severity::Warning,
                               element_path,
                               "constraint not checked: " + clause.detail});
        break;
    }
  }
  return diagnostics;
}

}  // namespace umlf
