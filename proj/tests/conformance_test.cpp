#include "umlf/conformance.hpp"

#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace umlf {
namespace {

using test::admitted_traces;
using test::load_fixture;

SequencePattern fixture_pattern() {
  return load_fixture("webedu.umlf").sequence_patterns.at(0);
}

SequencePattern make_pattern(std::vector<Event> events) {
  SequencePattern p;
  p.name = "p";
  p.owner_class = "C";
  p.owner_method = "m";
  p.events = std::move(events);
  return p;
}

TEST(Conformance, StrictAcceptsEveryOptionalSubset) {
  const SequencePattern pattern = fixture_pattern();
  const std::vector<std::vector<std::string>> good = {
      {"showSelectionPage"},
      {"displayLoginPage", "showSelectionPage"},
      {"showSelectionPage", "validateData"},
      {"displayLoginPage", "showSelectionPage", "validateData"},
  };
  for (const auto& events : good) {
    const ConformanceResult r = conforms({events}, pattern);
    EXPECT_TRUE(r.conforms);
    EXPECT_EQ(r.first_violation, std::nullopt);
  }
}

TEST(Conformance, StrictRejectsForeignRepeatedAndMisordered) {
  const SequencePattern pattern = fixture_pattern();
  EXPECT_FALSE(conforms({{"showSelectionPage", "logout"}}, pattern).conforms);
  EXPECT_FALSE(
      conforms({{"showSelectionPage", "showSelectionPage"}}, pattern).conforms);
  EXPECT_FALSE(
      conforms({{"validateData", "showSelectionPage"}}, pattern).conforms);
  EXPECT_FALSE(conforms({{}}, pattern).conforms);
}

TEST(Conformance, ViolationsPointAtTheOffendingPosition) {
  const SequencePattern pattern = fixture_pattern();

  ConformanceResult r = conforms({{"validateData", "showSelectionPage"}}, pattern);
  ASSERT_TRUE(r.first_violation.has_value());
  EXPECT_EQ(r.first_violation->position, 0u);
  EXPECT_EQ(r.first_violation->expected,
            "displayLoginPage or showSelectionPage");

  r = conforms({{"displayLoginPage"}}, pattern);
  ASSERT_TRUE(r.first_violation.has_value());
  EXPECT_EQ(r.first_violation->position, 1u);
  EXPECT_EQ(r.first_violation->expected, "showSelectionPage");

  r = conforms({{"showSelectionPage", "validateData", "validateData"}}, pattern);
  ASSERT_TRUE(r.first_violation.has_value());
  EXPECT_EQ(r.first_violation->position, 2u);
  EXPECT_EQ(r.first_violation->expected, "end of trace");
}

TEST(Conformance, LooseIgnoresForeignEventsButKeepsOrder) {
  const SequencePattern pattern = fixture_pattern();
  EXPECT_TRUE(conforms({{"boot", "showSelectionPage", "log"}}, pattern,
                       ConformanceMode::Loose)
                  .conforms);
  EXPECT_TRUE(conforms({{"displayLoginPage", "noise", "showSelectionPage"}},
                       pattern, ConformanceMode::Loose)
                  .conforms);
  // Pattern events still bind: order and at-most-once use stay enforced.
  EXPECT_FALSE(conforms({{"validateData", "showSelectionPage"}}, pattern,
                        ConformanceMode::Loose)
                   .conforms);
  EXPECT_FALSE(conforms({{"showSelectionPage", "showSelectionPage"}}, pattern,
                        ConformanceMode::Loose)
                   .conforms);
  EXPECT_FALSE(conforms({{"noise"}}, pattern, ConformanceMode::Loose).conforms);
}

TEST(Conformance, ExpandListsSubsetsByMask) {
  const std::vector<Trace> traces = expand(fixture_pattern());
  ASSERT_EQ(traces.size(), 4u);
  EXPECT_EQ(traces[0].events, (std::vector<std::string>{"showSelectionPage"}));
  EXPECT_EQ(traces[1].events,
            (std::vector<std::string>{"displayLoginPage", "showSelectionPage"}));
  EXPECT_EQ(traces[2].events,
            (std::vector<std::string>{"showSelectionPage", "validateData"}));
  EXPECT_EQ(traces[3].events,
            (std::vector<std::string>{"displayLoginPage", "showSelectionPage",
                                      "validateData"}));
}

TEST(Conformance, ExpandMatchesStrictMembership) {
  std::mt19937 rng(90125);
  for (int round = 0; round < 40; ++round) {
    std::vector<Event> events;
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i)
      events.push_back({"e" + std::to_string(i), rng() % 2 == 0});
    if (events[0].optional == true) events[0].optional = false;
    const SequencePattern pattern = make_pattern(events);

    const std::vector<Trace> expanded = expand(pattern);
    const std::set<Trace> expected = admitted_traces(pattern);
    EXPECT_EQ(std::set<Trace>(expanded.begin(), expanded.end()), expected);
    for (const Trace& t : expanded) EXPECT_TRUE(conforms(t, pattern).conforms);
  }
}

TEST(Conformance, ExpandCapsOptionalCount) {
  std::vector<Event> events = {{"anchor", false}};
  for (int i = 0; i < 17; ++i) events.push_back({"o" + std::to_string(i), true});
  EXPECT_THROW(expand(make_pattern(events)), ModelError);
  events.resize(17);  // anchor + 16 optionals stays within the cap
  EXPECT_EQ(expand(make_pattern(events)).size(), 1u << 16);
}

TEST(Conformance, EffectChecks) {
  std::vector<RestrictionClause> clauses;
  RestrictionClause preserves;
  preserves.scope = RestrictionClause::Scope::ForAllNewMethods;
  preserves.form = RestrictionClause::Form::Preserves;
  preserves.detail = "fSelectedCourse";
  clauses.push_back(preserves);

  EffectSummary clean;
  clean.reads = {"fSelectedCourse"};
  EXPECT_TRUE(check_effects(clean, clauses, "M.C.m").empty());

  EffectSummary dirty;
  dirty.writes = {"fSelectedCourse"};
  std::vector<Diagnostic> findings = check_effects(dirty, clauses, "M.C.m");
  ASSERT_EQ(findings.size(), 1u);
  EXPECT_EQ(findings[0].code, "UMLF-E101");
  EXPECT_EQ(findings[0].path, "M.C.m");
  EXPECT_EQ(findings[0].message, "writes preserved attribute 'fSelectedCourse'");
}

TEST(Conformance, PureAndOpaqueClauses) {
  RestrictionClause pure;
  pure.scope = RestrictionClause::Scope::Method;
  pure.method_name = "m";
  pure.form = RestrictionClause::Form::Pure;

  EffectSummary writing;
  writing.writes = {"x"};
  std::vector<Diagnostic> findings = check_effects(writing, {pure}, "M.C.m");
  ASSERT_EQ(findings.size(), 1u);
  EXPECT_EQ(findings[0].code, "UMLF-E102");
  EXPECT_EQ(findings[0].message, "writes 'x' under a pure constraint");

  RestrictionClause opaque;
  opaque.scope = RestrictionClause::Scope::ForAllNewMethods;
  opaque.form = RestrictionClause::Form::Opaque;
  opaque.detail = "no blocking calls";
  findings = check_effects({}, {opaque}, "M.C.m");
  ASSERT_EQ(findings.size(), 1u);
  EXPECT_EQ(findings[0].code, "UMLF-W101");
  EXPECT_EQ(findings[0].severity, Diagnostic::Severity::Warning);
  EXPECT_EQ(findings[0].message, "constraint not checked: no blocking calls");
}

TEST(Conformance, SatisfiedClausesAreSkipped) {
  RestrictionClause satisfied;
  satisfied.scope = RestrictionClause::Scope::ForAllNewMethods;
  satisfied.form = RestrictionClause::Form::Preserves;
  satisfied.detail = "secret";
  satisfied.satisfied_by_construction = true;

  EffectSummary writing;
  writing.writes = {"secret"};
  EXPECT_TRUE(check_effects(writing, {satisfied}, "M.C.m").empty());
}

TEST(Conformance, PureClauseReportsTheFirstWriteOnly) {
  RestrictionClause pure;
  pure.scope = RestrictionClause::Scope::ForAllNewMethods;
  pure.form = RestrictionClause::Form::Pure;
  EffectSummary writing;
  writing.writes = {"b", "a"};
  const std::vector<Diagnostic> findings = check_effects(writing, {pure}, "M.C.m");
  ASSERT_EQ(findings.size(), 1u);
  EXPECT_EQ(findings[0].message, "writes 'a' under a pure constraint");
}

}  // namespace
}  // namespace umlf
