#include "umlf/transform.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_models.hpp"
#include "umlf/diff.hpp"
#include "umlf/validate.hpp"

namespace umlf {
namespace {

using test::fixture_text;
using test::load_fixture;
using test::parse_or_throw;

void expect_throws_with(const std::function<void()>& fn, const std::string& needle) {
  try {
    fn();
    FAIL() << "expected ModelError mentioning " << needle;
  } catch (const ModelError& e) {
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
  }
}

TEST(Transform, UpperCamel) {
  EXPECT_EQ(upper_camel("selectCourse"), "SelectCourse");
  EXPECT_EQ(upper_camel("x"), "X");
}

TEST(Transform, ImplementationModelTable) {
  EXPECT_EQ(implementation_models().size(), 4u);
  EXPECT_EQ(implementation_model_from_name("hook-list"), ImplementationModelId::HookList);
  EXPECT_EQ(implementation_model_from_name("nonsense"), std::nullopt);
  EXPECT_TRUE(applicable(ImplementationModelId::Strategy,
                         VariationPoint::Kind::VariableMethod, Timing::Dynamic));
  EXPECT_FALSE(applicable(ImplementationModelId::Strategy,
                          VariationPoint::Kind::VariableMethod, Timing::Static));
  EXPECT_TRUE(applicable(ImplementationModelId::Unification,
                         VariationPoint::Kind::ExtensibleClass, Timing::Static));
  EXPECT_FALSE(applicable(ImplementationModelId::HookList,
                          VariationPoint::Kind::VariableMethod, Timing::Dynamic));
}

TEST(Transform, StrategySeparatesTheVariableMethod) {
  const Model before = load_fixture("webedu.umlf");
  const Model after = apply_strategy(before, "SelectCourse", "selectCourse");

  const ClassDecl* host = after.find_class("SelectCourse");
  ASSERT_NE(host, nullptr);
  EXPECT_TRUE(host->is_abstract);
  EXPECT_TRUE(host->tags.contains(Tag::SeparationTemplate));
  EXPECT_EQ(host->find_method("selectCourse"), nullptr);

  const ClassDecl* strategy = after.find_class("SelectCourseStrategy");
  ASSERT_NE(strategy, nullptr);
  EXPECT_TRUE(strategy->is_abstract);
  EXPECT_TRUE(strategy->tags.contains(Tag::Dynamic));
  EXPECT_TRUE(strategy->tags.contains(Tag::SeparationHook));
  const MethodDecl* moved = strategy->find_method("selectCourse");
  ASSERT_NE(moved, nullptr);
  EXPECT_TRUE(moved->is_abstract);
  EXPECT_FALSE(moved->tags.contains(Tag::Variable));
  ASSERT_EQ(moved->params.size(), 1u);
  EXPECT_EQ(moved->params[0].type_name, "Student");
  EXPECT_EQ(moved->return_type, "Course");

  const Relationship& link = after.relationships.back();
  EXPECT_EQ(link.kind, RelationKind::Aggregation);
  EXPECT_EQ(link.source, "SelectCourse");
  EXPECT_EQ(link.target, "SelectCourseStrategy");
  EXPECT_EQ(link.role, "strategy");
  EXPECT_EQ(link.multiplicity, "1");

  ASSERT_EQ(after.sequence_patterns.size(), 1u);
  EXPECT_EQ(after.sequence_patterns[0].owner_class, "SelectCourseStrategy");
  EXPECT_EQ(after.sequence_patterns[0].owner_method, "selectCourse");
}

TEST(Transform, HookListOpensTheExtensibleClass) {
  const Model before = load_fixture("webedu.umlf");
  const Model after = apply_hook_list(before, "ShowCourse", "showContent");

  const ClassDecl* host = after.find_class("ShowCourse");
  ASSERT_NE(host, nullptr);
  EXPECT_FALSE(host->tags.contains(Tag::Extensible));
  EXPECT_FALSE(host->tags.contains(Tag::Dynamic));
  EXPECT_TRUE(host->constraints.empty());
  EXPECT_EQ(host->find_method("showContent")->hook_point, "ShowCourseHook");
  EXPECT_EQ(host->find_method("showCourse")->hook_point, std::nullopt);
  ASSERT_NE(host->find_method("addHook"), nullptr);
  ASSERT_NE(host->find_method("removeHook"), nullptr);
  EXPECT_EQ(host->find_method("addHook")->params[0].type_name, "ShowCourseHook");

  const ClassDecl* hook = after.find_class("ShowCourseHook");
  ASSERT_NE(hook, nullptr);
  EXPECT_EQ(hook->kind, ClassKind::Interface);
  EXPECT_TRUE(hook->tags.contains(Tag::Dynamic));
  EXPECT_TRUE(hook->tags.contains(Tag::SeparationHook));
  ASSERT_NE(hook->find_method("invoke"), nullptr);
  EXPECT_TRUE(hook->find_method("invoke")->is_abstract);

  // The new-methods restriction follows the extension point: hook classes are
  // where new methods will appear.
  ASSERT_EQ(hook->constraints.size(), 1u);
  EXPECT_EQ(hook->constraints[0].scope, RestrictionClause::Scope::ForAllNewMethods);
  EXPECT_EQ(hook->constraints[0].form, RestrictionClause::Form::Preserves);
  EXPECT_EQ(hook->constraints[0].detail, "fSelectedCourse");
  EXPECT_FALSE(hook->constraints[0].satisfied_by_construction);

  const Relationship& link = after.relationships.back();
  EXPECT_EQ(link.kind, RelationKind::Aggregation);
  EXPECT_EQ(link.role, "hooks");
  EXPECT_EQ(link.multiplicity, "0..*");
}

TEST(Transform, HookListMarksPrivatePreservesSatisfied) {
  const Model before = load_fixture("webedu_private.umlf");
  const Model after = apply_hook_list(before, "ShowCourse", "showContent");
  const ClassDecl* hook = after.find_class("ShowCourseHook");
  ASSERT_NE(hook, nullptr);
  ASSERT_EQ(hook->constraints.size(), 1u);
  EXPECT_TRUE(hook->constraints[0].satisfied_by_construction);
}

TEST(Transform, UnificationAbstractsAStaticMethod) {
  const Model before = parse_or_throw(
      "model M {\n"
      "  class Render {\n"
      "    method paint() { tags { variable, static } }\n"
      "    method size(): Int\n"
      "  }\n"
      "}");
  const Model after = apply_unification(before, "Render", "paint");
  const ClassDecl* cls = after.find_class("Render");
  ASSERT_NE(cls, nullptr);
  EXPECT_TRUE(cls->is_abstract);
  EXPECT_TRUE(cls->tags.contains(Tag::Static));
  const MethodDecl* paint = cls->find_method("paint");
  ASSERT_NE(paint, nullptr);
  EXPECT_TRUE(paint->is_abstract);
  EXPECT_TRUE(paint->tags.empty());
  EXPECT_FALSE(cls->find_method("size")->is_abstract);
}

TEST(Transform, UnificationAbstractsAStaticClass) {
  const Model before = parse_or_throw(
      "model M {\n"
      "  class Policy {\n"
      "    tags { extensible, static }\n"
      "    method decide(): Flag\n"
      "  }\n"
      "}");
  const Model after = apply_unification(before, "Policy");
  const ClassDecl* cls = after.find_class("Policy");
  ASSERT_NE(cls, nullptr);
  EXPECT_TRUE(cls->is_abstract);
  EXPECT_FALSE(cls->tags.contains(Tag::Extensible));
  EXPECT_TRUE(cls->tags.contains(Tag::Static));
}

TEST(Transform, MopMovesTheMethodBehindBooleanParameters) {
  const Model before = load_fixture("webedu.umlf");
  const std::vector<MopParam> params = {
      {"login", "ask for a login first"},
      {"major", std::nullopt},
      {"validate", "check the assignment before enrolment"},
  };
  const Model after = apply_mop(before, "SelectCourse", "selectCourse", params);

  const ClassDecl* mop = after.find_class("SelectCourseMOP");
  ASSERT_NE(mop, nullptr);
  EXPECT_FALSE(mop->is_abstract);
  ASSERT_EQ(mop->attributes.size(), 3u);
  EXPECT_EQ(mop->attributes[0].name, "login");
  EXPECT_EQ(mop->attributes[0].type_name, "bool");
  EXPECT_EQ(mop->attributes[0].visibility, Visibility::Private);
  EXPECT_EQ(mop->attributes[0].doc, "ask for a login first");
  EXPECT_EQ(mop->attributes[1].doc, std::nullopt);
  const MethodDecl* moved = mop->find_method("selectCourse");
  ASSERT_NE(moved, nullptr);
  EXPECT_FALSE(moved->is_abstract);

  const Relationship& link = after.relationships.back();
  EXPECT_EQ(link.role, "mop");
  EXPECT_EQ(link.target, "SelectCourseMOP");
}

TEST(Transform, GoldenFrameworkRewrite) {
  const Model before = load_fixture("webedu.umlf");
  const std::vector<Binding> plan = parse_bindings(fixture_text("webedu.bind"));
  EXPECT_EQ(transform_all(before, plan), load_fixture("webedu_framework.umlf"));
}

TEST(Transform, GoldenMopRewrite) {
  const Model before = load_fixture("webedu.umlf");
  const std::vector<Binding> plan = parse_bindings(fixture_text("webedu_mop.bind"));
  EXPECT_EQ(transform_all(before, plan), load_fixture("webedu_framework_mop.umlf"));
}

TEST(Transform, RewrittenFrameworkNeedsNoFurtherRewrites) {
  const Model framework = load_fixture("webedu_framework.umlf");
  EXPECT_EQ(transform_all(framework, {}), framework);
}

TEST(Transform, ApplicabilityViolations) {
  const Model m = parse_or_throw(
      "model M {\n"
      "  class A {\n"
      "    method slow() { tags { variable, static } }\n"
      "    method fast() { tags { variable, dynamic } }\n"
      "    method plain()\n"
      "  }\n"
      "  class B { tags { extensible, static } method keep() }\n"
      "}");
  expect_throws_with([&] { apply_strategy(m, "A", "slow"); },
                     "dynamic variation points only");
  expect_throws_with([&] { apply_strategy(m, "A", "plain"); },
                     "expects a {variable} method");
  expect_throws_with([&] { apply_unification(m, "A", "fast"); },
                     "static variation points only");
  expect_throws_with([&] { apply_unification(m, "A", std::nullopt); },
                     "expects an {extensible} class");
  expect_throws_with([&] { apply_hook_list(m, "B", "keep"); },
                     "dynamic variation points only");
  expect_throws_with([&] { apply_mop(m, "A", "slow", {{"p", std::nullopt}}); },
                     "dynamic variation points only");
  expect_throws_with([&] { apply_mop(m, "A", "fast", {}); },
                     "at least one Boolean parameter");
  expect_throws_with([&] { apply_mop(m, "A", "fast", {{"p", std::nullopt},
                                                      {"p", std::nullopt}}); },
                     "duplicate mop parameter");
  expect_throws_with([&] { apply_strategy(m, "Ghost", "slow"); },
                     "no class named 'Ghost'");
  expect_throws_with([&] { apply_strategy(m, "A", "ghost"); },
                     "has no method 'ghost'");
}

TEST(Transform, StaticMethodOnDynamicClassIsRejected) {
  // Unification would stamp {static} on a class already marked {dynamic}; the
  // rewrite refuses rather than leave contradictory timing markers.
  const Model m = parse_or_throw(
      "model M {\n"
      "  class C {\n"
      "    tags { extensible, dynamic }\n"
      "    method keep()\n"
      "    method pick() { tags { variable, static } }\n"
      "  }\n"
      "}");
  expect_throws_with([&] { apply_unification(m, "C", "pick"); },
                     "carries {dynamic}; rewrite that locus first");
}

TEST(Transform, GeneratedNamesMustBeFresh) {
  Model m = load_fixture("webedu.umlf");
  ClassDecl squatter;
  squatter.name = "SelectCourseStrategy";
  m.classes.push_back(std::move(squatter));
  expect_throws_with([&] { apply_strategy(m, "SelectCourse", "selectCourse"); },
                     "the name is taken");
}

TEST(Transform, HookMemberNamesMustBeFresh) {
  Model m = load_fixture("webedu.umlf");
  MethodDecl clash;
  clash.name = "addHook";
  m.find_class("ShowCourse")->methods.push_back(std::move(clash));
  expect_throws_with([&] { apply_hook_list(m, "ShowCourse", "showContent"); },
                     "needs the member name 'addHook'");
}

TEST(Transform, ReservedRolesAreRejectedWhenRewriting) {
  Model m = load_fixture("webedu.umlf");
  m.relationships[0].kind = RelationKind::Aggregation;
  m.relationships[0].role = "strategy";
  const std::vector<Binding> plan = parse_bindings(fixture_text("webedu.bind"));
  expect_throws_with([&] { transform_all(m, plan); }, "aggregation role 'strategy'");
  // With nothing to rewrite the model is left alone, reserved roles included.
  const Model framework = load_fixture("webedu_framework.umlf");
  EXPECT_NO_THROW(transform_all(framework, {}));
}

TEST(Transform, CoverageErrors) {
  const Model m = load_fixture("webedu.umlf");
  std::vector<Binding> partial = {
      {"SelectCourse", "selectCourse", ImplementationModelId::Strategy, {}, {}}};
  expect_throws_with([&] { transform_all(m, partial); },
                     "no binding covers variation point");

  std::vector<Binding> full = parse_bindings(fixture_text("webedu.bind"));
  std::vector<Binding> doubled = full;
  doubled.push_back(full[0]);
  expect_throws_with([&] { transform_all(m, doubled); }, "duplicate binding");

  std::vector<Binding> stray = full;
  stray.push_back({"Student", std::nullopt, ImplementationModelId::Unification,
                   {}, {}});
  expect_throws_with([&] { transform_all(m, stray); },
                     "matches no variable method or extensible class");

  std::vector<Binding> misapplied = full;
  misapplied[0].model_id = ImplementationModelId::Unification;
  expect_throws_with([&] { transform_all(m, misapplied); }, "does not apply to");
}

TEST(Transform, InvalidModelsAreRejectedUpFront) {
  Model broken = load_fixture("webedu.umlf");
  broken.find_class("Student")->tags.add(Tag::Variable);
  const std::vector<Binding> plan = parse_bindings(fixture_text("webedu.bind"));
  expect_throws_with([&] { transform_all(broken, plan); },
                     "model has validation errors");
}

TEST(Transform, ParseBindingsGolden) {
  const std::vector<Binding> plan = parse_bindings(fixture_text("webedu.bind"));
  ASSERT_EQ(plan.size(), 2u);
  EXPECT_EQ(plan[0].class_name, "SelectCourse");
  EXPECT_EQ(plan[0].method_name, "selectCourse");
  EXPECT_EQ(plan[0].model_id, ImplementationModelId::Strategy);
  EXPECT_EQ(plan[1].class_name, "ShowCourse");
  EXPECT_EQ(plan[1].method_name, std::nullopt);
  EXPECT_EQ(plan[1].model_id, ImplementationModelId::HookList);
  EXPECT_EQ(plan[1].before, "showContent");

  const std::vector<Binding> mop_plan = parse_bindings(fixture_text("webedu_mop.bind"));
  ASSERT_EQ(mop_plan.size(), 2u);
  ASSERT_EQ(mop_plan[0].mop_params.size(), 3u);
  EXPECT_EQ(mop_plan[0].mop_params[0], (MopParam{"login", "ask for a login first"}));
  EXPECT_EQ(mop_plan[0].mop_params[1], (MopParam{"major", std::nullopt}));
}

TEST(Transform, ParseBindingsRejectsMalformedLines) {
  expect_throws_with([] { parse_bindings("A -> strategy\n"); }, "bindings line 1");
  expect_throws_with([] { parse_bindings("\n\nA.f => nonsense\n"); },
                     "bindings line 3");
  expect_throws_with([] { parse_bindings("A => hook-list\n"); }, "before");
  EXPECT_TRUE(parse_bindings("// only a comment\n\n").empty());
}

TEST(Transform, RandomRewritesLeaveNoBindableLociAndNoErrors) {
  std::mt19937 rng(7031);
  int rewritten = 0;
  for (int i = 0; i < 60; ++i) {
    const Model before = test::random_model(rng);
    const std::vector<Binding> plan = test::random_bindings(before, rng);
    const Model after = transform_all(before, plan);
    if (!plan.empty()) ++rewritten;

    for (const VariationPoint& vp : classify_variation_points(after))
      EXPECT_EQ(vp.kind, VariationPoint::Kind::ExtensibleInterface);
    const std::vector<Diagnostic> findings = validate(after);
    EXPECT_FALSE(has_errors(findings)) << render(findings[0]);

    const std::set<std::string> keep = test::untouched_paths(before, plan);
    EXPECT_TRUE(structural_diff(before, after, keep).empty());
  }
  EXPECT_GT(rewritten, 0);
}

}  // namespace
}  // namespace umlf
