#pragma once

#include <optional>
#include <string>
#include <vector>

#include "umlf/conformance.hpp"
#include "umlf/model.hpp"
#include "umlf/parse.hpp"
#include "umlf/variation.hpp"

namespace umlf {

struct Signature {
  std::string name;
  std::vector<Param> params;
  std::optional<std::string> return_type;

  static Signature of(const MethodDecl& method);
  // "name(param: Type, ...): Return"
  std::string to_string() const;

  bool operator==(const Signature&) const = default;
};

// One per extension parent: what an application class subclassing it must
// provide, plus the restrictions and protocols it inherits.
struct Obligation {
  std::string interface_name;
  std::vector<Signature> abstract_methods;
  std::vector<RestrictionClause> attached_clauses;
  std::vector<SequencePattern> attached_patterns;
  Timing timing = Timing::Static;

  bool operator==(const Obligation&) const = default;
};

struct MethodImpl {
  Signature signature;
  EffectSummary effects;

  bool operator==(const MethodImpl&) const = default;
};

struct AppClassSpec {
  std::string name;
  std::string supertype;
  std::vector<MethodImpl> methods;      // implementations of abstract methods
  std::vector<MethodImpl> new_methods;  // methods beyond the obligation

  bool operator==(const AppClassSpec&) const = default;
};

struct InstantiationSpec {
  std::string instance_name;
  std::string framework_name;
  std::vector<AppClassSpec> app_classes;
  std::vector<MopConfig> mop_configs;

  bool operator==(const InstantiationSpec&) const = default;
};

struct SpecParseResult {
  std::optional<InstantiationSpec> spec;
  std::vector<ParseError> errors;

  bool ok() const { return spec.has_value(); }
};

// "instance N of F { class A : P { method m(...) { reads{..} writes{..}
// trace [..] } } configure M { p = true } }". The parser cannot see the
// framework, so every method lands in `methods`; verification sorts
// implementations from new methods.
SpecParseResult parse_instantiation_spec(std::string_view source);
std::string print_instantiation_spec(const InstantiationSpec& spec);

// Extension parents of a transformed framework in declaration order. Throws
// ModelError when the framework still carries {variable} or {extensible}.
std::vector<Obligation> list_obligations(const Model& framework);

// Checks a spec without building anything: framework still open (E200),
// instance/framework name mismatch (E208), unknown supertype (E203), name
// collisions (E206), signature mismatches (E207), uncovered abstract methods
// (E201), effect-summary violations (E101/E102/W101), trace violations
// (E202), and meta-object configuration problems (E204/E205).
std::vector<Diagnostic> verify_instance(const Model& framework,
                                        const InstantiationSpec& spec);

struct InstantiationResult {
  std::optional<Model> model;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return model.has_value(); }
};

// Builds the instance model when verify_instance reports no errors: one
// {appl-class} class per spec entry (plus {c-hook} under a separation-hook
// parent), a completed generalization or realization to the supertype, and
// {incomplete}/timing tags stripped from satisfied obligations. Warnings are
// passed through beside the model.
InstantiationResult instantiate(const Model& framework, const InstantiationSpec& spec);

}  // namespace umlf
