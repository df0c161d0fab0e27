#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "umlf/model.hpp"
#include "umlf/variation.hpp"

namespace umlf {

enum class ImplementationModelId : std::uint8_t {
  Strategy,
  Unification,
  HookList,
  Mop,
};

std::string_view to_keyword(ImplementationModelId id);
std::optional<ImplementationModelId> implementation_model_from_name(
    std::string_view name);

struct ImplementationModel {
  ImplementationModelId id;
  std::string_view name;
  // Locus kind and timing combinations the rewrite accepts.
  std::vector<std::pair<VariationPoint::Kind, Timing>> applies_to;
  std::string_view params;  // human-readable parameter schema
};

std::span<const ImplementationModel> implementation_models();
bool applicable(ImplementationModelId id, VariationPoint::Kind kind, Timing timing);

struct MopParam {
  std::string name;
  std::optional<std::string> description;

  bool operator==(const MopParam&) const = default;
};

struct Binding {
  std::string class_name;
  std::optional<std::string> method_name;  // absent for extensible classes
  ImplementationModelId model_id = ImplementationModelId::Strategy;
  std::optional<std::string> before;  // hook-list invocation point
  std::vector<MopParam> mop_params;

  bool operator==(const Binding&) const = default;
};

// One binding per line: "<Class>[.<method>] => <model>[(<params>)]".
// hook-list takes before=<method>; mop takes a name[="description"] list.
// Throws ModelError with a line reference on malformed input.
std::vector<Binding> parse_bindings(std::string_view text);

// Each rewrite is a pure function from model to model. Preconditions are
// checked and violations raised as ModelError. Aggregation roles "strategy",
// "hooks" and "mop" are reserved for the rewrites' own output.

// {variable, dynamic} method m on C: removes C.m, adds the abstract class
// UpperCamel(m)+"Strategy" carrying m, a role-"strategy" aggregation, and the
// separation-template/separation-hook role tags. Patterns and method-scoped
// clauses of C.m follow the method.
Model apply_strategy(const Model& m, const std::string& class_name,
                     const std::string& method_name);

// Static variable method or static extensible class: the class becomes
// abstract and keeps a class-level {static} marker; the locus tags are
// dropped. With a method locus the method also becomes abstract.
Model apply_unification(const Model& m, const std::string& class_name,
                        const std::optional<std::string>& method_name = std::nullopt);

// {extensible, dynamic} class C: adds the interface C+"Hook" with abstract
// invoke(), addHook/removeHook on C, a role-"hooks" aggregation, and records
// the invocation point on C.before. for-all-new-methods clauses of C move to
// the hook interface unchanged in scope; preserves clauses over private
// attributes are flagged satisfied by construction.
Model apply_hook_list(const Model& m, const std::string& class_name,
                      const std::string& before);

// {variable, dynamic} method m on C: moves m to the concrete class
// UpperCamel(m)+"MOP" configured by one private Boolean attribute per
// parameter, linked through a role-"mop" aggregation.
Model apply_mop(const Model& m, const std::string& class_name,
                const std::string& method_name, const std::vector<MopParam>& params);

// Applies one binding per variable-method/extensible-class point in
// classification order. Requires an error-free model, full coverage, and an
// applicable model per binding.
Model transform_all(const Model& m, const std::vector<Binding>& bindings);

std::string upper_camel(std::string_view name);

}  // namespace umlf
