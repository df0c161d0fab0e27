#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "umlf/model.hpp"

namespace umlf {

enum class Timing : std::uint8_t { Static, Dynamic };

std::string_view to_keyword(Timing t);

struct VariationPoint {
  enum class Kind : std::uint8_t {
    VariableMethod,
    ExtensibleClass,
    ExtensibleInterface,
  };

  Kind kind;
  Timing timing;
  std::string class_name;  // owner, or parent end for ExtensibleInterface
  std::string method_name;  // VariableMethod only
  std::size_t relationship_index = 0;  // ExtensibleInterface only

  bool operator==(const VariationPoint&) const = default;
};

std::string_view to_keyword(VariationPoint::Kind k);
std::string locus_path(const Model& m, const VariationPoint& vp);

// Exactly one of {static}/{dynamic}; nullopt when neither, throws via caller
// conventions when both (see timing_of_locus).
std::optional<Timing> timing_of(const TagSet& tags);

// Every {variable} method, {extensible} class, and {incomplete}
// generalization/realization, grouped in that kind order, declaration order
// within each kind. Throws ModelError when a locus does not carry exactly one
// timing tag.
std::vector<VariationPoint> classify_variation_points(const Model& m);

// A class whose open subclass set forms an extension point: either the target
// of an {incomplete} generalization/realization, or an abstract class or
// interface carrying a timing tag (the shape every rewrite leaves behind).
bool is_extension_parent(const Model& m, const ClassDecl& cls);

// Timing of an extension parent: the class tag when present, otherwise the
// timing of its first {incomplete} relationship.
Timing extension_parent_timing(const Model& m, const ClassDecl& cls);

// True when a sequence pattern on this method documents a variation point:
// the method is {variable}, or an abstract method of an extension parent, or
// a method of a meta-object class (target of a "mop" aggregation).
bool is_pattern_locus(const Model& m, const ClassDecl& cls, const MethodDecl& method);

}  // namespace umlf
