#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "umlf/tags.hpp"

namespace umlf {

// Raised by operations whose preconditions are violated (unresolved names,
// inapplicable rewrites, collisions). Recoverable findings are reported as
// Diagnostic values instead.
class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& message) : std::runtime_error(message) {}
};

enum class Visibility : std::uint8_t { Public, Protected, Private };
enum class ClassKind : std::uint8_t { Class, Interface };
enum class RelationKind : std::uint8_t {
  Generalization,
  Realization,
  Aggregation,
  Association,
};

std::string_view to_keyword(Visibility v);
std::string_view to_keyword(ClassKind k);
std::string_view to_keyword(RelationKind k);

struct AttributeDecl {
  std::string name;
  std::string type_name;  // declared class name or opaque primitive
  Visibility visibility = Visibility::Public;
  std::optional<std::string> doc;

  bool operator==(const AttributeDecl&) const = default;
};

struct Param {
  std::string name;
  std::string type_name;

  bool operator==(const Param&) const = default;
};

struct MethodDecl {
  std::string name;
  std::vector<Param> params;
  std::optional<std::string> return_type;
  Visibility visibility = Visibility::Public;
  bool is_abstract = false;
  TagSet tags;
  // Hook interface whose registered hooks run before this method's body.
  std::optional<std::string> hook_point;

  bool operator==(const MethodDecl&) const = default;
};

struct RestrictionClause {
  enum class Scope : std::uint8_t { Method, ForAllNewMethods };
  enum class Form : std::uint8_t { Preserves, Pure, Opaque };

  Scope scope = Scope::ForAllNewMethods;
  std::string method_name;  // set iff scope == Method
  Form form = Form::Opaque;
  // Preserves: attribute name. Opaque: verbatim constraint text. Pure: unused.
  std::string detail;
  bool satisfied_by_construction = false;

  bool operator==(const RestrictionClause&) const = default;
};

struct ClassDecl {
  std::string name;
  ClassKind kind = ClassKind::Class;
  bool is_abstract = false;
  std::vector<std::string> supertypes;  // inline ": A, B" form only
  std::vector<AttributeDecl> attributes;
  std::vector<MethodDecl> methods;
  TagSet tags;
  std::vector<RestrictionClause> constraints;

  const MethodDecl* find_method(std::string_view name) const;
  const AttributeDecl* find_attribute(std::string_view name) const;

  bool operator==(const ClassDecl&) const = default;
};

struct Relationship {
  RelationKind kind = RelationKind::Association;
  std::string source;
  std::string target;
  std::optional<std::string> role;          // aggregation/association only
  std::optional<std::string> multiplicity;  // aggregation/association only
  TagSet tags;

  bool operator==(const Relationship&) const = default;
};

struct Event {
  std::string name;
  bool optional = false;

  bool operator==(const Event&) const = default;
};

struct SequencePattern {
  std::string name;
  std::string owner_class;
  std::string owner_method;
  std::vector<Event> events;

  bool operator==(const SequencePattern&) const = default;
};

// Boolean parameter assignment recorded when an instance configures a
// meta-object class.
struct MopConfig {
  std::string class_name;
  std::vector<std::pair<std::string, bool>> values;

  bool operator==(const MopConfig&) const = default;
};

struct Model {
  std::string name;
  // Set on models produced by instantiation; absent on framework designs.
  std::optional<std::string> instance_name;
  std::vector<MopConfig> mop_configs;
  std::vector<ClassDecl> classes;
  std::vector<Relationship> relationships;
  std::vector<SequencePattern> sequence_patterns;

  const ClassDecl* find_class(std::string_view name) const;
  ClassDecl* find_class(std::string_view name);
  bool is_instance() const { return instance_name.has_value(); }

  // Names reachable as supertypes of the class: the inline list followed by
  // generalization/realization targets, first occurrence wins.
  std::vector<std::string> effective_supertypes(const ClassDecl& cls) const;

  bool operator==(const Model&) const = default;
};

struct Diagnostic {
  enum class Severity : std::uint8_t { Error, Warning };

  std::string code;
  Severity severity = Severity::Error;
  std::string path;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

bool has_errors(const std::vector<Diagnostic>& diagnostics);
// "<severity> <code> <path>: <message>"
std::string render(const Diagnostic& d);

// "method m preserves a", "for-all-new-methods pure", ... with a trailing
// "(satisfied by construction)" when flagged.
std::string to_text(const RestrictionClause& clause);

// Element paths: "Model.Class", "Model.Class.member", "Model.rel[i]",
// "Model.seq[i]".
std::string class_path(const Model& m, std::string_view class_name);
std::string member_path(const Model& m, std::string_view class_name,
                        std::string_view member_name);
std::string relationship_path(const Model& m, std::size_t index);
std::string sequence_path(const Model& m, std::size_t index);

}  // namespace umlf
