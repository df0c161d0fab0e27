#include "umlf/model.hpp"

#include <algorithm>

namespace umlf {

std::string_view to_keyword(Visibility v) {
  switch (v) {
    case Visibility::Public: return "public";
    case Visibility::Protected: return "protected";
    case Visibility::Private: return "private";
  }
  return "public";
}

std::string_view to_keyword(ClassKind k) {
  return k == ClassKind::Interface ? "interface" : "class";
}

std::string_view to_keyword(RelationKind k) {
  switch (k) {
    case RelationKind::Generalization: return "generalization";
    case RelationKind::Realization: return "realization";
    case RelationKind::Aggregation: return "aggregation";
    case RelationKind::Association: return "association";
  }
  return "association";
}

const MethodDecl* ClassDecl::find_method(std::string_view name) const {
  for (const MethodDecl& m : methods)
    if (m.name == name) return &m;
  return nullptr;
}

const AttributeDecl* ClassDecl::find_attribute(std::string_view name) const {
  for (const AttributeDecl& a : attributes)
    if (a.name == name) return &a;
  return nullptr;
}

const ClassDecl* Model::find_class(std::string_view name) const {
  for (const ClassDecl& c : classes)
    if (c.name == name) return &c;
  return nullptr;
}

ClassDecl* Model::find_class(std::string_view name) {
  for (ClassDecl& c : classes)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<std::string> Model::effective_supertypes(const ClassDecl& cls) const {
  std::vector<std::string> result = cls.supertypes;
  for (const Relationship& rel : relationships) {
    if (rel.kind != RelationKind::Generalization &&
        rel.kind != RelationKind::Realization)
      continue;
    if (rel.source != cls.name) continue;
    if (std::find(result.begin(), result.end(), rel.target) == result.end())
      result.push_back(rel.target);
  }
  return result;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& d) {
    return d.severity == Diagnostic::Severity::Error;
  });
}

std::string render(const Diagnostic& d) {
  std::string out = d.severity == Diagnostic::Severity::Error ? "error " : "warning ";
  out += d.code;
  out += " ";
  out += d.path;
  out += ": ";
  out += d.message;
  return out;
}

std::string to_text(const RestrictionClause& clause) {
  std::string out = clause.scope == RestrictionClause::Scope::ForAllNewMethods
                        ? "for-all-new-methods"
                        : "method " + clause.method_name;
  switch (clause.form) {
    case RestrictionClause::Form::Preserves:
      out += " preserves " + clause.detail;
      break;
    case RestrictionClause::Form::Pure:
      out += " pure";
      break;
    case RestrictionClause::Form::Opaque:
      out += " text \"" + clause.detail + "\"";
      break;
  }
  if (clause.satisfied_by_construction) out += " (satisfied by construction)";
  return out;
}

std::string class_path(const Model& m, std::string_view class_name) {
  std::string out = m.name;
  out += ".";
  out += class_name;
  return out;
}

std::string member_path(const Model& m, std::string_view class_name,
                        std::string_view member_name) {
  std::string out = class_path(m, class_name);
  out += ".";
  out += member_name;
  return out;
}

std::string relationship_path(const Model& m, std::size_t index) {
  return m.name + ".rel[" + std::to_string(index) + "]";
}

std::string sequence_path(const Model& m, std::size_t index) {
  return m.name + ".seq[" + std::to_string(index) + "]";
}

}  // namespace umlf
