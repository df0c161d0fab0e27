#include "umlf/validate.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "umlf/variation.hpp"

namespace umlf {

namespace {

using Severity = Diagnostic::Severity;

class Validator {
 public:
  explicit Validator(const Model& m) : model_(m) {}

  std::vector<Diagnostic> run() {
    for (const ClassDecl& cls : model_.classes) check_class(cls);
    for (std::size_t i = 0; i < model_.relationships.size(); ++i)
      check_relationship(i);
    for (std::size_t i = 0; i < model_.sequence_patterns.size(); ++i)
      check_sequence(i);
    std::stable_sort(diagnostics_.begin(), diagnostics_.end(),
                     [](const Diagnostic& a, const Diagnostic& b) {
                       if (a.path != b.path) return a.path < b.path;
                       return a.code < b.code;
                     });
    return std::move(diagnostics_);
  }

 private:
  const Model& model_;
  std::vector<Diagnostic> diagnostics_;

  void report(const char* code, Severity severity, std::string path,
              std::string message) {
    diagnostics_.push_back({code, severity, std::move(path), std::move(message)});
  }

  void check_class(const ClassDecl& cls) {
    const std::string path = class_path(model_, cls.name);
    if (cls.tags.contains(Tag::Variable))
      report("UMLF-E001", Severity::Error, path, "{variable} applies only to methods");
    if (cls.tags.contains(Tag::Incomplete))
      report("UMLF-E003", Severity::Error, path,
             "{incomplete} applies only to generalizations and realizations");
    if (cls.tags.contains(Tag::Optional))
      report("UMLF-E008", Severity::Error, path,
             "{optional} applies only to sequence events");

    const bool timing_tagged =
        cls.tags.contains(Tag::Static) || cls.tags.contains(Tag::Dynamic);
    if (cls.tags.contains(Tag::Static) && cls.tags.contains(Tag::Dynamic)) {
      report("UMLF-E005", Severity::Error, path,
             "{static} and {dynamic} are mutually exclusive");
    } else if (cls.tags.contains(Tag::Extensible)) {
      if (!timing_tagged)
        report("UMLF-E004", Severity::Error, path,
               "extensible class needs {static} or {dynamic}");
    } else if (timing_tagged && !cls.is_abstract && cls.kind != ClassKind::Interface) {
      report("UMLF-E009", Severity::Error, path,
             "timing tags belong on variation-point loci");
    }

    if (cls.tags.contains(Tag::ApplClass) && !model_.is_instance())
      check_appl_class(cls, path);

    for (const MethodDecl& method : cls.methods) check_method(cls, method);

    const bool clause_host = cls.tags.contains(Tag::Extensible) ||
                             is_extension_parent(model_, cls);
    for (const RestrictionClause& clause : cls.constraints) {
      if (clause.scope == RestrictionClause::Scope::ForAllNewMethods && !clause_host)
        report("UMLF-E007", Severity::Error, path,
               "for-all-new-methods constraint on a class that accepts no new methods");
      if (clause.form == RestrictionClause::Form::Preserves &&
          !attribute_visible(cls, clause.detail))
        report("UMLF-E010", Severity::Error, path,
               "preserves names undeclared attribute '" + clause.detail + "'");
    }

    if (is_incomplete_target(cls.name)) {
      bool has_abstract = false;
      for (const MethodDecl& method : cls.methods)
        if (method.is_abstract) has_abstract = true;
      if (!has_abstract)
        report("UMLF-W001", Severity::Warning, path,
               "extension parent declares no abstract methods");
    }
  }

  // A preserves clause may name an attribute of the declaring class, an
  // inherited one, or one owned by a class the declaring class is a part of
  // (clauses follow methods into strategy and hook classes).
  bool attribute_visible(const ClassDecl& cls, const std::string& attr) const {
    std::vector<const ClassDecl*> open = {&cls};
    std::set<std::string> seen = {cls.name};
    while (!open.empty()) {
      const ClassDecl* current = open.back();
      open.pop_back();
      if (current->find_attribute(attr)) return true;
      for (const std::string& super : model_.effective_supertypes(*current)) {
        if (!seen.insert(super).second) continue;
        if (const ClassDecl* decl = model_.find_class(super)) open.push_back(decl);
      }
    }
    for (const Relationship& rel : model_.relationships) {
      if (rel.kind != RelationKind::Aggregation || rel.target != cls.name)
        continue;
      const ClassDecl* owner = model_.find_class(rel.source);
      if (owner && owner->find_attribute(attr)) return true;
    }
    return false;
  }

  bool is_incomplete_target(const std::string& name) const {
    for (const Relationship& rel : model_.relationships) {
      if (rel.kind != RelationKind::Generalization &&
          rel.kind != RelationKind::Realization)
        continue;
      if (rel.target == name && rel.tags.contains(Tag::Incomplete)) return true;
    }
    return false;
  }

  void check_appl_class(const ClassDecl& cls, const std::string& path) {
    bool found_edge = false;
    bool all_incomplete = true;
    for (const Relationship& rel : model_.relationships) {
      if (rel.kind != RelationKind::Generalization &&
          rel.kind != RelationKind::Realization)
        continue;
      if (rel.source != cls.name) continue;
      found_edge = true;
      if (!rel.tags.contains(Tag::Incomplete)) all_incomplete = false;
    }
    if (!found_edge || !all_incomplete)
      report("UMLF-E006", Severity::Error, path,
             "application class needs an {incomplete} generalization to its supertype");
  }

  void check_method(const ClassDecl& cls, const MethodDecl& method) {
    const std::string path = member_path(model_, cls.name, method.name);
    if (method.tags.contains(Tag::Extensible))
      report("UMLF-E002", Severity::Error, path, "{extensible} applies only to classes");
    if (method.tags.contains(Tag::Incomplete))
      report("UMLF-E003", Severity::Error, path,
             "{incomplete} applies only to generalizations and realizations");
    if (method.tags.contains(Tag::Optional))
      report("UMLF-E008", Severity::Error, path,
             "{optional} applies only to sequence events");

    const bool timing_tagged =
        method.tags.contains(Tag::Static) || method.tags.contains(Tag::Dynamic);
    if (method.tags.contains(Tag::Static) && method.tags.contains(Tag::Dynamic)) {
      report("UMLF-E005", Severity::Error, path,
             "{static} and {dynamic} are mutually exclusive");
    } else if (method.tags.contains(Tag::Variable)) {
      if (!timing_tagged)
        report("UMLF-E004", Severity::Error, path,
               "variable method needs {static} or {dynamic}");
    } else if (timing_tagged) {
      report("UMLF-E009", Severity::Error, path,
             "timing tags belong on variation-point loci");
    }
  }

  void check_relationship(std::size_t index) {
    const Relationship& rel = model_.relationships[index];
    const std::string path = relationship_path(model_, index);
    const bool structural = rel.kind == RelationKind::Generalization ||
                            rel.kind == RelationKind::Realization;
    if (rel.tags.contains(Tag::Variable))
      report("UMLF-E001", Severity::Error, path, "{variable} applies only to methods");
    if (rel.tags.contains(Tag::Extensible))
      report("UMLF-E002", Severity::Error, path, "{extensible} applies only to classes");
    if (!structural && rel.tags.contains(Tag::Incomplete))
      report("UMLF-E003", Severity::Error, path,
             "{incomplete} applies only to generalizations and realizations");
    if (rel.tags.contains(Tag::Optional))
      report("UMLF-E008", Severity::Error, path,
             "{optional} applies only to sequence events");

    const bool timing_tagged =
        rel.tags.contains(Tag::Static) || rel.tags.contains(Tag::Dynamic);
    if (rel.tags.contains(Tag::Static) && rel.tags.contains(Tag::Dynamic)) {
      report("UMLF-E005", Severity::Error, path,
             "{static} and {dynamic} are mutually exclusive");
    } else if (structural && rel.tags.contains(Tag::Incomplete)) {
      if (!timing_tagged)
        report("UMLF-E004", Severity::Error, path,
               "incomplete relationship needs {static} or {dynamic}");
    } else if (timing_tagged) {
      report("UMLF-E009", Severity::Error, path,
             "timing tags belong on variation-point loci");
    }
  }

  void check_sequence(std::size_t index) {
    const SequencePattern& pattern = model_.sequence_patterns[index];
    const ClassDecl* cls = model_.find_class(pattern.owner_class);
    if (!cls) return;  // unresolved models are the parser's concern
    const MethodDecl* method = cls->find_method(pattern.owner_method);
    if (!method) return;
    if (!is_pattern_locus(model_, *cls, *method))
      report("UMLF-W002", Severity::Warning, sequence_path(model_, index),
             "sequence pattern on the fixed method " + pattern.owner_class + "." +
                 pattern.owner_method);
  }
};

}  // namespace

std::vector<Diagnostic> validate(const Model& m) { return Validator(m).run(); }

}  // namespace umlf
