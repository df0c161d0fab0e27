#include "umlf/codegen.hpp"

#include <sstream>

#include "umlf/validate.hpp"
#include "umlf/variation.hpp"

namespace umlf {

namespace {

void print_signature(std::ostream& out, const MethodDecl& method) {
  out << method.name << "(";
  bool first = true;
  for (const Param& param : method.params) {
    if (!first) out << ", ";
    first = false;
    out << param.name << ": " << param.type_name;
  }
  out << ")";
  if (method.return_type) out << ": " << *method.return_type;
}

void print_clause(std::ostream& out, const RestrictionClause& clause) {
  out << "@RESTRICTION " << to_text(clause) << "\n";
}

class Generator {
 public:
  explicit Generator(const Model& model) : model_(model) {}

  FileSet run() {
    for (const ClassDecl& cls : model_.classes)
      files_[cls.name + ".skel"] = render_class(cls);
    return std::move(files_);
  }

 private:
  const Model& model_;
  FileSet files_;

  const MopConfig* config_for(const std::string& class_name) const {
    for (const MopConfig& config : model_.mop_configs)
      if (config.class_name == class_name) return &config;
    return nullptr;
  }

  std::string render_class(const ClassDecl& cls) {
    std::ostringstream out;
    if (cls.is_abstract) out << "abstract ";
    out << (cls.kind == ClassKind::Interface ? "interface " : "class ")
        << cls.name;
    const std::vector<std::string> supers = model_.effective_supertypes(cls);
    bool first = true;
    for (const std::string& super : supers) {
      out << (first ? " : " : ", ") << super;
      first = false;
    }
    if (cls.tags.contains(Tag::ApplClass)) out << "  // application class";
    out << "\n";

    const std::optional<Timing> class_timing = timing_of(cls.tags);
    if (cls.tags.contains(Tag::Extensible) && class_timing)
      out << "@HOT-SPOT(extensible-class, " << to_keyword(*class_timing)
          << ")\n";
    for (const RestrictionClause& clause : cls.constraints)
      print_clause(out, clause);

    std::ostringstream body;
    render_attributes(body, cls);
    render_methods(body, cls);
    render_delegations(body, cls);
    render_parts(body, cls);
    const std::string rendered = body.str();
    if (!rendered.empty()) out << "\n" << rendered;
    return out.str();
  }

  void render_attributes(std::ostream& out, const ClassDecl& cls) {
    const MopConfig* config = config_for(cls.name);
    for (const AttributeDecl& attr : cls.attributes) {
      out << "  ";
      if (attr.visibility == Visibility::Protected) out << "protected ";
      if (attr.visibility == Visibility::Private) out << "private ";
      out << "attr " << attr.name << ": " << attr.type_name;
      if (config) {
        for (const auto& [key, value] : config->values)
          if (key == attr.name) out << " = " << (value ? "true" : "false");
      }
      if (attr.doc) out << "  // " << *attr.doc;
      out << "\n";
    }
  }

  void render_methods(std::ostream& out, const ClassDecl& cls) {
    const bool parent = is_extension_parent(model_, cls);
    for (const MethodDecl& method : cls.methods) {
      const std::optional<Timing> timing = timing_of(method.tags);
      if (method.tags.contains(Tag::Variable) && timing) {
        out << "  @HOT-SPOT(variable-method, " << to_keyword(*timing) << ")\n";
      } else if (parent && method.is_abstract) {
        out << "  @HOT-SPOT(extensible-interface, "
            << to_keyword(extension_parent_timing(model_, cls)) << ")\n";
      }
      out << "  ";
      if (method.visibility == Visibility::Protected) out << "protected ";
      if (method.visibility == Visibility::Private) out << "private ";
      if (method.is_abstract) out << "abstract ";
      out << "method ";
      print_signature(out, method);
      if (method.hook_point) out << "  // notifies " << *method.hook_point;
      out << "\n";
    }
  }

  // A class that owns a strategy or meta-object part re-exposes the moved
  // behaviour through forwarding stubs.
  void render_delegations(std::ostream& out, const ClassDecl& cls) {
    for (const Relationship& rel : model_.relationships) {
      if (rel.kind != RelationKind::Aggregation || rel.source != cls.name)
        continue;
      if (rel.role != "strategy" && rel.role != "mop") continue;
      const ClassDecl* part = model_.find_class(rel.target);
      if (!part) continue;
      for (const MethodDecl& method : part->methods) {
        out << "  method ";
        print_signature(out, method);
        out << "  // delegates to " << *rel.role << "\n";
      }
    }
  }

  void render_parts(std::ostream& out, const ClassDecl& cls) {
    for (const Relationship& rel : model_.relationships) {
      if (rel.source != cls.name) continue;
      if (rel.kind == RelationKind::Aggregation) {
        out << "  has ";
        if (rel.role) out << *rel.role << ": ";
        out << rel.target;
        if (rel.multiplicity) out << " [" << *rel.multiplicity << "]";
        out << "\n";
      } else if (rel.kind == RelationKind::Association) {
        out << "  uses " << rel.target;
        if (rel.role) out << " as " << *rel.role;
        out << "\n";
      }
    }
  }
};

}  // namespace

FileSet generate(const Model& model) {
  const std::vector<Diagnostic> diagnostics = validate(model);
  for (const Diagnostic& d : diagnostics)
    if (d.severity == Diagnostic::Severity::Error)
      throw ModelError("cannot generate from an invalid model: " + render(d));
  return Generator(model).run();
}

}  // namespace umlf
