#include "umlf/print.hpp"

#include <string>

namespace umlf {

namespace {

std::string quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string tag_block(const TagSet& tags) {
  std::string out = "tags { ";
  bool first = true;
  tags.for_each([&](Tag t) {
    if (!first) out += ", ";
    first = false;
    out += tag_name(t);
  });
  out += " }";
  return out;
}

void append_props(std::string& out, const std::vector<std::string>& props) {
  if (props.empty()) return;
  out += " { ";
  for (std::size_t i = 0; i < props.size(); ++i) {
    if (i) out += ", ";
    out += props[i];
  }
  out += " }";
}

void print_attribute(std::string& out, const AttributeDecl& attr) {
  out += "    attr " + attr.name + ": " + attr.type_name;
  std::vector<std::string> props;
  if (attr.visibility != Visibility::Public)
    props.emplace_back(to_keyword(attr.visibility));
  if (attr.doc) props.push_back("doc " + quote(*attr.doc));
  append_props(out, props);
  out += "\n";
}

void print_method(std::string& out, const MethodDecl& method) {
  out += "    method " + method.name + "(";
  for (std::size_t i = 0; i < method.params.size(); ++i) {
    if (i) out += ", ";
    out += method.params[i].name + ": " + method.params[i].type_name;
  }
  out += ")";
  if (method.return_type) out += ": " + *method.return_type;
  std::vector<std::string> props;
  if (method.visibility != Visibility::Public)
    props.emplace_back(to_keyword(method.visibility));
  if (method.is_abstract) props.emplace_back("abstract");
  if (method.hook_point) props.push_back("hook-point " + *method.hook_point);
  if (!method.tags.empty()) props.push_back(tag_block(method.tags));
  append_props(out, props);
  out += "\n";
}

void print_constraint(std::string& out, const RestrictionClause& clause) {
  out += "    constraint ";
  if (clause.scope == RestrictionClause::Scope::ForAllNewMethods)
    out += "forAllNewMethods";
  else
    out += "method " + clause.method_name;
  switch (clause.form) {
    case RestrictionClause::Form::Preserves:
      out += " preserves " + clause.detail;
      break;
    case RestrictionClause::Form::Pure:
      out += " pure";
      break;
    case RestrictionClause::Form::Opaque:
      out += " text " + quote(clause.detail);
      break;
  }
  if (clause.satisfied_by_construction) out += " satisfied-by-construction";
  out += "\n";
}

void print_class(std::string& out, const ClassDecl& cls) {
  out += "  ";
  if (cls.is_abstract) out += "abstract ";
  out += to_keyword(cls.kind);
  out += " " + cls.name;
  for (std::size_t i = 0; i < cls.supertypes.size(); ++i)
    out += (i == 0 ? " : " : ", ") + cls.supertypes[i];
  out += " {\n";
  if (!cls.tags.empty()) out += "    " + tag_block(cls.tags) + "\n";
  for (const AttributeDecl& attr : cls.attributes) print_attribute(out, attr);
  for (const MethodDecl& method : cls.methods) print_method(out, method);
  for (const RestrictionClause& clause : cls.constraints)
    print_constraint(out, clause);
  out += "  }\n";
}

void print_relationship(std::string& out, const Relationship& rel) {
  out += "  ";
  out += to_keyword(rel.kind);
  out += " " + rel.source + " -> " + rel.target;
  if (rel.role) out += " role " + *rel.role;
  if (rel.multiplicity) out += " mult " + quote(*rel.multiplicity);
  if (!rel.tags.empty()) out += " { " + tag_block(rel.tags) + " }";
  out += "\n";
}

void print_sequence(std::string& out, const SequencePattern& pattern) {
  out += "  sequence " + pattern.name + " for " + pattern.owner_class + "." +
         pattern.owner_method + " {\n";
  for (const Event& event : pattern.events) {
    out += "    event " + event.name;
    if (event.optional) out += " { optional }";
    out += "\n";
  }
  out += "  }\n";
}

}  // namespace

std::string print_model(const Model& m) {
  std::string out = "model " + m.name + " {\n";
  if (m.instance_name) out += "  instance " + *m.instance_name + "\n";
  for (const MopConfig& config : m.mop_configs) {
    out += "  configure " + config.class_name + " { ";
    for (std::size_t i = 0; i < config.values.size(); ++i) {
      if (i) out += ", ";
      out += config.values[i].first;
      out += " = ";
      out += config.values[i].second ? "true" : "false";
    }
    out += " }\n";
  }
  for (const ClassDecl& cls : m.classes) print_class(out, cls);
  for (const Relationship& rel : m.relationships) print_relationship(out, rel);
  for (const SequencePattern& pattern : m.sequence_patterns)
    print_sequence(out, pattern);
  out += "}\n";
  return out;
}

}  // namespace umlf
