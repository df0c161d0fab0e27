#include "umlf/instantiate.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "lexer.hpp"

namespace umlf {

namespace {

using detail::Token;
using detail::TokenKind;
using detail::TokenStream;

using Severity = Diagnostic::Severity;

const std::set<std::string, std::less<>> kSpecElements = {"class", "configure"};
const std::set<std::string, std::less<>> kSpecMembers = {"method"};

class SpecParser {
 public:
  SpecParser(std::string_view source, std::vector<ParseError>& errors)
      : errors_(errors), ts_(detail::tokenize(source, errors), errors) {}

  std::optional<InstantiationSpec> run() {
    if (!ts_.accept_ident("instance")) {
      ts_.error_here("'instance'");
      return std::nullopt;
    }
    ts_.expect_ident(spec_.instance_name, "instance name");
    if (!ts_.accept_ident("of")) ts_.error_here("'of'");
    ts_.expect_ident(spec_.framework_name, "framework name");
    ts_.expect(TokenKind::LBrace, "'{'");
    while (!ts_.at_end() && !ts_.check(TokenKind::RBrace)) parse_element();
    ts_.expect(TokenKind::RBrace, "'}'");
    if (!ts_.at_end()) ts_.error_here("end of input");
    if (!errors_.empty()) return std::nullopt;
    return std::move(spec_);
  }

 private:
  std::vector<ParseError>& errors_;
  TokenStream ts_;
  InstantiationSpec spec_;

  void synchronize(const std::set<std::string, std::less<>>& sync) {
    int depth = 0;
    while (!ts_.at_end()) {
      const Token& t = ts_.peek();
      if (depth == 0) {
        if (t.kind == TokenKind::RBrace) return;
        if (t.kind == TokenKind::Ident && sync.count(t.text)) return;
      }
      if (t.kind == TokenKind::LBrace) ++depth;
      if (t.kind == TokenKind::RBrace) --depth;
      ts_.next();
    }
  }

  void parse_element() {
    const std::size_t before = errors_.size();
    if (ts_.check_ident("class")) {
      parse_app_class();
    } else if (ts_.check_ident("configure")) {
      parse_configure();
    } else {
      ts_.error_here("'class' or 'configure'");
      ts_.next();
    }
    if (errors_.size() != before) synchronize(kSpecElements);
  }

  void parse_app_class() {
    ts_.next();  // class
    AppClassSpec cls;
    const Token name_token = ts_.peek();
    if (!ts_.expect_ident(cls.name, "class name")) return;
    for (const AppClassSpec& existing : spec_.app_classes) {
      if (existing.name == cls.name) {
        errors_.push_back({name_token.line, name_token.column,
                           "a unique class name", "'" + cls.name + "'"});
        break;
      }
    }
    if (!ts_.expect(TokenKind::Colon, "':'")) return;
    if (!ts_.expect_ident(cls.supertype, "supertype name")) return;
    if (!ts_.expect(TokenKind::LBrace, "'{'")) return;
    while (!ts_.at_end() && !ts_.check(TokenKind::RBrace)) {
      const std::size_t before = errors_.size();
      if (ts_.check_ident("method")) {
        parse_method(cls);
      } else {
        ts_.error_here("'method'");
        ts_.next();
      }
      if (errors_.size() != before) synchronize(kSpecMembers);
    }
    ts_.expect(TokenKind::RBrace, "'}'");
    spec_.app_classes.push_back(std::move(cls));
  }

  void parse_method(AppClassSpec& cls) {
    ts_.next();  // method
    MethodImpl impl;
    const Token name_token = ts_.peek();
    if (!ts_.expect_ident(impl.signature.name, "method name")) return;
    for (const MethodImpl& existing : cls.methods) {
      if (existing.signature.name == impl.signature.name) {
        errors_.push_back({name_token.line, name_token.column,
                           "a unique method name",
                           "'" + impl.signature.name + "'"});
        break;
      }
    }
    if (!ts_.expect(TokenKind::LParen, "'('")) return;
    std::set<std::string> param_names;
    while (!ts_.check(TokenKind::RParen) && !ts_.at_end()) {
      if (!impl.signature.params.empty() && !ts_.expect(TokenKind::Comma, "','"))
        return;
      Param param;
      const Token param_token = ts_.peek();
      if (!ts_.expect_ident(param.name, "parameter name")) return;
      if (!param_names.insert(param.name).second)
        errors_.push_back({param_token.line, param_token.column,
                           "a unique parameter name", "'" + param.name + "'"});
      if (!ts_.expect(TokenKind::Colon, "':'")) return;
      if (!ts_.expect_ident(param.type_name, "type name")) return;
      impl.signature.params.push_back(std::move(param));
    }
    if (!ts_.expect(TokenKind::RParen, "')'")) return;
    if (ts_.accept(TokenKind::Colon)) {
      std::string ret;
      if (!ts_.expect_ident(ret, "return type")) return;
      impl.signature.return_type = std::move(ret);
    }
    if (ts_.accept(TokenKind::LBrace)) {
      bool saw_reads = false, saw_writes = false, saw_trace = false;
      while (!ts_.check(TokenKind::RBrace) && !ts_.at_end()) {
        const Token t = ts_.peek();
        if (ts_.accept_ident("reads")) {
          if (saw_reads) {
            errors_.push_back({t.line, t.column, "a single reads block", "'reads'"});
            return;
          }
          saw_reads = true;
          if (!parse_name_set(impl.effects.reads)) return;
        } else if (ts_.accept_ident("writes")) {
          if (saw_writes) {
            errors_.push_back({t.line, t.column, "a single writes block", "'writes'"});
            return;
          }
          saw_writes = true;
          if (!parse_name_set(impl.effects.writes)) return;
        } else if (ts_.accept_ident("trace")) {
          if (saw_trace) {
            errors_.push_back({t.line, t.column, "a single trace", "'trace'"});
            return;
          }
          saw_trace = true;
          Trace trace;
          if (!ts_.expect(TokenKind::LBracket, "'['")) return;
          while (!ts_.check(TokenKind::RBracket) && !ts_.at_end()) {
            if (!trace.events.empty() && !ts_.expect(TokenKind::Comma, "','"))
              return;
            std::string event;
            if (!ts_.expect_ident(event, "event name")) return;
            trace.events.push_back(std::move(event));
          }
          if (!ts_.expect(TokenKind::RBracket, "']'")) return;
          impl.effects.trace = std::move(trace);
        } else {
          ts_.error_here("'reads', 'writes' or 'trace'");
          return;
        }
      }
      if (!ts_.expect(TokenKind::RBrace, "'}'")) return;
    }
    cls.methods.push_back(std::move(impl));
  }

  bool parse_name_set(std::set<std::string>& out) {
    if (!ts_.expect(TokenKind::LBrace, "'{'")) return false;
    bool first = true;
    while (!ts_.check(TokenKind::RBrace) && !ts_.at_end()) {
      if (!first && !ts_.expect(TokenKind::Comma, "','")) return false;
      first = false;
      std::string name;
      if (!ts_.expect_ident(name, "attribute name")) return false;
      out.insert(std::move(name));
    }
    return ts_.expect(TokenKind::RBrace, "'}'");
  }

  void parse_configure() {
    ts_.next();  // configure
    MopConfig config;
    const Token name_token = ts_.peek();
    if (!ts_.expect_ident(config.class_name, "configured class name")) return;
    for (const MopConfig& existing : spec_.mop_configs) {
      if (existing.class_name == config.class_name) {
        errors_.push_back({name_token.line, name_token.column,
                           "a single configure block per class",
                           "'" + config.class_name + "'"});
        break;
      }
    }
    if (!ts_.expect(TokenKind::LBrace, "'{'")) return;
    bool first = true;
    while (!ts_.check(TokenKind::RBrace) && !ts_.at_end()) {
      if (!first && !ts_.expect(TokenKind::Comma, "','")) return;
      first = false;
      std::string key;
      const Token key_token = ts_.peek();
      if (!ts_.expect_ident(key, "parameter name")) return;
      if (!ts_.expect(TokenKind::Equals, "'='")) return;
      std::string value;
      const Token value_token = ts_.peek();
      if (!ts_.expect_ident(value, "'true' or 'false'")) return;
      if (value != "true" && value != "false") {
        errors_.push_back({value_token.line, value_token.column,
                           "'true' or 'false'", "'" + value + "'"});
        return;
      }
      for (const auto& [existing, unused] : config.values) {
        if (existing == key) {
          errors_.push_back({key_token.line, key_token.column,
                             "distinct parameter names", "'" + key + "'"});
          break;
        }
      }
      config.values.emplace_back(std::move(key), value == "true");
    }
    ts_.expect(TokenKind::RBrace, "'}'");
    spec_.mop_configs.push_back(std::move(config));
  }
};

void print_method(std::ostream& out, const MethodImpl& impl) {
  out << "    method " << impl.signature.name << "(";
  bool first = true;
  for (const Param& param : impl.signature.params) {
    if (!first) out << ", ";
    first = false;
    out << param.name << ": " << param.type_name;
  }
  out << ")";
  if (impl.signature.return_type) out << ": " << *impl.signature.return_type;
  const bool has_body = !impl.effects.reads.empty() ||
                        !impl.effects.writes.empty() ||
                        impl.effects.trace.has_value();
  if (!has_body) {
    out << "\n";
    return;
  }
  out << " {\n";
  auto print_set = [&out](const char* label, const std::set<std::string>& names) {
    if (names.empty()) return;
    out << "      " << label << " { ";
    bool inner_first = true;
    for (const std::string& name : names) {
      if (!inner_first) out << ", ";
      inner_first = false;
      out << name;
    }
    out << " }\n";
  };
  print_set("reads", impl.effects.reads);
  print_set("writes", impl.effects.writes);
  if (impl.effects.trace) {
    out << "      trace [";
    bool inner_first = true;
    for (const std::string& event : impl.effects.trace->events) {
      if (!inner_first) out << ",";
      inner_first = false;
      out << " " << event;
    }
    out << (impl.effects.trace->events.empty() ? "]\n" : " ]\n");
  }
  out << "    }\n";
}

struct ObligationIndex {
  std::vector<Obligation> obligations;

  const Obligation* find(const std::string& name) const {
    for (const Obligation& ob : obligations)
      if (ob.interface_name == name) return &ob;
    return nullptr;
  }
};

// Loci still tagged {variable}/{extensible}; nonempty means the framework has
// not been rewritten into extensible-interface form yet.
std::vector<std::string> open_locus_paths(const Model& framework) {
  std::vector<std::string> paths;
  for (const ClassDecl& cls : framework.classes) {
    if (cls.tags.contains(Tag::Extensible))
      paths.push_back(class_path(framework, cls.name));
    for (const MethodDecl& method : cls.methods)
      if (method.tags.contains(Tag::Variable))
        paths.push_back(member_path(framework, cls.name, method.name));
  }
  return paths;
}

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
  std::stable_sort(diagnostics.begin(), diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     if (a.path != b.path) return a.path < b.path;
                     return a.code < b.code;
                   });
}

}  // namespace

Signature Signature::of(const MethodDecl& method) {
  return {method.name, method.params, method.return_type};
}

std::string Signature::to_string() const {
  std::ostringstream out;
  out << name << "(";
  bool first = true;
  for (const Param& param : params) {
    if (!first) out << ", ";
    first = false;
    out << param.name << ": " << param.type_name;
  }
  out << ")";
  if (return_type) out << ": " << *return_type;
  return out.str();
}

SpecParseResult parse_instantiation_spec(std::string_view source) {
  SpecParseResult result;
  SpecParser parser(source, result.errors);
  result.spec = parser.run();
  if (!result.errors.empty()) result.spec.reset();
  return result;
}

std::string print_instantiation_spec(const InstantiationSpec& spec) {
  std::ostringstream out;
  out << "instance " << spec.instance_name << " of " << spec.framework_name
      << " {\n";
  for (const AppClassSpec& cls : spec.app_classes) {
    out << "  class " << cls.name << " : " << cls.supertype << " {\n";
    for (const MethodImpl& impl : cls.methods) print_method(out, impl);
    for (const MethodImpl& impl : cls.new_methods) print_method(out, impl);
    out << "  }\n";
  }
  for (const MopConfig& config : spec.mop_configs) {
    out << "  configure " << config.class_name << " { ";
    bool first = true;
    for (const auto& [key, value] : config.values) {
      if (!first) out << ", ";
      first = false;
      out << key << " = " << (value ? "true" : "false");
    }
    out << " }\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<Obligation> list_obligations(const Model& framework) {
  const std::vector<std::string> open = open_locus_paths(framework);
  if (!open.empty())
    throw ModelError("framework has untransformed variation points (" +
                     open.front() + "); rewrite it before instantiation");
  std::vector<Obligation> obligations;
  for (const ClassDecl& cls : framework.classes) {
    if (!is_extension_parent(framework, cls)) continue;
    Obligation ob;
    ob.interface_name = cls.name;
    for (const MethodDecl& method : cls.methods)
      if (method.is_abstract) ob.abstract_methods.push_back(Signature::of(method));
    ob.attached_clauses = cls.constraints;
    for (const SequencePattern& pattern : framework.sequence_patterns)
      if (pattern.owner_class == cls.name) ob.attached_patterns.push_back(pattern);
    ob.timing = extension_parent_timing(framework, cls);
    obligations.push_back(std::move(ob));
  }
  return obligations;
}

std::vector<Diagnostic> verify_instance(const Model& framework,
                                        const InstantiationSpec& spec) {
  std::vector<Diagnostic> diagnostics;
  auto report = [&diagnostics](const char* code, std::string path,
                               std::string message) {
    diagnostics.push_back(
        {code, Severity::Error, std::move(path), std::move(message)});
  };

  if (spec.framework_name != framework.name)
    report("UMLF-E208", spec.instance_name,
           "instantiates '" + spec.framework_name +
               "' but the framework model is named '" + framework.name + "'");

  const std::vector<std::string> open = open_locus_paths(framework);
  for (const std::string& path : open)
    report("UMLF-E200", path,
           "variation point is untransformed; rewrite the framework first");
  if (!open.empty()) {
    sort_diagnostics(diagnostics);
    return diagnostics;
  }

  ObligationIndex index{list_obligations(framework)};

  std::set<std::string> seen_names;
  for (const AppClassSpec& cls : spec.app_classes) {
    const std::string path = class_path(framework, cls.name);
    if (framework.find_class(cls.name) || !seen_names.insert(cls.name).second)
      report("UMLF-E206", path,
             "class name '" + cls.name + "' is already taken");

    const Obligation* ob = index.find(cls.supertype);
    if (!ob) {
      report("UMLF-E203", path,
             "supertype '" + cls.supertype + "' is not an extension point of '" +
                 framework.name + "'");
      continue;
    }

    std::set<std::string> covered;
    std::vector<std::pair<const MethodImpl*, bool>> checked;  // impl flag
    for (const MethodImpl& impl : cls.methods) {
      const Signature* expected = nullptr;
      for (const Signature& sig : ob->abstract_methods)
        if (sig.name == impl.signature.name) expected = &sig;
      if (!expected) {
        checked.emplace_back(&impl, false);
        continue;
      }
      covered.insert(impl.signature.name);
      if (impl.signature != *expected) {
        report("UMLF-E207",
               member_path(framework, cls.name, impl.signature.name),
               "signature '" + impl.signature.to_string() +
                   "' does not match '" + expected->to_string() + "'");
        continue;
      }
      checked.emplace_back(&impl, true);
    }
    for (const MethodImpl& impl : cls.new_methods) checked.emplace_back(&impl, false);

    for (const Signature& sig : ob->abstract_methods)
      if (!covered.count(sig.name))
        report("UMLF-E201", member_path(framework, cls.name, sig.name),
               "abstract method '" + sig.to_string() + "' is not implemented");

    for (const auto& [impl, is_implementation] : checked) {
      const std::string method_path =
          member_path(framework, cls.name, impl->signature.name);
      std::vector<RestrictionClause> applicable;
      for (const RestrictionClause& clause : ob->attached_clauses) {
        const bool matches =
            clause.scope == RestrictionClause::Scope::ForAllNewMethods ||
            (is_implementation &&
             clause.scope == RestrictionClause::Scope::Method &&
             clause.method_name == impl->signature.name);
        if (matches) applicable.push_back(clause);
      }
      for (Diagnostic& d : check_effects(impl->effects, applicable, method_path))
        diagnostics.push_back(std::move(d));

      if (!impl->effects.trace) continue;
      for (const SequencePattern& pattern : ob->attached_patterns) {
        if (pattern.owner_method != impl->signature.name) continue;
        const ConformanceResult result =
            conforms(*impl->effects.trace, pattern, ConformanceMode::Strict);
        if (!result.conforms)
          report("UMLF-E202", method_path,
                 "trace violates pattern '" + pattern.name + "' at position " +
                     std::to_string(result.first_violation->position) +
                     ": expected " + result.first_violation->expected);
      }
    }
  }

  std::set<std::string> mop_targets;
  for (const Relationship& rel : framework.relationships)
    if (rel.kind == RelationKind::Aggregation && rel.role == "mop")
      mop_targets.insert(rel.target);

  std::set<std::string> configured;
  for (const MopConfig& config : spec.mop_configs) {
    const std::string path = class_path(framework, config.class_name);
    if (!configured.insert(config.class_name).second) {
      report("UMLF-E205", path,
             "class '" + config.class_name + "' is configured more than once");
      continue;
    }
    const ClassDecl* mop = framework.find_class(config.class_name);
    if (!mop || !mop_targets.count(config.class_name)) {
      report("UMLF-E204", path,
             "'" + config.class_name + "' is not a meta-object class");
      continue;
    }
    std::set<std::string> attrs;
    for (const AttributeDecl& attr : mop->attributes) attrs.insert(attr.name);
    std::set<std::string> given;
    for (const auto& [key, unused] : config.values) {
      if (!attrs.count(key))
        report("UMLF-E205", path, "unknown parameter '" + key + "'");
      else if (!given.insert(key).second)
        report("UMLF-E205", path, "parameter '" + key + "' is set twice");
    }
    for (const AttributeDecl& attr : mop->attributes)
      if (!given.count(attr.name))
        report("UMLF-E205", path, "parameter '" + attr.name + "' is not set");
  }

  sort_diagnostics(diagnostics);
  return diagnostics;
}

InstantiationResult instantiate(const Model& framework,
                                const InstantiationSpec& spec) {
  InstantiationResult result;
  result.diagnostics = verify_instance(framework, spec);
  if (has_errors(result.diagnostics)) return result;

  Model instance = framework;
  instance.instance_name = spec.instance_name;
  instance.mop_configs.clear();
  for (const MopConfig& config : spec.mop_configs) {
    const ClassDecl* mop = framework.find_class(config.class_name);
    MopConfig ordered;
    ordered.class_name = config.class_name;
    for (const AttributeDecl& attr : mop->attributes)
      for (const auto& [key, value] : config.values)
        if (key == attr.name) ordered.values.emplace_back(key, value);
    instance.mop_configs.push_back(std::move(ordered));
  }

  std::set<std::string> satisfied;
  for (const AppClassSpec& app : spec.app_classes) {
    const ClassDecl* parent = framework.find_class(app.supertype);
    satisfied.insert(app.supertype);

    ClassDecl cls;
    cls.name = app.name;
    cls.tags.add(Tag::ApplClass);
    if (parent->tags.contains(Tag::SeparationHook)) cls.tags.add(Tag::CHook);

    auto add_method = [&cls, parent](const MethodImpl& impl) {
      MethodDecl method;
      const MethodDecl* proto = parent->find_method(impl.signature.name);
      if (proto) {
        method.name = proto->name;
        method.params = proto->params;
        method.return_type = proto->return_type;
        method.visibility = proto->visibility;
      } else {
        method.name = impl.signature.name;
        method.params = impl.signature.params;
        method.return_type = impl.signature.return_type;
      }
      cls.methods.push_back(std::move(method));
    };
    for (const MethodImpl& impl : app.methods) add_method(impl);
    for (const MethodImpl& impl : app.new_methods) add_method(impl);
    instance.classes.push_back(std::move(cls));

    Relationship edge;
    edge.kind = parent->kind == ClassKind::Interface ? RelationKind::Realization
                                                     : RelationKind::Generalization;
    edge.source = app.name;
    edge.target = app.supertype;
    instance.relationships.push_back(std::move(edge));
  }

  for (Relationship& rel : instance.relationships) {
    const bool inheritance = rel.kind == RelationKind::Generalization ||
                             rel.kind == RelationKind::Realization;
    if (inheritance && satisfied.count(rel.target) &&
        rel.tags.contains(Tag::Incomplete)) {
      rel.tags.remove(Tag::Incomplete);
      rel.tags.remove(Tag::Static);
      rel.tags.remove(Tag::Dynamic);
    }
  }

  result.model = std::move(instance);
  return result;
}

}  // namespace umlf
