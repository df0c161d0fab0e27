#include "umlf/transform.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include "umlf/validate.hpp"

namespace umlf {

namespace {

using Kind = VariationPoint::Kind;

const std::array<ImplementationModel, 4>& registry() {
  static const std::array<ImplementationModel, 4> models{{
      {ImplementationModelId::Strategy,
       "strategy",
       {{Kind::VariableMethod, Timing::Dynamic}},
       "none"},
      {ImplementationModelId::Unification,
       "unification",
       {{Kind::VariableMethod, Timing::Static}, {Kind::ExtensibleClass, Timing::Static}},
       "none"},
      {ImplementationModelId::HookList,
       "hook-list",
       {{Kind::ExtensibleClass, Timing::Dynamic}},
       "before=<method>"},
      {ImplementationModelId::Mop,
       "mop",
       {{Kind::VariableMethod, Timing::Dynamic}},
       "<param>[=\"description\"], ..."},
  }};
  return models;
}

[[noreturn]] void fail(const std::string& message) { throw ModelError(message); }

const ClassDecl& require_class(const Model& m, const std::string& name) {
  const ClassDecl* cls = m.find_class(name);
  if (!cls) fail("no class named '" + name + "' in model " + m.name);
  return *cls;
}

const MethodDecl& require_method(const Model& m, const ClassDecl& cls,
                                 const std::string& name) {
  const MethodDecl* method = cls.find_method(name);
  if (!method) fail("class " + cls.name + " has no method '" + name + "'");
  return *method;
}

Timing require_timing(const TagSet& tags, const std::string& path) {
  std::optional<Timing> t = timing_of(tags);
  if (!t) fail("variation point " + path + " needs exactly one timing tag");
  return *t;
}

void require_fresh_class_name(const Model& m, const std::string& name) {
  if (m.find_class(name))
    fail("rewrite would add class '" + name + "' but the name is taken");
}

// Moves sequence patterns owned by from.method to (to, method).
void reattach_patterns(Model& m, const std::string& from_class,
                       const std::string& method, const std::string& to_class) {
  for (SequencePattern& pattern : m.sequence_patterns) {
    if (pattern.owner_class == from_class && pattern.owner_method == method)
      pattern.owner_class = to_class;
  }
}

// Moves clauses scoped to `method` from one class onto another.
void reattach_method_clauses(ClassDecl& from, ClassDecl& to, const std::string& method) {
  auto it = from.constraints.begin();
  while (it != from.constraints.end()) {
    if (it->scope == RestrictionClause::Scope::Method && it->method_name == method) {
      to.constraints.push_back(*it);
      it = from.constraints.erase(it);
    } else {
      ++it;
    }
  }
}

}  // namespace

std::string_view to_keyword(ImplementationModelId id) {
  return registry()[static_cast<int>(id)].name;
}

std::optional<ImplementationModelId> implementation_model_from_name(
    std::string_view name) {
  for (const ImplementationModel& m : registry())
    if (m.name == name) return m.id;
  return std::nullopt;
}

std::span<const ImplementationModel> implementation_models() { return registry(); }

bool applicable(ImplementationModelId id, VariationPoint::Kind kind, Timing timing) {
  for (const auto& [k, t] : registry()[static_cast<int>(id)].applies_to)
    if (k == kind && t == timing) return true;
  return false;
}

std::string upper_camel(std::string_view name) {
  std::string out(name);
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(out[0]));
  return out;
}

Model apply_strategy(const Model& m, const std::string& class_name,
                     const std::string& method_name) {
  const ClassDecl& cls = require_class(m, class_name);
  const MethodDecl& method = require_method(m, cls, method_name);
  if (!method.tags.contains(Tag::Variable))
    fail("strategy expects a {variable} method, " + class_name + "." + method_name +
         " is not one");
  const Timing timing =
      require_timing(method.tags, member_path(m, class_name, method_name));
  if (timing != Timing::Dynamic)
    fail("strategy applies to dynamic variation points only");
  const std::string new_name = upper_camel(method_name) + "Strategy";
  require_fresh_class_name(m, new_name);

  Model out = m;
  ClassDecl* owner = out.find_class(class_name);

  ClassDecl strategy;
  strategy.name = new_name;
  strategy.is_abstract = true;
  strategy.tags.add(Tag::Dynamic);
  strategy.tags.add(Tag::SeparationHook);
  MethodDecl hook = method;
  hook.tags.remove(Tag::Variable);
  hook.tags.remove(Tag::Dynamic);
  hook.is_abstract = true;
  hook.visibility = Visibility::Public;
  strategy.methods.push_back(std::move(hook));

  owner->methods.erase(
      std::remove_if(owner->methods.begin(), owner->methods.end(),
                     [&](const MethodDecl& mm) { return mm.name == method_name; }),
      owner->methods.end());
  owner->tags.add(Tag::SeparationTemplate);
  reattach_method_clauses(*owner, strategy, method_name);
  out.classes.push_back(std::move(strategy));
  reattach_patterns(out, class_name, method_name, new_name);

  Relationship agg;
  agg.kind = RelationKind::Aggregation;
  agg.source = class_name;
  agg.target = new_name;
  agg.role = "strategy";
  agg.multiplicity = "1";
  out.relationships.push_back(std::move(agg));
  return out;
}

Model apply_unification(const Model& m, const std::string& class_name,
                        const std::optional<std::string>& method_name) {
  const ClassDecl& cls = require_class(m, class_name);
  Model out = m;
  ClassDecl* owner = out.find_class(class_name);
  if (method_name) {
    const MethodDecl& method = require_method(m, cls, *method_name);
    if (!method.tags.contains(Tag::Variable))
      fail("unification expects a {variable} method, " + class_name + "." +
           *method_name + " is not one");
    if (require_timing(method.tags, member_path(m, class_name, *method_name)) !=
        Timing::Static)
      fail("unification applies to static variation points only");
    if (cls.tags.contains(Tag::Dynamic))
      fail("unification would mark " + class_name +
           " {static} but the class carries {dynamic}; rewrite that locus first");
    MethodDecl* target = nullptr;
    for (MethodDecl& mm : owner->methods)
      if (mm.name == *method_name) target = &mm;
    target->tags.remove(Tag::Variable);
    target->tags.remove(Tag::Static);
    target->is_abstract = true;
  } else {
    if (!cls.tags.contains(Tag::Extensible))
      fail("unification expects an {extensible} class, " + class_name + " is not one");
    if (require_timing(cls.tags, class_path(m, class_name)) != Timing::Static)
      fail("unification applies to static variation points only");
    owner->tags.remove(Tag::Extensible);
  }
  owner->is_abstract = true;
  // The remaining class-level {static} on an abstract class marks the open
  // extension parent consumed by obligation listing.
  owner->tags.add(Tag::Static);
  return out;
}

Model apply_hook_list(const Model& m, const std::string& class_name,
                      const std::string& before) {
  const ClassDecl& cls = require_class(m, class_name);
  if (!cls.tags.contains(Tag::Extensible))
    fail("hook-list expects an {extensible} class, " + class_name + " is not one");
  if (require_timing(cls.tags, class_path(m, class_name)) != Timing::Dynamic)
    fail("hook-list applies to dynamic variation points only");
  require_method(m, cls, before);
  const std::string hook_name = class_name + "Hook";
  require_fresh_class_name(m, hook_name);
  for (const char* reserved : {"addHook", "removeHook"}) {
    if (cls.find_method(reserved) || cls.find_attribute(reserved))
      fail("hook-list needs the member name '" + std::string(reserved) +
           "' on " + class_name);
  }

  Model out = m;
  ClassDecl* owner = out.find_class(class_name);

  ClassDecl hook;
  hook.name = hook_name;
  hook.kind = ClassKind::Interface;
  hook.tags.add(Tag::Dynamic);
  // the hook side of the separation; subclasses come in as {c-hook}
  hook.tags.add(Tag::SeparationHook);
  MethodDecl invoke;
  invoke.name = "invoke";
  invoke.is_abstract = true;
  hook.methods.push_back(std::move(invoke));

  // for-all-new-methods restrictions move to the hook interface, keeping
  // their scope: they still bind every method an application subclass adds.
  // A preserves clause over a private attribute cannot be violated from a
  // hook class at all, so it is marked satisfied up front.
  auto it = owner->constraints.begin();
  while (it != owner->constraints.end()) {
    if (it->scope == RestrictionClause::Scope::ForAllNewMethods) {
      RestrictionClause moved = *it;
      if (moved.form == RestrictionClause::Form::Preserves) {
        const AttributeDecl* attr = owner->find_attribute(moved.detail);
        if (attr && attr->visibility == Visibility::Private)
          moved.satisfied_by_construction = true;
      }
      hook.constraints.push_back(std::move(moved));
      it = owner->constraints.erase(it);
    } else {
      ++it;
    }
  }

  owner->tags.remove(Tag::Extensible);
  owner->tags.remove(Tag::Dynamic);
  for (MethodDecl& mm : owner->methods)
    if (mm.name == before) mm.hook_point = hook_name;

  MethodDecl add;
  add.name = "addHook";
  add.params.push_back({"h", hook_name});
  MethodDecl remove;
  remove.name = "removeHook";
  remove.params.push_back({"h", hook_name});
  owner->methods.push_back(std::move(add));
  owner->methods.push_back(std::move(remove));

  out.classes.push_back(std::move(hook));

  Relationship agg;
  agg.kind = RelationKind::Aggregation;
  agg.source = class_name;
  agg.target = hook_name;
  agg.role = "hooks";
  agg.multiplicity = "0..*";
  out.relationships.push_back(std::move(agg));
  return out;
}

Model apply_mop(const Model& m, const std::string& class_name,
                const std::string& method_name, const std::vector<MopParam>& params) {
  const ClassDecl& cls = require_class(m, class_name);
  const MethodDecl& method = require_method(m, cls, method_name);
  if (!method.tags.contains(Tag::Variable))
    fail("mop expects a {variable} method, " + class_name + "." + method_name +
         " is not one");
  if (require_timing(method.tags, member_path(m, class_name, method_name)) !=
      Timing::Dynamic)
    fail("mop applies to dynamic variation points only");
  if (params.empty()) fail("mop needs at least one Boolean parameter");
  for (std::size_t i = 0; i < params.size(); ++i)
    for (std::size_t j = i + 1; j < params.size(); ++j)
      if (params[i].name == params[j].name)
        fail("duplicate mop parameter '" + params[i].name + "'");
  const std::string new_name = upper_camel(method_name) + "MOP";
  require_fresh_class_name(m, new_name);

  Model out = m;
  ClassDecl* owner = out.find_class(class_name);

  ClassDecl mop;
  mop.name = new_name;
  for (const MopParam& param : params) {
    AttributeDecl attr;
    attr.name = param.name;
    attr.type_name = "bool";
    attr.visibility = Visibility::Private;
    attr.doc = param.description;
    mop.attributes.push_back(std::move(attr));
  }
  MethodDecl moved = method;
  moved.tags.remove(Tag::Variable);
  moved.tags.remove(Tag::Dynamic);
  moved.is_abstract = false;
  moved.visibility = Visibility::Public;
  mop.methods.push_back(std::move(moved));

  owner->methods.erase(
      std::remove_if(owner->methods.begin(), owner->methods.end(),
                     [&](const MethodDecl& mm) { return mm.name == method_name; }),
      owner->methods.end());
  reattach_method_clauses(*owner, mop, method_name);
  out.classes.push_back(std::move(mop));
  reattach_patterns(out, class_name, method_name, new_name);

  Relationship agg;
  agg.kind = RelationKind::Aggregation;
  agg.source = class_name;
  agg.target = new_name;
  agg.role = "mop";
  agg.multiplicity = "1";
  out.relationships.push_back(std::move(agg));
  return out;
}

namespace {

bool matches(const Binding& binding, const VariationPoint& vp) {
  if (vp.kind == Kind::VariableMethod)
    return binding.method_name && binding.class_name == vp.class_name &&
           *binding.method_name == vp.method_name;
  if (vp.kind == Kind::ExtensibleClass)
    return !binding.method_name && binding.class_name == vp.class_name;
  return false;
}

std::string locus_label(const VariationPoint& vp) {
  std::string label = vp.class_name;
  if (vp.kind == Kind::VariableMethod) label += "." + vp.method_name;
  return label;
}

}  // namespace

Model transform_all(const Model& m, const std::vector<Binding>& bindings) {
  std::vector<Diagnostic> findings = validate(m);
  if (has_errors(findings)) {
    for (const Diagnostic& d : findings)
      if (d.severity == Diagnostic::Severity::Error)
        fail("model has validation errors, first: " + render(d));
  }
  if (!bindings.empty()) {
    for (std::size_t i = 0; i < m.relationships.size(); ++i) {
      const Relationship& rel = m.relationships[i];
      if (rel.kind != RelationKind::Aggregation || !rel.role) continue;
      if (*rel.role == "strategy" || *rel.role == "hooks" || *rel.role == "mop")
        fail("aggregation role '" + *rel.role + "' at " +
             relationship_path(m, i) + " is reserved for rewrites");
    }
  }

  std::vector<VariationPoint> points = classify_variation_points(m);
  std::vector<bool> used(bindings.size(), false);

  Model out = m;
  for (const VariationPoint& vp : points) {
    if (vp.kind == Kind::ExtensibleInterface) continue;
    const Binding* bound = nullptr;
    for (std::size_t i = 0; i < bindings.size(); ++i) {
      if (!matches(bindings[i], vp)) continue;
      if (bound) fail("duplicate binding for " + locus_label(vp));
      bound = &bindings[i];
      used[i] = true;
    }
    if (!bound) fail("no binding covers variation point " + locus_label(vp));
    if (!applicable(bound->model_id, vp.kind, vp.timing))
      fail(std::string(to_keyword(bound->model_id)) + " does not apply to " +
           std::string(to_keyword(vp.kind)) + "/" +
           std::string(to_keyword(vp.timing)) + " point " + locus_label(vp));
    switch (bound->model_id) {
      case ImplementationModelId::Strategy:
        out = apply_strategy(out, vp.class_name, vp.method_name);
        break;
      case ImplementationModelId::Unification:
        out = apply_unification(out, vp.class_name,
                                vp.kind == Kind::VariableMethod
                                    ? std::optional<std::string>(vp.method_name)
                                    : std::nullopt);
        break;
      case ImplementationModelId::HookList:
        if (!bound->before) fail("hook-list binding for " + vp.class_name +
                                 " needs before=<method>");
        out = apply_hook_list(out, vp.class_name, *bound->before);
        break;
      case ImplementationModelId::Mop:
        out = apply_mop(out, vp.class_name, vp.method_name, bound->mop_params);
        break;
    }
  }
  for (std::size_t i = 0; i < bindings.size(); ++i) {
    if (!used[i])
      fail("binding for '" + bindings[i].class_name +
           (bindings[i].method_name ? "." + *bindings[i].method_name : "") +
           "' matches no variable method or extensible class");
  }
  return out;
}

std::vector<Binding> parse_bindings(std::string_view text) {
  std::vector<Binding> bindings;
  std::istringstream stream{std::string(text)};
  std::string line;
  int line_no = 0;
  auto syntax_error = [&](const std::string& what) {
    fail("bindings line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(stream, line)) {
    ++line_no;
    std::string trimmed = line;
    if (auto pos = trimmed.find("//"); pos != std::string::npos)
      trimmed.erase(pos);
    auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
    trimmed.erase(trimmed.begin(),
                  std::find_if_not(trimmed.begin(), trimmed.end(), is_space));
    trimmed.erase(std::find_if_not(trimmed.rbegin(), trimmed.rend(), is_space).base(),
                  trimmed.end());
    if (trimmed.empty()) continue;

    const auto arrow = trimmed.find("=>");
    if (arrow == std::string::npos) syntax_error("missing '=>'");

    auto strip = [&](std::string s) {
      s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), is_space));
      s.erase(std::find_if_not(s.rbegin(), s.rend(), is_space).base(), s.end());
      return s;
    };
    const std::string left = strip(trimmed.substr(0, arrow));
    std::string right = strip(trimmed.substr(arrow + 2));
    if (left.empty()) syntax_error("missing variation point before '=>'");
    if (right.empty()) syntax_error("missing implementation model after '=>'");

    Binding binding;
    if (auto dot = left.find('.'); dot != std::string::npos) {
      binding.class_name = strip(left.substr(0, dot));
      binding.method_name = strip(left.substr(dot + 1));
    } else {
      binding.class_name = left;
    }

    std::string args;
    if (auto paren = right.find('('); paren != std::string::npos) {
      if (right.back() != ')') syntax_error("missing ')'");
      args = right.substr(paren + 1, right.size() - paren - 2);
      right = strip(right.substr(0, paren));
    }
    std::optional<ImplementationModelId> id = implementation_model_from_name(right);
    if (!id) syntax_error("unknown implementation model '" + right + "'");
    binding.model_id = *id;

    std::vector<std::pair<std::string, std::optional<std::string>>> kv;
    std::size_t pos = 0;
    while (pos < args.size()) {
      // Split on commas outside quotes.
      bool quoted = false;
      std::size_t end = pos;
      while (end < args.size() && (quoted || args[end] != ',')) {
        if (args[end] == '"') quoted = !quoted;
        ++end;
      }
      std::string item = strip(args.substr(pos, end - pos));
      pos = end + (end < args.size() ? 1 : 0);
      if (item.empty()) syntax_error("empty parameter");
      std::string key = item;
      std::optional<std::string> value;
      if (auto eq = item.find('='); eq != std::string::npos) {
        key = strip(item.substr(0, eq));
        std::string raw = strip(item.substr(eq + 1));
        if (raw.size() >= 2 && raw.front() == '"' && raw.back() == '"')
          raw = raw.substr(1, raw.size() - 2);
        value = raw;
      }
      kv.emplace_back(std::move(key), std::move(value));
    }

    switch (binding.model_id) {
      case ImplementationModelId::HookList:
        for (auto& [key, value] : kv) {
          if (key == "before" && value)
            binding.before = *value;
          else
            syntax_error("hook-list takes before=<method>");
        }
        if (!binding.before) syntax_error("hook-list needs before=<method>");
        break;
      case ImplementationModelId::Mop:
        for (auto& [key, value] : kv)
          binding.mop_params.push_back({key, value});
        if (binding.mop_params.empty())
          syntax_error("mop needs at least one parameter");
        break;
      default:
        if (!kv.empty())
          syntax_error(std::string(to_keyword(binding.model_id)) +
                       " takes no parameters");
        break;
    }
    bindings.push_back(std::move(binding));
  }
  return bindings;
}

}  // namespace umlf
