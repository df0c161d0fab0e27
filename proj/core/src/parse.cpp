#include "umlf/parse.hpp"

#include <set>
#include <utility>

#include "lexer.hpp"

namespace umlf {

namespace {

using detail::Token;
using detail::TokenKind;
using detail::TokenStream;

const std::set<std::string, std::less<>> kElementKeywords = {
    "class",          "interface", "abstract",    "generalization",
    "realization",    "aggregation", "association", "sequence",
    "instance",       "configure"};

const std::set<std::string, std::less<>> kMemberKeywords = {
    "tags", "attr", "method", "constraint"};

struct PendingRef {
  enum class Kind : std::uint8_t {
    ClassName,        // target must be a declared class
    MethodOfClass,    // method must exist on context_class
  };
  Kind kind;
  std::string name;
  std::string context_class;
  int line = 1;
  int column = 1;
};

class Parser {
 public:
  Parser(std::string_view source, std::vector<ParseError>& errors)
      : errors_(errors), ts_(detail::tokenize(source, errors), errors) {}

  std::optional<Model> run() {
    if (!ts_.accept_ident("model")) {
      ts_.error_here("'model'");
      return std::nullopt;
    }
    ts_.expect_ident(model_.name, "model name");
    ts_.expect(TokenKind::LBrace, "'{'");
    while (!ts_.at_end() && !ts_.check(TokenKind::RBrace)) parse_element();
    ts_.expect(TokenKind::RBrace, "'}'");
    if (!ts_.at_end()) ts_.error_here("end of input");
    resolve();
    if (!errors_.empty()) return std::nullopt;
    return std::move(model_);
  }

 private:
  std::vector<ParseError>& errors_;
  TokenStream ts_;
  Model model_;
  std::vector<PendingRef> refs_;

  void pending_class_ref(const std::string& name, const Token& at) {
    refs_.push_back({PendingRef::Kind::ClassName, name, "", at.line, at.column});
  }

  // Skips tokens until the next keyword from sync at brace level zero, or the
  // enclosing '}'.
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
    const Token& t = ts_.peek();
    if (t.kind != TokenKind::Ident) {
      ts_.error_here("a declaration");
      ts_.next();
      synchronize(kElementKeywords);
      return;
    }
    if (t.text == "instance") {
      parse_instance_meta();
    } else if (t.text == "configure") {
      parse_configure_meta();
    } else if (t.text == "abstract" || t.text == "class" || t.text == "interface") {
      parse_class();
    } else if (t.text == "generalization" || t.text == "realization" ||
               t.text == "aggregation" || t.text == "association") {
      parse_relationship();
    } else if (t.text == "sequence") {
      parse_sequence();
    } else {
      ts_.error_here("a declaration");
      ts_.next();
    }
    if (errors_.size() != before) synchronize(kElementKeywords);
  }

  void parse_instance_meta() {
    const Token at = ts_.peek();
    ts_.next();  // instance
    std::string name;
    if (!ts_.expect_ident(name, "instance name")) return;
    if (model_.instance_name) {
      errors_.push_back({at.line, at.column, "a single instance declaration",
                         "second 'instance'"});
      return;
    }
    model_.instance_name = std::move(name);
  }

  void parse_configure_meta() {
    ts_.next();  // configure
    MopConfig config;
    const Token name_token = ts_.peek();
    if (!ts_.expect_ident(config.class_name, "configured class name")) return;
    for (const MopConfig& existing : model_.mop_configs) {
      if (existing.class_name == config.class_name) {
        errors_.push_back({name_token.line, name_token.column,
                           "a single configure block per class",
                           "'" + config.class_name + "'"});
        break;
      }
    }
    pending_class_ref(config.class_name, name_token);
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
      for (const auto& [existing, _] : config.values) {
        if (existing == key) {
          errors_.push_back({key_token.line, key_token.column,
                             "distinct parameter names", "'" + key + "'"});
          break;
        }
      }
      config.values.emplace_back(std::move(key), value == "true");
    }
    ts_.expect(TokenKind::RBrace, "'}'");
    model_.mop_configs.push_back(std::move(config));
  }

  TagSet parse_tag_set(TagTarget target) {
    TagSet tags;
    ts_.next();  // tags
    if (!ts_.expect(TokenKind::LBrace, "'{'")) return tags;
    bool first = true;
    while (!ts_.check(TokenKind::RBrace) && !ts_.at_end()) {
      if (!first && !ts_.expect(TokenKind::Comma, "','")) break;
      first = false;
      const Token t = ts_.peek();
      std::string name;
      if (!ts_.expect_ident(name, "tag name")) break;
      std::optional<Tag> tag = tag_from_name(name);
      if (!tag) {
        errors_.push_back({t.line, t.column, "a registered tag name", "'" + name + "'"});
        continue;
      }
      if (tags.contains(*tag)) {
        errors_.push_back({t.line, t.column, "distinct tags", "'" + name + "'"});
        continue;
      }
      (void)target;  // placement is the validator's concern, not the parser's
      tags.add(*tag);
    }
    ts_.expect(TokenKind::RBrace, "'}'");
    return tags;
  }

  void parse_class() {
    ClassDecl cls;
    const Token first = ts_.peek();
    bool is_abstract = ts_.accept_ident("abstract");
    if (ts_.accept_ident("interface")) {
      cls.kind = ClassKind::Interface;
      if (is_abstract)
        errors_.push_back({first.line, first.column, "'class' after 'abstract'",
                           "'interface'"});
    } else if (!ts_.accept_ident("class")) {
      ts_.error_here("'class' or 'interface'");
      return;
    }
    cls.is_abstract = is_abstract;
    const Token name_token = ts_.peek();
    if (!ts_.expect_ident(cls.name, "class name")) return;
    if (model_.find_class(cls.name)) {
      errors_.push_back({name_token.line, name_token.column,
                         "a unique class name", "'" + cls.name + "'"});
    }
    if (ts_.accept(TokenKind::Colon)) {
      do {
        std::string super;
        const Token t = ts_.peek();
        if (!ts_.expect_ident(super, "supertype name")) break;
        pending_class_ref(super, t);
        cls.supertypes.push_back(std::move(super));
      } while (ts_.accept(TokenKind::Comma));
    }
    if (!ts_.expect(TokenKind::LBrace, "'{'")) return;
    std::set<std::string> member_names;
    while (!ts_.check(TokenKind::RBrace) && !ts_.at_end()) {
      const std::size_t before = errors_.size();
      parse_member(cls, member_names);
      if (errors_.size() != before) synchronize(kMemberKeywords);
    }
    ts_.expect(TokenKind::RBrace, "'}'");
    model_.classes.push_back(std::move(cls));
  }

  void note_member_name(std::set<std::string>& names, const std::string& name,
                        const Token& at) {
    if (!names.insert(name).second)
      errors_.push_back({at.line, at.column, "a unique member name", "'" + name + "'"});
  }

  void parse_member(ClassDecl& cls, std::set<std::string>& member_names) {
    const Token& t = ts_.peek();
    if (t.kind != TokenKind::Ident) {
      ts_.error_here("a class member");
      ts_.next();
      return;
    }
    if (t.text == "tags") {
      cls.tags = parse_tag_set(TagTarget::Class);
    } else if (t.text == "attr") {
      parse_attribute(cls, member_names);
    } else if (t.text == "method") {
      parse_method(cls, member_names);
    } else if (t.text == "constraint") {
      parse_constraint(cls);
    } else {
      ts_.error_here("'tags', 'attr', 'method' or 'constraint'");
      ts_.next();
    }
  }

  void parse_attribute(ClassDecl& cls, std::set<std::string>& member_names) {
    const Token at = ts_.peek();
    ts_.next();  // attr
    if (cls.kind == ClassKind::Interface)
      errors_.push_back({at.line, at.column, "no attributes on an interface", "'attr'"});
    AttributeDecl attr;
    const Token name_token = ts_.peek();
    if (!ts_.expect_ident(attr.name, "attribute name")) return;
    note_member_name(member_names, attr.name, name_token);
    if (!ts_.expect(TokenKind::Colon, "':'")) return;
    if (!ts_.expect_ident(attr.type_name, "type name")) return;
    if (ts_.accept(TokenKind::LBrace)) {
      bool first = true;
      while (!ts_.check(TokenKind::RBrace) && !ts_.at_end()) {
        if (!first && !ts_.expect(TokenKind::Comma, "','")) return;
        first = false;
        if (ts_.accept_ident("public")) {
          attr.visibility = Visibility::Public;
        } else if (ts_.accept_ident("protected")) {
          attr.visibility = Visibility::Protected;
        } else if (ts_.accept_ident("private")) {
          attr.visibility = Visibility::Private;
        } else if (ts_.accept_ident("doc")) {
          if (!ts_.check(TokenKind::String)) {
            ts_.error_here("a doc string");
            return;
          }
          attr.doc = ts_.next().text;
        } else {
          ts_.error_here("a visibility or 'doc'");
          return;
        }
      }
      ts_.expect(TokenKind::RBrace, "'}'");
    }
    cls.attributes.push_back(std::move(attr));
  }

  void parse_method(ClassDecl& cls, std::set<std::string>& member_names) {
    ts_.next();  // method
    MethodDecl method;
    const Token name_token = ts_.peek();
    if (!ts_.expect_ident(method.name, "method name")) return;
    note_member_name(member_names, method.name, name_token);
    if (!ts_.expect(TokenKind::LParen, "'('")) return;
    std::set<std::string> param_names;
    while (!ts_.check(TokenKind::RParen) && !ts_.at_end()) {
      if (!method.params.empty() && !ts_.expect(TokenKind::Comma, "','")) return;
      Param param;
      const Token param_token = ts_.peek();
      if (!ts_.expect_ident(param.name, "parameter name")) return;
      if (!param_names.insert(param.name).second)
        errors_.push_back({param_token.line, param_token.column,
                           "a unique parameter name", "'" + param.name + "'"});
      if (!ts_.expect(TokenKind::Colon, "':'")) return;
      if (!ts_.expect_ident(param.type_name, "type name")) return;
      method.params.push_back(std::move(param));
    }
    if (!ts_.expect(TokenKind::RParen, "')'")) return;
    if (ts_.accept(TokenKind::Colon)) {
      std::string ret;
      if (!ts_.expect_ident(ret, "return type")) return;
      method.return_type = std::move(ret);
    }
    if (ts_.accept(TokenKind::LBrace)) {
      bool first = true;
      while (!ts_.check(TokenKind::RBrace) && !ts_.at_end()) {
        if (!first && !ts_.expect(TokenKind::Comma, "','")) return;
        first = false;
        if (ts_.accept_ident("public")) {
          method.visibility = Visibility::Public;
        } else if (ts_.accept_ident("protected")) {
          method.visibility = Visibility::Protected;
        } else if (ts_.accept_ident("private")) {
          method.visibility = Visibility::Private;
        } else if (ts_.accept_ident("abstract")) {
          method.is_abstract = true;
        } else if (ts_.check_ident("hook-point")) {
          ts_.next();
          std::string target;
          const Token t = ts_.peek();
          if (!ts_.expect_ident(target, "hook interface name")) return;
          pending_class_ref(target, t);
          method.hook_point = std::move(target);
        } else if (ts_.check_ident("tags")) {
          method.tags = parse_tag_set(TagTarget::Method);
        } else {
          ts_.error_here("a method property");
          return;
        }
      }
      ts_.expect(TokenKind::RBrace, "'}'");
    }
    if (cls.kind == ClassKind::Interface) method.is_abstract = true;
    cls.methods.push_back(std::move(method));
  }

  void parse_constraint(ClassDecl& cls) {
    ts_.next();  // constraint
    RestrictionClause clause;
    if (ts_.accept_ident("forAllNewMethods")) {
      clause.scope = RestrictionClause::Scope::ForAllNewMethods;
    } else if (ts_.accept_ident("method")) {
      clause.scope = RestrictionClause::Scope::Method;
      const Token t = ts_.peek();
      if (!ts_.expect_ident(clause.method_name, "method name")) return;
      refs_.push_back({PendingRef::Kind::MethodOfClass, clause.method_name,
                       cls.name, t.line, t.column});
    } else {
      ts_.error_here("'forAllNewMethods' or 'method'");
      return;
    }
    if (ts_.accept_ident("preserves")) {
      clause.form = RestrictionClause::Form::Preserves;
      if (!ts_.expect_ident(clause.detail, "attribute name")) return;
    } else if (ts_.accept_ident("pure")) {
      clause.form = RestrictionClause::Form::Pure;
    } else if (ts_.accept_ident("text")) {
      clause.form = RestrictionClause::Form::Opaque;
      if (!ts_.check(TokenKind::String)) {
        ts_.error_here("a constraint string");
        return;
      }
      clause.detail = ts_.next().text;
    } else {
      ts_.error_here("'preserves', 'pure' or 'text'");
      return;
    }
    clause.satisfied_by_construction = ts_.accept_ident("satisfied-by-construction");
    cls.constraints.push_back(std::move(clause));
  }

  void parse_relationship() {
    Relationship rel;
    const std::string keyword = ts_.next().text;
    if (keyword == "generalization") rel.kind = RelationKind::Generalization;
    if (keyword == "realization") rel.kind = RelationKind::Realization;
    if (keyword == "aggregation") rel.kind = RelationKind::Aggregation;
    if (keyword == "association") rel.kind = RelationKind::Association;
    const bool structural = rel.kind == RelationKind::Generalization ||
                            rel.kind == RelationKind::Realization;
    const Token source_token = ts_.peek();
    if (!ts_.expect_ident(rel.source, "source class name")) return;
    pending_class_ref(rel.source, source_token);
    if (!ts_.expect(TokenKind::Arrow, "'->'")) return;
    const Token target_token = ts_.peek();
    if (!ts_.expect_ident(rel.target, "target class name")) return;
    pending_class_ref(rel.target, target_token);
    if (!structural) {
      if (ts_.accept_ident("role")) {
        std::string role;
        if (!ts_.expect_ident(role, "role name")) return;
        rel.role = std::move(role);
      }
      if (ts_.accept_ident("mult")) {
        if (!ts_.check(TokenKind::String)) {
          ts_.error_here("a multiplicity string");
          return;
        }
        rel.multiplicity = ts_.next().text;
      }
    }
    if (ts_.accept(TokenKind::LBrace)) {
      if (ts_.check_ident("tags")) {
        rel.tags = parse_tag_set(structural ? TagTarget::Generalization
                                            : TagTarget::Class);
      }
      ts_.expect(TokenKind::RBrace, "'}'");
    }
    model_.relationships.push_back(std::move(rel));
  }

  void parse_sequence() {
    ts_.next();  // sequence
    SequencePattern pattern;
    const Token name_token = ts_.peek();
    if (!ts_.expect_ident(pattern.name, "pattern name")) return;
    if (!ts_.accept_ident("for")) {
      ts_.error_here("'for'");
      return;
    }
    const Token class_token = ts_.peek();
    if (!ts_.expect_ident(pattern.owner_class, "owning class name")) return;
    pending_class_ref(pattern.owner_class, class_token);
    if (!ts_.expect(TokenKind::Dot, "'.'")) return;
    const Token method_token = ts_.peek();
    if (!ts_.expect_ident(pattern.owner_method, "owning method name")) return;
    refs_.push_back({PendingRef::Kind::MethodOfClass, pattern.owner_method,
                     pattern.owner_class, method_token.line, method_token.column});
    if (!ts_.expect(TokenKind::LBrace, "'{'")) return;
    std::set<std::string> event_names;
    while (ts_.check_ident("event")) {
      ts_.next();
      Event event;
      const Token t = ts_.peek();
      if (!ts_.expect_ident(event.name, "event name")) return;
      if (!event_names.insert(event.name).second)
        errors_.push_back({t.line, t.column, "a unique event name", "'" + event.name + "'"});
      if (ts_.accept(TokenKind::LBrace)) {
        if (!ts_.accept_ident("optional")) {
          ts_.error_here("'optional'");
          return;
        }
        event.optional = true;
        if (!ts_.expect(TokenKind::RBrace, "'}'")) return;
      }
      pattern.events.push_back(std::move(event));
    }
    if (!ts_.expect(TokenKind::RBrace, "'}'")) return;
    bool has_mandatory = false;
    for (const Event& e : pattern.events)
      if (!e.optional) has_mandatory = true;
    if (!has_mandatory)
      errors_.push_back({name_token.line, name_token.column,
                         "at least one mandatory event", "only optional events"});
    model_.sequence_patterns.push_back(std::move(pattern));
  }

  void resolve() {
    for (const PendingRef& ref : refs_) {
      switch (ref.kind) {
        case PendingRef::Kind::ClassName:
          if (!model_.find_class(ref.name))
            errors_.push_back({ref.line, ref.column, "a declared class name",
                               "'" + ref.name + "'"});
          break;
        case PendingRef::Kind::MethodOfClass: {
          const ClassDecl* cls = model_.find_class(ref.context_class);
          if (cls && !cls->find_method(ref.name))
            errors_.push_back({ref.line, ref.column,
                               "a method of " + ref.context_class,
                               "'" + ref.name + "'"});
          break;
        }
      }
    }
  }
};

}  // namespace

std::string render(const ParseError& e) {
  return std::to_string(e.line) + ":" + std::to_string(e.column) +
         ": expected " + e.expected + ", found " + e.found;
}

ParseResult parse_model(std::string_view source) {
  ParseResult result;
  Parser parser(source, result.errors);
  result.model = parser.run();
  if (!result.errors.empty()) result.model.reset();
  return result;
}

}  // namespace umlf
