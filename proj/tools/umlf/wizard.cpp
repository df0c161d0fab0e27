#include "wizard.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace umlf::cli {

namespace {

std::string trim(std::string s) {
  const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(s.back())) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && is_space(s[start])) ++start;
  return s.substr(start);
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (std::isalpha(static_cast<unsigned char>(s[0])) == 0 && s[0] != '_')
    return false;
  for (char c : s)
    if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '_' && c != '-')
      return false;
  return true;
}

// Comma or whitespace separated identifiers.
std::vector<std::string> split_names(const std::string& line) {
  std::vector<std::string> names;
  std::string current;
  for (char c : line) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)) != 0) {
      if (!current.empty()) names.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) names.push_back(std::move(current));
  return names;
}

std::string pattern_text(const SequencePattern& pattern) {
  std::string out = pattern.name + ":";
  for (const Event& event : pattern.events) {
    out += " " + event.name;
    if (event.optional) out += "?";
  }
  return out;
}

class Wizard {
 public:
  Wizard(const Model& framework, std::istream& in, std::ostream& out)
      : framework_(framework), in_(in), out_(out) {}

  std::optional<InstantiationSpec> run() {
    const std::vector<Obligation> obligations = list_obligations(framework_);
    out_ << "framework " << framework_.name << ": " << obligations.size()
         << (obligations.size() == 1 ? " obligation" : " obligations") << "\n";

    InstantiationSpec spec;
    spec.framework_name = framework_.name;
    if (!read_identifier("instance name? ", spec.instance_name)) return fail();

    std::size_t index = 0;
    for (const Obligation& ob : obligations) {
      ++index;
      out_ << "\nobligation " << index << "/" << obligations.size() << ": "
           << ob.interface_name
           << (ob.timing == Timing::Dynamic ? " (dynamic, runtime-capable)"
                                            : " (static)")
           << "\n";
      for (const Signature& sig : ob.abstract_methods)
        out_ << "  abstract method " << sig.to_string() << "\n";
      for (const RestrictionClause& clause : ob.attached_clauses)
        out_ << "  restriction " << to_text(clause) << "\n";
      for (const SequencePattern& pattern : ob.attached_patterns)
        out_ << "  pattern " << pattern_text(pattern) << "\n";

      while (true) {
        std::string name;
        const std::string prompt =
            "subclass " + ob.interface_name + "? (name or empty) ";
        if (!read_identifier(prompt, name, /*allow_empty=*/true)) return fail();
        if (name.empty()) break;
        AppClassSpec cls;
        cls.name = std::move(name);
        cls.supertype = ob.interface_name;
        for (const Signature& sig : ob.abstract_methods) {
          out_ << "implement " << sig.to_string() << "\n";
          MethodImpl impl;
          impl.signature = sig;
          if (!read_effects(impl.effects)) return fail();
          cls.methods.push_back(std::move(impl));
        }
        if (!read_new_methods(cls)) return fail();
        spec.app_classes.push_back(std::move(cls));
      }
    }

    if (!read_mop_configs(spec)) return fail();
    return spec;
  }

 private:
  const Model& framework_;
  std::istream& in_;
  std::ostream& out_;

  std::optional<InstantiationSpec> fail() {
    out_ << "\n! input ended before the wizard finished\n";
    return std::nullopt;
  }

  bool read_line(const std::string& prompt, std::string& line) {
    out_ << prompt << std::flush;
    if (!std::getline(in_, line)) return false;
    line = trim(line);
    return true;
  }

  bool read_identifier(const std::string& prompt, std::string& out,
                       bool allow_empty = false) {
    std::string line;
    while (true) {
      if (!read_line(prompt, line)) return false;
      if (line.empty() && allow_empty) {
        out.clear();
        return true;
      }
      if (is_identifier(line)) {
        out = line;
        return true;
      }
      out_ << "! expected an identifier\n";
    }
  }

  bool read_name_list(const std::string& prompt, std::vector<std::string>& out) {
    std::string line;
    while (true) {
      if (!read_line(prompt, line)) return false;
      std::vector<std::string> names = split_names(line);
      bool valid = true;
      for (const std::string& name : names)
        if (!is_identifier(name)) valid = false;
      if (valid) {
        out = std::move(names);
        return true;
      }
      out_ << "! expected identifiers\n";
    }
  }

  bool read_effects(EffectSummary& effects) {
    std::vector<std::string> names;
    if (!read_name_list("  reads? (names or empty) ", names)) return false;
    effects.reads.insert(names.begin(), names.end());
    if (!read_name_list("  writes? (names or empty) ", names)) return false;
    effects.writes.insert(names.begin(), names.end());
    if (!read_name_list("  trace? (events or empty) ", names)) return false;
    if (!names.empty()) effects.trace = Trace{std::move(names)};
    return true;
  }

  bool read_new_methods(AppClassSpec& cls) {
    while (true) {
      std::string name;
      if (!read_identifier("new method? (name or empty) ", name,
                           /*allow_empty=*/true))
        return false;
      if (name.empty()) return true;
      MethodImpl impl;
      impl.signature.name = std::move(name);
      if (!read_params(impl.signature.params)) return false;
      std::string ret;
      if (!read_identifier("  returns? (type or empty) ", ret,
                           /*allow_empty=*/true))
        return false;
      if (!ret.empty()) impl.signature.return_type = std::move(ret);
      if (!read_effects(impl.effects)) return false;
      cls.new_methods.push_back(std::move(impl));
    }
  }

  bool read_params(std::vector<Param>& params) {
    std::string line;
    while (true) {
      if (!read_line("  params? (name: Type, ...) ", line)) return false;
      params.clear();
      if (line.empty()) return true;
      bool valid = true;
      std::stringstream parts(line);
      std::string part;
      while (std::getline(parts, part, ',')) {
        const std::size_t colon = part.find(':');
        if (colon == std::string::npos) {
          valid = false;
          break;
        }
        Param param;
        param.name = trim(part.substr(0, colon));
        param.type_name = trim(part.substr(colon + 1));
        if (!is_identifier(param.name) || !is_identifier(param.type_name)) {
          valid = false;
          break;
        }
        params.push_back(std::move(param));
      }
      if (valid && !params.empty()) return true;
      out_ << "  ! expected name: Type, ...\n";
    }
  }

  bool read_mop_configs(InstantiationSpec& spec) {
    for (const Relationship& rel : framework_.relationships) {
      if (rel.kind != RelationKind::Aggregation || rel.role != "mop") continue;
      const ClassDecl* mop = framework_.find_class(rel.target);
      if (!mop) continue;
      bool seen = false;
      for (const MopConfig& existing : spec.mop_configs)
        if (existing.class_name == rel.target) seen = true;
      if (seen) continue;
      MopConfig config;
      config.class_name = rel.target;
      for (const AttributeDecl& attr : mop->attributes) {
        std::string line;
        while (true) {
          const std::string prompt =
              "configure " + rel.target + "." + attr.name + "? (true/false) ";
          if (!read_line(prompt, line)) return false;
          if (line == "true" || line == "false") break;
          out_ << "! expected true or false\n";
        }
        config.values.emplace_back(attr.name, line == "true");
      }
      spec.mop_configs.push_back(std::move(config));
    }
    return true;
  }
};

}  // namespace

std::optional<InstantiationSpec> run_wizard(const Model& framework,
                                            std::istream& in,
                                            std::ostream& out) {
  return Wizard(framework, in, out).run();
}

}  // namespace umlf::cli
