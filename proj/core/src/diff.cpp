#include "umlf/diff.hpp"

#include <algorithm>
#include <map>

namespace umlf {

namespace {

bool in_scope(const std::optional<std::set<std::string>>& scope,
              const std::string& path) {
  return !scope || scope->count(path) > 0;
}

void emit(DiffReport& report, const std::optional<std::set<std::string>>& scope,
          DiffEntry::Op op, std::string path, std::string note) {
  if (!in_scope(scope, path)) return;
  report.entries.push_back({op, std::move(path), std::move(note)});
}

// Class properties that are not themselves diffable elements.
bool class_header_equal(const ClassDecl& a, const ClassDecl& b) {
  return a.name == b.name && a.kind == b.kind && a.is_abstract == b.is_abstract &&
         a.supertypes == b.supertypes && a.tags == b.tags &&
         a.constraints == b.constraints;
}

std::string describe_member_change(const std::string& old_name,
                                   const std::string& new_name) {
  if (old_name != new_name) return "renamed to " + new_name;
  return "declaration changed";
}

template <typename MemberT>
void diff_members(DiffReport& report,
                  const std::optional<std::set<std::string>>& scope,
                  const Model& model_a, const std::string& class_name,
                  const std::vector<MemberT>& as, const std::vector<MemberT>& bs) {
  std::vector<bool> a_used(as.size(), false);
  std::vector<bool> b_used(bs.size(), false);

  // Pass 1: match by name.
  for (std::size_t i = 0; i < as.size(); ++i) {
    for (std::size_t j = 0; j < bs.size(); ++j) {
      if (b_used[j] || as[i].name != bs[j].name) continue;
      a_used[i] = b_used[j] = true;
      if (!(as[i] == bs[j]))
        emit(report, scope, DiffEntry::Op::Changed,
             member_path(model_a, class_name, as[i].name),
             describe_member_change(as[i].name, bs[j].name));
      break;
    }
  }
  // Pass 2: pair leftovers in order, so a rename is one Changed entry.
  std::size_t j = 0;
  for (std::size_t i = 0; i < as.size(); ++i) {
    if (a_used[i]) continue;
    while (j < bs.size() && b_used[j]) ++j;
    if (j < bs.size()) {
      b_used[j] = true;
      emit(report, scope, DiffEntry::Op::Changed,
           member_path(model_a, class_name, as[i].name),
           describe_member_change(as[i].name, bs[j].name));
    } else {
      emit(report, scope, DiffEntry::Op::Removed,
           member_path(model_a, class_name, as[i].name), "member removed");
    }
  }
  for (std::size_t k = 0; k < bs.size(); ++k) {
    if (!b_used[k])
      emit(report, scope, DiffEntry::Op::Added,
           member_path(model_a, class_name, bs[k].name), "member added");
  }
}

std::string relationship_note(const Relationship& rel) {
  std::string note(to_keyword(rel.kind));
  note += " ";
  note += rel.source;
  note += " -> ";
  note += rel.target;
  return note;
}

}  // namespace

std::set<std::string> element_paths(const Model& m) {
  std::set<std::string> paths;
  for (const ClassDecl& cls : m.classes) {
    paths.insert(class_path(m, cls.name));
    for (const AttributeDecl& a : cls.attributes)
      paths.insert(member_path(m, cls.name, a.name));
    for (const MethodDecl& mm : cls.methods)
      paths.insert(member_path(m, cls.name, mm.name));
  }
  for (std::size_t i = 0; i < m.relationships.size(); ++i)
    paths.insert(relationship_path(m, i));
  for (std::size_t i = 0; i < m.sequence_patterns.size(); ++i)
    paths.insert(sequence_path(m, i));
  return paths;
}

DiffReport structural_diff(const Model& a, const Model& b,
                           const std::optional<std::set<std::string>>& scope) {
  DiffReport report;

  for (const ClassDecl& ca : a.classes) {
    const ClassDecl* cb = b.find_class(ca.name);
    if (!cb) {
      emit(report, scope, DiffEntry::Op::Removed, class_path(a, ca.name),
           "class removed");
      continue;
    }
    if (!class_header_equal(ca, *cb))
      emit(report, scope, DiffEntry::Op::Changed, class_path(a, ca.name),
           "class declaration changed");
    diff_members(report, scope, a, ca.name, ca.attributes, cb->attributes);
    diff_members(report, scope, a, ca.name, ca.methods, cb->methods);
  }
  for (const ClassDecl& cb : b.classes) {
    if (a.find_class(cb.name)) continue;
    emit(report, scope, DiffEntry::Op::Added, class_path(a, cb.name), "class added");
    for (const AttributeDecl& attr : cb.attributes)
      emit(report, scope, DiffEntry::Op::Added, member_path(a, cb.name, attr.name),
           "member added");
    for (const MethodDecl& m : cb.methods)
      emit(report, scope, DiffEntry::Op::Added, member_path(a, cb.name, m.name),
           "member added");
  }

  const std::size_t rel_common = std::min(a.relationships.size(), b.relationships.size());
  for (std::size_t i = 0; i < rel_common; ++i) {
    if (!(a.relationships[i] == b.relationships[i]))
      emit(report, scope, DiffEntry::Op::Changed, relationship_path(a, i),
           relationship_note(b.relationships[i]));
  }
  for (std::size_t i = rel_common; i < a.relationships.size(); ++i)
    emit(report, scope, DiffEntry::Op::Removed, relationship_path(a, i),
         relationship_note(a.relationships[i]));
  for (std::size_t i = rel_common; i < b.relationships.size(); ++i)
    emit(report, scope, DiffEntry::Op::Added, relationship_path(a, i),
         relationship_note(b.relationships[i]));

  const std::size_t seq_common =
      std::min(a.sequence_patterns.size(), b.sequence_patterns.size());
  for (std::size_t i = 0; i < seq_common; ++i) {
    if (!(a.sequence_patterns[i] == b.sequence_patterns[i]))
      emit(report, scope, DiffEntry::Op::Changed, sequence_path(a, i),
           "pattern " + b.sequence_patterns[i].name + " changed");
  }
  for (std::size_t i = seq_common; i < a.sequence_patterns.size(); ++i)
    emit(report, scope, DiffEntry::Op::Removed, sequence_path(a, i),
         "pattern " + a.sequence_patterns[i].name + " removed");
  for (std::size_t i = seq_common; i < b.sequence_patterns.size(); ++i)
    emit(report, scope, DiffEntry::Op::Added, sequence_path(a, i),
         "pattern " + b.sequence_patterns[i].name + " added");

  if (a.name != b.name || a.instance_name != b.instance_name ||
      !(a.mop_configs == b.mop_configs)) {
    emit(report, scope, DiffEntry::Op::Changed, a.name, "model header changed");
  }
  return report;
}

}  // namespace umlf
