#include "umlf/variation.hpp"

namespace umlf {

std::string_view to_keyword(Timing t) {
  return t == Timing::Static ? "static" : "dynamic";
}

std::string_view to_keyword(VariationPoint::Kind k) {
  switch (k) {
    case VariationPoint::Kind::VariableMethod: return "variable-method";
    case VariationPoint::Kind::ExtensibleClass: return "extensible-class";
    case VariationPoint::Kind::ExtensibleInterface: return "extensible-interface";
  }
  return "variable-method";
}

std::string locus_path(const Model& m, const VariationPoint& vp) {
  switch (vp.kind) {
    case VariationPoint::Kind::VariableMethod:
      return member_path(m, vp.class_name, vp.method_name);
    case VariationPoint::Kind::ExtensibleClass:
      return class_path(m, vp.class_name);
    case VariationPoint::Kind::ExtensibleInterface:
      return relationship_path(m, vp.relationship_index);
  }
  return class_path(m, vp.class_name);
}

std::optional<Timing> timing_of(const TagSet& tags) {
  const bool s = tags.contains(Tag::Static);
  const bool d = tags.contains(Tag::Dynamic);
  if (s == d) return std::nullopt;  // neither or both
  return s ? Timing::Static : Timing::Dynamic;
}

namespace {

Timing timing_of_locus(const TagSet& tags, const std::string& path) {
  if (tags.contains(Tag::Static) && tags.contains(Tag::Dynamic))
    throw ModelError("variation point " + path + " carries both {static} and {dynamic}");
  if (std::optional<Timing> t = timing_of(tags)) return *t;
  throw ModelError("variation point " + path + " carries neither {static} nor {dynamic}");
}

}  // namespace

std::vector<VariationPoint> classify_variation_points(const Model& m) {
  std::vector<VariationPoint> points;
  for (const ClassDecl& cls : m.classes) {
    for (const MethodDecl& method : cls.methods) {
      if (!method.tags.contains(Tag::Variable)) continue;
      VariationPoint vp;
      vp.kind = VariationPoint::Kind::VariableMethod;
      vp.class_name = cls.name;
      vp.method_name = method.name;
      vp.timing = timing_of_locus(method.tags, member_path(m, cls.name, method.name));
      points.push_back(std::move(vp));
    }
  }
  for (const ClassDecl& cls : m.classes) {
    if (!cls.tags.contains(Tag::Extensible)) continue;
    VariationPoint vp;
    vp.kind = VariationPoint::Kind::ExtensibleClass;
    vp.class_name = cls.name;
    vp.timing = timing_of_locus(cls.tags, class_path(m, cls.name));
    points.push_back(std::move(vp));
  }
  for (std::size_t i = 0; i < m.relationships.size(); ++i) {
    const Relationship& rel = m.relationships[i];
    if (rel.kind != RelationKind::Generalization &&
        rel.kind != RelationKind::Realization)
      continue;
    if (!rel.tags.contains(Tag::Incomplete)) continue;
    VariationPoint vp;
    vp.kind = VariationPoint::Kind::ExtensibleInterface;
    vp.class_name = rel.target;
    vp.relationship_index = i;
    vp.timing = timing_of_locus(rel.tags, relationship_path(m, i));
    points.push_back(std::move(vp));
  }
  return points;
}

bool is_extension_parent(const Model& m, const ClassDecl& cls) {
  for (const Relationship& rel : m.relationships) {
    if (rel.kind != RelationKind::Generalization &&
        rel.kind != RelationKind::Realization)
      continue;
    if (rel.target == cls.name && rel.tags.contains(Tag::Incomplete)) return true;
  }
  if (cls.kind == ClassKind::Interface || cls.is_abstract)
    return cls.tags.contains(Tag::Static) || cls.tags.contains(Tag::Dynamic);
  return false;
}

Timing extension_parent_timing(const Model& m, const ClassDecl& cls) {
  if (std::optional<Timing> t = timing_of(cls.tags)) return *t;
  for (std::size_t i = 0; i < m.relationships.size(); ++i) {
    const Relationship& rel = m.relationships[i];
    if (rel.kind != RelationKind::Generalization &&
        rel.kind != RelationKind::Realization)
      continue;
    if (rel.target != cls.name || !rel.tags.contains(Tag::Incomplete)) continue;
    if (std::optional<Timing> t = timing_of(rel.tags)) return *t;
  }
  throw ModelError("no timing tag reachable for extension parent " +
                   class_path(m, cls.name));
}

bool is_pattern_locus(const Model& m, const ClassDecl& cls, const MethodDecl& method) {
  if (method.tags.contains(Tag::Variable)) return true;
  if (method.is_abstract && is_extension_parent(m, cls)) return true;
  for (const Relationship& rel : m.relationships) {
    if (rel.kind == RelationKind::Aggregation && rel.role == "mop" &&
        rel.target == cls.name)
      return true;
  }
  return false;
}

}  // namespace umlf
