#include "umlf/tags.hpp"

#include <array>

namespace umlf {

namespace {

constexpr std::uint8_t kClass = static_cast<std::uint8_t>(TagTarget::Class);
constexpr std::uint8_t kMethod = static_cast<std::uint8_t>(TagTarget::Method);
constexpr std::uint8_t kGen = static_cast<std::uint8_t>(TagTarget::Generalization);
constexpr std::uint8_t kReal = static_cast<std::uint8_t>(TagTarget::Realization);
constexpr std::uint8_t kConstraint = static_cast<std::uint8_t>(TagTarget::Constraint);
constexpr std::uint8_t kEvent = static_cast<std::uint8_t>(TagTarget::Event);

constexpr std::array<TagDef, tag_count> kRegistry{{
    {Tag::Variable, "variable", kMethod,
     "the method body is supplied per framework instance"},
    {Tag::Extensible, "extensible", kClass,
     "the class accepts new methods at instantiation time"},
    {Tag::Incomplete, "incomplete", kGen | kReal,
     "further subclasses or realizations may be added"},
    {Tag::ApplClass, "appl-class", kClass,
     "the class belongs to an application built on the framework"},
    {Tag::Static, "static", kClass | kMethod | kGen | kReal,
     "the variation point is bound before compilation"},
    {Tag::Dynamic, "dynamic", kClass | kMethod | kGen | kReal,
     "the variation point may be rebound at run time"},
    {Tag::ForAllNewMethods, "for-all-new-methods", kConstraint,
     "the restriction covers every method added or overridden downstream"},
    {Tag::Optional, "optional", kEvent,
     "the event may be omitted from a conforming trace"},
    {Tag::SeparationTemplate, "separation-template", kClass,
     "template role of the separated template/hook pair"},
    {Tag::SeparationHook, "separation-hook", kClass,
     "hook role of the separated template/hook pair"},
    {Tag::CHook, "c-hook", kClass,
     "application class acting as the concrete hook"},
}};

}  // namespace

std::span<const TagDef> tag_registry() { return kRegistry; }

const TagDef& tag_def(Tag tag) { return kRegistry[static_cast<int>(tag)]; }

std::string_view tag_name(Tag tag) { return tag_def(tag).name; }

std::optional<Tag> tag_from_name(std::string_view name) {
  for (const TagDef& def : kRegistry)
    if (def.name == name) return def.tag;
  return std::nullopt;
}

bool tag_applies_to(Tag tag, TagTarget target) {
  return (tag_def(tag).applies_to & static_cast<std::uint8_t>(target)) != 0;
}

}  // namespace umlf
