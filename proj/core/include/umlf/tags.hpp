#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace umlf {

// Closed registry of tagged values. Tag names in model source use the
// hyphenated lowercase spellings returned by tag_name().
enum class Tag : std::uint8_t {
  Variable,
  Extensible,
  Incomplete,
  ApplClass,
  Static,
  Dynamic,
  ForAllNewMethods,
  Optional,
  SeparationTemplate,
  SeparationHook,
  CHook,
};

inline constexpr int tag_count = 11;

// Element kinds a tag may legally annotate.
enum class TagTarget : std::uint8_t {
  Class = 1 << 0,
  Method = 1 << 1,
  Generalization = 1 << 2,
  Realization = 1 << 3,
  Constraint = 1 << 4,
  Event = 1 << 5,
};

struct TagDef {
  Tag tag;
  std::string_view name;
  std::uint8_t applies_to;  // bitwise-or of TagTarget
  std::string_view meaning;
};

std::span<const TagDef> tag_registry();
const TagDef& tag_def(Tag tag);
std::string_view tag_name(Tag tag);
std::optional<Tag> tag_from_name(std::string_view name);
bool tag_applies_to(Tag tag, TagTarget target);

// Value-type set of tags; iteration and printing follow registry order.
class TagSet {
 public:
  constexpr TagSet() = default;
  constexpr TagSet(std::initializer_list<Tag> tags) {
    for (Tag t : tags) add(t);
  }

  constexpr void add(Tag t) { bits_ |= bit(t); }
  constexpr void remove(Tag t) { bits_ &= static_cast<std::uint16_t>(~bit(t)); }
  constexpr bool contains(Tag t) const { return (bits_ & bit(t)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const {
    int n = 0;
    for (int i = 0; i < tag_count; ++i) n += (bits_ >> i) & 1;
    return n;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (int i = 0; i < tag_count; ++i)
      if ((bits_ >> i) & 1) fn(static_cast<Tag>(i));
  }

  constexpr bool operator==(const TagSet&) const = default;

 private:
  static constexpr std::uint16_t bit(Tag t) {
    return static_cast<std::uint16_t>(1u << static_cast<int>(t));
  }
  std::uint16_t bits_ = 0;
};

}  // namespace umlf
