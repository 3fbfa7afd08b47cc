#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace optics {

/// Identifies a concrete optic family.
///
/// Families are ordered by embedding: `a <= b` when every optic of family
/// `a` can be viewed as one of family `b` (losing operators on the way).
///
///   ADAPTER <= ACHLENS <= LENS <= OPTIONAL <= SETTER
///   ADAPTER <= PRISM <= OPTIONAL
enum class FamilyTag
{
    adapter,
    lens,
    prism,
    optional,
    achlens,
    setter,
};

inline constexpr std::array<FamilyTag, 6> all_family_tags = {
    FamilyTag::adapter,
    FamilyTag::lens,
    FamilyTag::prism,
    FamilyTag::optional,
    FamilyTag::achlens,
    FamilyTag::setter,
};

/// Upper-case family name, as used in messages ("LENS", "SETTER", ...).
std::string_view to_string(FamilyTag tag) noexcept;
std::optional<FamilyTag> family_tag_from_string(std::string_view name);

/// Embedding order on families.
bool family_leq(FamilyTag a, FamilyTag b) noexcept;

/// Least family both arguments embed into.
FamilyTag join(FamilyTag a, FamilyTag b) noexcept;

// Operator support per family.
bool supports_get(FamilyTag tag) noexcept;
bool supports_match(FamilyTag tag) noexcept;
bool supports_build(FamilyTag tag) noexcept;
bool supports_create(FamilyTag tag) noexcept;

} // namespace optics
