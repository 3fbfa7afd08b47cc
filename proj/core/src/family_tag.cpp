#include <optics/family_tag.hpp>

#include <utility>

namespace optics {

std::string_view to_string(FamilyTag tag) noexcept
{
    switch (tag) {
    case FamilyTag::adapter: return "ADAPTER";
    case FamilyTag::lens: return "LENS";
    case FamilyTag::prism: return "PRISM";
    case FamilyTag::optional: return "OPTIONAL";
    case FamilyTag::achlens: return "ACHLENS";
    case FamilyTag::setter: return "SETTER";
    }
    return "?";
}

std::optional<FamilyTag> family_tag_from_string(std::string_view name)
{
    for (auto t : all_family_tags)
        if (to_string(t) == name)
            return t;
    return std::nullopt;
}

namespace {

// Immediate embeddings; family_leq is their reflexive-transitive closure.
constexpr std::pair<FamilyTag, FamilyTag> covers[] = {
    {FamilyTag::adapter, FamilyTag::achlens},
    {FamilyTag::adapter, FamilyTag::prism},
    {FamilyTag::achlens, FamilyTag::lens},
    {FamilyTag::lens, FamilyTag::optional},
    {FamilyTag::prism, FamilyTag::optional},
    {FamilyTag::optional, FamilyTag::setter},
};

} // namespace

bool family_leq(FamilyTag a, FamilyTag b) noexcept
{
    if (a == b)
        return true;
    for (auto [lo, hi] : covers)
        if (lo == a && family_leq(hi, b))
            return true;
    return false;
}

FamilyTag join(FamilyTag a, FamilyTag b) noexcept
{
    // the least common upper bound; SETTER bounds everything
    auto best = FamilyTag::setter;
    for (auto c : all_family_tags)
        if (family_leq(a, c) && family_leq(b, c) && family_leq(c, best))
            best = c;
    return best;
}

bool supports_get(FamilyTag tag) noexcept
{
    return family_leq(tag, FamilyTag::lens);
}

bool supports_match(FamilyTag tag) noexcept
{
    return family_leq(tag, FamilyTag::optional);
}

bool supports_build(FamilyTag tag) noexcept
{
    return family_leq(tag, FamilyTag::prism);
}

bool supports_create(FamilyTag tag) noexcept
{
    return family_leq(tag, FamilyTag::achlens);
}

} // namespace optics
