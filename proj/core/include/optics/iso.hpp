#pragma once

#include <optics/families.hpp>
#include <optics/functors.hpp>
#include <optics/observe.hpp>

#include <functional>
#include <optional>

/// Isomorphism optics: a container shape `f` with `forward : s -> f a` and
/// `backward : f b -> t`. Two isomorphism optics are the same optic when they
/// differ by a natural transformation between their shapes; the library
/// decides that observationally.
namespace optics {

class IsoOptic
{
public:
    /// Throws family_mismatch when `family` is given and `shape` is not a
    /// member of it. Leaving the family unset marks a plain injection,
    /// which belongs to every family.
    IsoOptic(std::optional<FunctorFamily> family, Shape shape, Fn forward,
             Fn backward);

    const std::optional<FunctorFamily>& family() const noexcept
    {
        return family_;
    }
    const Shape& shape() const noexcept { return shape_; }
    const Fn& forward() const noexcept { return forward_; }
    const Fn& backward() const noexcept { return backward_; }

    /// The same optic, now claimed for `family`.
    IsoOptic in_family(FunctorFamily family) const;

private:
    std::optional<FunctorFamily> family_;
    Shape shape_;
    Fn forward_;
    Fn backward_;
};

/// Injection of a function pair through the identity shape.
IsoOptic iso_inj(Fn f, Fn g);

/// `IsoOptic (Compose . fmap a2 . a1) (b1 . fmap b2 . unCompose)` over
/// `compose_shapes(l1.shape, l2.shape)`. Throws family_mismatch when both
/// sides carry different families.
IsoOptic iso_compose(const IsoOptic& outer, const IsoOptic& inner);

/// `backward . shape.map(h) . forward`
Fn iso_map_optic(const IsoOptic& l, const Fn& h);

/// `IsoOptic id id` at `shape`; throws family_mismatch for a non-member.
IsoOptic enhance_iso(FunctorFamily family, const Shape& shape);

/// `iso_inj(forward, backward) . enhance_iso(shape)`, which is
/// observationally `l` itself.
IsoOptic normal_form(const IsoOptic& l);

template <>
struct optic_family<IsoOptic>
{
    using value_type = Value;

    static IsoOptic inj(Fn f, Fn g) { return iso_inj(std::move(f), std::move(g)); }
    static IsoOptic compose(const IsoOptic& a, const IsoOptic& b)
    {
        return iso_compose(a, b);
    }
    static Fn map(const IsoOptic& l, Fn h) { return iso_map_optic(l, h); }
};

/// Agreement of `iso_map_optic` on every probe at every whole in `sig.s`.
Observation observe_iso(const IsoOptic& l, const IsoOptic& r,
                        const Signature& sig, std::uint64_t seed = 0x0971c5);

bool observational_eq(const IsoOptic& l, const IsoOptic& r,
                      const Signature& sig);

/// The family morphism `IsoOptic -> O` determined by an enhancement
/// operator: `inj_optic(forward, backward) . enhance_op(shape)`.
template <OpticFamily O>
O enhance_to_arrow(const IsoOptic& l,
                   const std::function<O(const Shape&)>& enhance_op)
{
    return compose(inj_optic<O>(l.forward(), l.backward()),
                   enhance_op(l.shape()));
}

/// The Enhanceable instance of isomorphism optics, for the given family.
std::function<IsoOptic(const Shape&)> iso_enhance_op(FunctorFamily family);

} // namespace optics
