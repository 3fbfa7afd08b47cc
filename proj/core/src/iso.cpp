#include <optics/iso.hpp>

#include <string>

namespace optics {

namespace {

std::optional<FunctorFamily> common_family(const IsoOptic& a,
                                           const IsoOptic& b)
{
    if (!a.family())
        return b.family();
    if (!b.family() || *a.family() == *b.family())
        return a.family();
    throw family_mismatch{std::string{"cannot compose isomorphism optics of "} +
                          a.family()->name() + " and " + b.family()->name()};
}

} // namespace

IsoOptic::IsoOptic(std::optional<FunctorFamily> family, Shape shape,
                   Fn forward, Fn backward)
    : family_{family}
    , shape_{std::move(shape)}
    , forward_{std::move(forward)}
    , backward_{std::move(backward)}
{
    if (family_ && !family_->member(shape_))
        throw family_mismatch{"shape " + shape_.name() + " is not a member of " +
                              family_->name()};
}

IsoOptic IsoOptic::in_family(FunctorFamily family) const
{
    return IsoOptic{family, shape_, forward_, backward_};
}

IsoOptic iso_inj(Fn f, Fn g)
{
    static const Shape id = id_shape();
    return IsoOptic{
        std::nullopt, id,
        [f = std::move(f)](const Value& s) { return Value::id(f(s)); },
        [g = std::move(g)](const Value& fb) { return g(fb.inner()); }};
}

IsoOptic iso_compose(const IsoOptic& outer, const IsoOptic& inner)
{
    auto family = common_family(outer, inner);
    auto shape = compose_shapes(outer.shape(), inner.shape());
    auto lift_fwd = outer.shape().map(inner.forward());
    auto lift_bwd = outer.shape().map(inner.backward());
    return IsoOptic{
        family, std::move(shape),
        [a1 = outer.forward(), lift_fwd](const Value& s) {
            return Value::compose(lift_fwd(a1(s)));
        },
        [b1 = outer.backward(), lift_bwd](const Value& fgb) {
            return b1(lift_bwd(fgb.inner()));
        }};
}

Fn iso_map_optic(const IsoOptic& l, const Fn& h)
{
    return [fwd = l.forward(), bwd = l.backward(),
            lifted = l.shape().map(h)](const Value& s) {
        return bwd(lifted(fwd(s)));
    };
}

IsoOptic enhance_iso(FunctorFamily family, const Shape& shape)
{
    return IsoOptic{family, shape, identity_fn(), identity_fn()};
}

IsoOptic normal_form(const IsoOptic& l)
{
    auto family = l.family().value_or(any_functor());
    auto result = iso_compose(iso_inj(l.forward(), l.backward()),
                              enhance_iso(family, l.shape()));
    return l.family() ? result : IsoOptic{std::nullopt, result.shape(),
                                          result.forward(), result.backward()};
}

Observation observe_iso(const IsoOptic& l, const IsoOptic& r,
                        const Signature& sig, std::uint64_t seed)
{
    return observe_maps([&](const Fn& h) { return iso_map_optic(l, h); },
                        [&](const Fn& h) { return iso_map_optic(r, h); },
                        sig, seed);
}

bool observational_eq(const IsoOptic& l, const IsoOptic& r,
                      const Signature& sig)
{
    return bool(observe_iso(l, r, sig));
}

std::function<IsoOptic(const Shape&)> iso_enhance_op(FunctorFamily family)
{
    return [family](const Shape& shape) { return enhance_iso(family, shape); };
}

} // namespace optics
