#pragma once

#include <optics/families.hpp>
#include <optics/functors.hpp>
#include <optics/iso.hpp>

#include <any>
#include <functional>
#include <stdexcept>
#include <string>

/// Profunctor optics.
///
/// A profunctor is passed around as a capability record: `dimap` plus an
/// `enhance` that lifts `p a b` through a container shape to
/// `p (f a) (f b)`. Profunctor values travel as std::any; `make_capability`
/// builds a record from typed operations.
///
/// A ProfOptic for a functor family turns any capability record that can
/// enhance the family's shapes into a map `p a b -> p s t`.
namespace optics {

/// Raised by `enhance` for a shape the profunctor cannot lift through.
class unsupported_shape : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operator needs more structure than an optic's family has.
class unsupported_operator : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct ProfunctorCapability
{
    std::string name;
    std::function<std::any(const Fn&, const Fn&, const std::any&)> dimap;
    std::function<std::any(const Shape&, const std::any&)> enhance;
    std::function<bool(const Shape&)> supports;
};

template <class P>
ProfunctorCapability
make_capability(std::string name,
                std::function<P(const Fn&, const Fn&, const P&)> dimap,
                std::function<P(const Shape&, const P&)> enhance,
                std::function<bool(const Shape&)> supports)
{
    ProfunctorCapability cap;
    cap.name = std::move(name);
    cap.supports = supports;
    cap.dimap = [dimap](const Fn& f, const Fn& g, const std::any& p) {
        return std::any{dimap(f, g, std::any_cast<const P&>(p))};
    };
    cap.enhance = [enhance, supports, n = cap.name](const Shape& shape,
                                                    const std::any& p) {
        if (!supports(shape))
            throw unsupported_shape{n + " cannot enhance through shape " +
                                    shape.name()};
        return std::any{enhance(shape, std::any_cast<const P&>(p))};
    };
    return cap;
}

/// `s -> a`, phantom in the written types.
struct Getting
{
    Fn view;
};

/// `s -> t + a`
struct Matching
{
    Fn match;
};

/// `b -> t`, phantom in the read types.
struct Reviewing
{
    Fn review;
};

/// `(->)`: dimap is pre/post composition, enhance is the shape's map.
ProfunctorCapability function_arrow();
/// Enhances through product-capable shapes.
ProfunctorCapability getting();
/// Enhances through affine-capable shapes (products and sums included).
ProfunctorCapability matching();
/// Enhances through sum-capable and pointed-product shapes.
ProfunctorCapability reviewing();
/// Isomorphism optics as a profunctor, enhancing through `family`.
ProfunctorCapability iso_capability(FunctorFamily family);

class ProfOptic
{
public:
    using Transform =
        std::function<std::any(const ProfunctorCapability&, const std::any&)>;

    ProfOptic(FunctorFamily family, Transform transform)
        : family_{family}
        , transform_{std::move(transform)}
    {}

    FunctorFamily family() const noexcept { return family_; }

    std::any apply(const ProfunctorCapability& cap, const std::any& p) const
    {
        return transform_(cap, p);
    }

    template <class P>
    P apply_as(const ProfunctorCapability& cap, const P& p) const
    {
        return std::any_cast<P>(transform_(cap, std::any{p}));
    }

private:
    FunctorFamily family_;
    Transform transform_;
};

/// `l(cap, p)`
std::any prof_apply(const ProfOptic& l, const ProfunctorCapability& cap,
                    const std::any& p);

ProfOptic prof_identity();
/// `outer . inner`; the family is the join of both families.
ProfOptic prof_compose(const ProfOptic& outer, const ProfOptic& inner);
/// `dimap f g`
ProfOptic prof_dimap(Fn f, Fn g);
/// `enhance @shape`, claimed for `family`; throws family_mismatch for a
/// non-member.
ProfOptic prof_enhance(FunctorFamily family, const Shape& shape);

/// `enhance` at the (c, -) shape.
ProfOptic prof_second();
/// `dimap swap swap . second`
ProfOptic prof_first();
/// `enhance` at the (c + -) shape.
ProfOptic prof_right();
/// `dimap maybeToSum sumToMaybe . right`
ProfOptic prof_just();

template <>
struct optic_family<ProfOptic>
{
    using value_type = Value;

    static ProfOptic inj(Fn f, Fn g)
    {
        return prof_dimap(std::move(f), std::move(g));
    }
    static ProfOptic compose(const ProfOptic& a, const ProfOptic& b)
    {
        return prof_compose(a, b);
    }
    /// Instantiation at the function arrow.
    static Fn map(const ProfOptic& l, Fn h)
    {
        return l.apply_as<Fn>(function_arrow(), h);
    }
};

/// `unGetting (l idGetting)`; needs a product family.
Fn get_operator(const ProfOptic& l);
/// `unMatching (l idMatching)` with `idMatching = Right`; needs an affine
/// family.
Fn match_operator(const ProfOptic& l);
/// `unReviewing (l id)`; needs a sum or pointed-product family.
Fn build_operator(const ProfOptic& l);

/// `\cap p -> dimap forward backward (enhance shape p)`
ProfOptic iso_to_prof(const IsoOptic& l);
/// `l` instantiated at isomorphism optics, applied to the identity.
IsoOptic prof_to_iso(const ProfOptic& l);

Observation observe_prof(const ProfOptic& l, const ProfOptic& r,
                         const Signature& sig, std::uint64_t seed = 0x0971c5);

} // namespace optics
