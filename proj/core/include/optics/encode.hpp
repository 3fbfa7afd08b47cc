#pragma once

#include <optics/families.hpp>
#include <optics/functors.hpp>
#include <optics/iso.hpp>
#include <optics/prof.hpp>

#include <functional>

/// Functorizations and the conversions concrete <-> iso <-> profunctor.
///
/// A functorization of a concrete family pairs it with the functor family it
/// lifts through, together with `enhance_op : f -> O (f a) (f b)`:
///
///   ADAPTER   IdOnly             (unwrap, wrap)
///   LENS      IsProduct          get = snd . toProduct
///   PRISM     IsSum              match = toSum, build = fromSum . Right
///   SETTER    AnyFunctor         over = fmap
///   ACHLENS   IsPointedProduct   lens parts, create b = fromProduct (pt, b)
///   OPTIONAL  IsAffine           match and put through toAffine
namespace optics {

template <class O>
struct Functorization
{
    FamilyTag tag;
    FunctorFamily family;
    std::function<O(const Shape&)> enhance_op;
};

template <class O>
Functorization<O> functorize(); // specialised per family

template <> Functorization<Adapter> functorize<Adapter>();
template <> Functorization<Lens> functorize<Lens>();
template <> Functorization<Prism> functorize<Prism>();
template <> Functorization<Setter> functorize<Setter>();
template <> Functorization<AchLens> functorize<AchLens>();
template <> Functorization<Optional> functorize<Optional>();

/// The functor family each concrete family lifts through.
FunctorFamily functor_family_of(FamilyTag tag);

IsoOptic concrete_to_iso(const Adapter& o);
/// Shape (s, -): `forward s = (s, get s)`, `backward (s, b) = put b s`.
IsoOptic concrete_to_iso(const Lens& o);
/// Shape (t + -): `forward = match`, `backward = either id build`.
IsoOptic concrete_to_iso(const Prism& o);
/// Continuation shape: `forward s = \k -> over k s`, `backward c = c id`.
IsoOptic concrete_to_iso(const Setter& o);
/// Shape (Maybe s, -): a missing whole is rebuilt with `create`.
IsoOptic concrete_to_iso(const AchLens& o);
/// Shape (t + (s, -)).
IsoOptic concrete_to_iso(const Optional& o);

/// `inj_optic(forward, backward) . enhance_op(shape)`. Throws
/// family_mismatch when the shape is outside the family's functor family.
template <class O>
O unfunctorize(const IsoOptic& l)
{
    auto fz = functorize<O>();
    if (!fz.family.member(l.shape()))
        throw family_mismatch{"shape " + l.shape().name() + " is not a " +
                              fz.family.name() + " shape"};
    return enhance_to_arrow<O>(l, fz.enhance_op);
}

template <class O>
struct ProfEncoding
{
    std::function<ProfOptic(const O&)> encode;
    std::function<O(const ProfOptic&)> decode;
};

/// `encode = iso_to_prof . concrete_to_iso`,
/// `decode = unfunctorize . prof_to_iso`.
template <class O>
ProfEncoding<O> prof_encoding()
{
    return {[](const O& o) { return iso_to_prof(concrete_to_iso(o)); },
            [](const ProfOptic& l) { return unfunctorize<O>(prof_to_iso(l)); }};
}

/// A concrete family used as a profunctor: `dimap = dimap_optic`,
/// `enhance f o = enhance_op(f) . o`.
template <class O>
ProfunctorCapability family_capability(const char* name)
{
    auto fz = functorize<O>();
    return make_capability<O>(
        name,
        [](const Fn& f, const Fn& g, const O& o) { return dimap_optic(f, g, o); },
        [op = fz.enhance_op](const Shape& shape, const O& o) {
            return compose(op(shape), o);
        },
        [family = fz.family](const Shape& shape) {
            return family.member(shape);
        });
}

} // namespace optics
