#include <optics/encode.hpp>

namespace optics {

namespace {

using K = Value::Kind;

const Shape& pair_s()
{
    static const Shape s = pair_shape();
    return s;
}

const Shape& sum_s()
{
    static const Shape s = sum_shape();
    return s;
}

} // namespace

template <>
Functorization<Adapter> functorize<Adapter>()
{
    return {FamilyTag::adapter, id_only(), [](const Shape& f) {
                const auto& id = *f.identity();
                return Adapter{id.unwrap, id.wrap};
            }};
}

template <>
Functorization<Lens> functorize<Lens>()
{
    return {FamilyTag::lens, is_product(), [](const Shape& f) {
                auto p = *f.product();
                return Lens{[p](const Value& fa) {
                                return p.to_product(fa).second();
                            },
                            [p](const Value& b, const Value& fa) {
                                return p.from_product(
                                    Value::pair(p.to_product(fa).first(), b));
                            }};
            }};
}

template <>
Functorization<Prism> functorize<Prism>()
{
    return {FamilyTag::prism, is_sum(), [](const Shape& f) {
                auto s = *f.sum();
                return Prism{[s](const Value& fa) {
                                 return either_from_value(s.to_sum(fa));
                             },
                             [s](const Value& b) {
                                 return s.from_sum(Value::right(b));
                             }};
            }};
}

template <>
Functorization<Setter> functorize<Setter>()
{
    return {FamilyTag::setter, any_functor(), [](const Shape& f) {
                return Setter{[f](const Fn& h) { return f.map(h); }};
            }};
}

template <>
Functorization<AchLens> functorize<AchLens>()
{
    return {FamilyTag::achlens, is_pointed_product(), [](const Shape& f) {
                auto lens = functorize<Lens>().enhance_op(f);
                return AchLens{lens.get, lens.put,
                               [from = f.product()->from_product,
                                unit = f.point()->unit](const Value& b) {
                                   return from(Value::pair(unit, b));
                               }};
            }};
}

template <>
Functorization<Optional> functorize<Optional>()
{
    return {FamilyTag::optional, is_affine(), [](const Shape& f) {
                auto a = *f.affine();
                return Optional{
                    [a](const Value& fa) {
                        auto r = a.to_affine(fa);
                        return r.is(K::left) ? Either<Value>::left(r.inner())
                                             : Either<Value>::right(
                                                   r.inner().second());
                    },
                    [a](const Value& b, const Value& fa) {
                        auto r = a.to_affine(fa);
                        if (r.is(K::left))
                            return r.inner();
                        return a.from_affine(Value::right(
                            Value::pair(r.inner().first(), b)));
                    }};
            }};
}

FunctorFamily functor_family_of(FamilyTag tag)
{
    switch (tag) {
    case FamilyTag::adapter: return id_only();
    case FamilyTag::lens: return is_product();
    case FamilyTag::prism: return is_sum();
    case FamilyTag::setter: return any_functor();
    case FamilyTag::achlens: return is_pointed_product();
    case FamilyTag::optional: return is_affine();
    }
    throw std::invalid_argument{"unregistered family tag"};
}

IsoOptic concrete_to_iso(const Adapter& o)
{
    return iso_inj(o.fwd, o.bwd);
}

IsoOptic concrete_to_iso(const Lens& o)
{
    return IsoOptic{is_product(), pair_s(),
                    [get = o.get](const Value& s) {
                        return Value::pair(s, get(s));
                    },
                    [put = o.put](const Value& p) {
                        return put(p.second(), p.first());
                    }};
}

IsoOptic concrete_to_iso(const Prism& o)
{
    return IsoOptic{is_sum(), sum_s(),
                    [m = o.match](const Value& s) { return to_value(m(s)); },
                    either_fn(identity_fn(), o.build)};
}

IsoOptic concrete_to_iso(const Setter& o)
{
    static const Shape cps = cps_shape();
    return IsoOptic{any_functor(), cps,
                    [over = o.over](const Value& s) {
                        return Value::function([over, s](const Value& k) {
                            return over(k.as_function())(s);
                        });
                    },
                    [](const Value& c) {
                        return c(Value::function(identity_fn()));
                    }};
}

IsoOptic concrete_to_iso(const AchLens& o)
{
    static const Shape maybe_pair = maybe_pair_shape();
    return IsoOptic{is_pointed_product(), maybe_pair,
                    [get = o.get](const Value& s) {
                        return Value::pair(Value::just(s), get(s));
                    },
                    [put = o.put, create = o.create](const Value& p) {
                        const auto& c = p.first();
                        return c.is(K::just) ? put(p.second(), c.inner())
                                             : create(p.second());
                    }};
}

IsoOptic concrete_to_iso(const Optional& o)
{
    static const Shape affine = affine_shape();
    return IsoOptic{is_affine(), affine,
                    [m = o.match](const Value& s) {
                        auto r = m(s);
                        return r.is_right
                                   ? Value::right(Value::pair(s, r.value))
                                   : Value::left(r.value);
                    },
                    [put = o.put](const Value& e) {
                        if (e.is(K::left))
                            return e.inner();
                        return put(e.inner().second(), e.inner().first());
                    }};
}

} // namespace optics
