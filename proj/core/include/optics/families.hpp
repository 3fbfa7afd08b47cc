#pragma once

#include <optics/family_tag.hpp>
#include <optics/value.hpp>

#include <concepts>
#include <functional>
#include <stdexcept>
#include <utility>

/// Concrete optic families and the optic-family interface.
///
/// Each family is a plain record of total functions, templated on the carrier
/// value type `V` so the same families serve the core value universe and
/// other document models. An optic with focus types (A, B) and whole types
/// (S, T) is written `Optic<A,B,S,T>` in the comments below.
///
/// The family interface lives in `optic_family<O>`: composition, injection
/// of function pairs, and the action on functions (`map`). The free function
/// templates `compose`, `inj_optic`, `identity_optic`, `map_optic`,
/// `multi_map_optic` and `dimap_optic` dispatch through it.
namespace optics {

template <class V>
using Fun = std::function<V(const V&)>;

/// `put(b, s) -> t`
template <class V>
using Put = std::function<V(const V&, const V&)>;

/// Result of a match: a residual `t` on the left or a focus `a` on the right.
template <class V>
struct Either
{
    bool is_right = false;
    V value{};

    static Either left(V v) { return {false, std::move(v)}; }
    static Either right(V v) { return {true, std::move(v)}; }

    friend bool operator==(const Either&, const Either&) = default;
};

template <class V>
using Matcher = std::function<Either<V>(const V&)>;

inline Value to_value(const Either<Value>& e)
{
    return e.is_right ? Value::right(e.value) : Value::left(e.value);
}

/// Reads a left/right value; throws bad_value_access otherwise.
inline Either<Value> either_from_value(const Value& v)
{
    if (v.is(Value::Kind::right))
        return Either<Value>::right(v.inner());
    if (v.is(Value::Kind::left))
        return Either<Value>::left(v.inner());
    throw bad_value_access{"expected left/right, got " + v.to_string()};
}

template <class V>
struct BasicAdapter
{
    Fun<V> fwd; // s -> a
    Fun<V> bwd; // b -> t
};

template <class V>
struct BasicLens
{
    Fun<V> get; // s -> a
    Put<V> put; // b, s -> t
};

template <class V>
struct BasicPrism
{
    Matcher<V> match; // s -> t + a
    Fun<V> build;     // b -> t
};

template <class V>
struct BasicSetter
{
    std::function<Fun<V>(const Fun<V>&)> over; // (a -> b) -> (s -> t)
};

/// A lens that can also build a whole from a focus alone.
template <class V>
struct BasicAchLens
{
    Fun<V> get;
    Put<V> put;
    Fun<V> create; // b -> t
};

/// Affine optic: at most one focus; match and put, but no total get.
template <class V>
struct BasicOptional
{
    Matcher<V> match; // s -> t + a
    Put<V> put;       // b, s -> t
};

using Adapter = BasicAdapter<Value>;
using Lens = BasicLens<Value>;
using Prism = BasicPrism<Value>;
using Setter = BasicSetter<Value>;
using AchLens = BasicAchLens<Value>;
using Optional = BasicOptional<Value>;

/// Thrown when optics of incompatible families or functor families meet.
class family_mismatch : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

template <class O>
struct optic_family; // specialised per family

template <class O>
concept OpticFamily = requires {
    typename optic_family<O>::value_type;
} && requires(const O& o, const Fun<typename optic_family<O>::value_type>& f) {
    { optic_family<O>::compose(o, o) } -> std::same_as<O>;
    { optic_family<O>::inj(f, f) } -> std::same_as<O>;
    {
        optic_family<O>::map(o, f)
    } -> std::same_as<Fun<typename optic_family<O>::value_type>>;
};

template <class O>
using value_type_of = typename optic_family<O>::value_type;

/// `compose(outer, inner)`: outer focuses an `a` inside `s`, inner an `x`
/// inside `a`; the result focuses the `x` inside `s`.
template <OpticFamily O>
O compose(const O& outer, const O& inner)
{
    return optic_family<O>::compose(outer, inner);
}

template <OpticFamily O>
O inj_optic(Fun<value_type_of<O>> fwd, Fun<value_type_of<O>> bwd)
{
    return optic_family<O>::inj(std::move(fwd), std::move(bwd));
}

template <OpticFamily O>
O identity_optic()
{
    using V = value_type_of<O>;
    auto id = [](const V& v) { return v; };
    return optic_family<O>::inj(id, id);
}

template <OpticFamily O>
Fun<value_type_of<O>> map_optic(const O& o, Fun<value_type_of<O>> h)
{
    return optic_family<O>::map(o, std::move(h));
}

/// `inj(fs, ft) . o . inj(fa, fb)` with fa : a -> a', fb : b' -> b,
/// fs : s' -> s, ft : t -> t'.
template <OpticFamily O>
O multi_map_optic(Fun<value_type_of<O>> fa,
                  Fun<value_type_of<O>> fb,
                  Fun<value_type_of<O>> fs,
                  Fun<value_type_of<O>> ft,
                  const O& o)
{
    return compose(compose(inj_optic<O>(std::move(fs), std::move(ft)), o),
                   inj_optic<O>(std::move(fa), std::move(fb)));
}

template <OpticFamily O>
O dimap_optic(Fun<value_type_of<O>> fs, Fun<value_type_of<O>> ft, const O& o)
{
    return compose(inj_optic<O>(std::move(fs), std::move(ft)), o);
}

template <class V>
struct optic_family<BasicAdapter<V>>
{
    using value_type = V;
    static constexpr FamilyTag tag = FamilyTag::adapter;

    static BasicAdapter<V> inj(Fun<V> f, Fun<V> g)
    {
        return {std::move(f), std::move(g)};
    }

    static BasicAdapter<V> compose(const BasicAdapter<V>& o1,
                                   const BasicAdapter<V>& o2)
    {
        return {[f1 = o1.fwd, f2 = o2.fwd](const V& s) { return f2(f1(s)); },
                [g1 = o1.bwd, g2 = o2.bwd](const V& y) { return g1(g2(y)); }};
    }

    static Fun<V> map(const BasicAdapter<V>& o, Fun<V> h)
    {
        return [f = o.fwd, g = o.bwd, h = std::move(h)](const V& s) {
            return g(h(f(s)));
        };
    }
};

template <class V>
struct optic_family<BasicLens<V>>
{
    using value_type = V;
    static constexpr FamilyTag tag = FamilyTag::lens;

    /// The injected put discards the old whole.
    static BasicLens<V> inj(Fun<V> f, Fun<V> g)
    {
        return {std::move(f),
                [g = std::move(g)](const V& b, const V&) { return g(b); }};
    }

    static BasicLens<V> compose(const BasicLens<V>& o1, const BasicLens<V>& o2)
    {
        return {[g1 = o1.get, g2 = o2.get](const V& s) { return g2(g1(s)); },
                [g1 = o1.get, p1 = o1.put, p2 = o2.put](const V& y,
                                                        const V& s) {
                    return p1(p2(y, g1(s)), s);
                }};
    }

    static Fun<V> map(const BasicLens<V>& o, Fun<V> h)
    {
        return [get = o.get, put = o.put, h = std::move(h)](const V& s) {
            return put(h(get(s)), s);
        };
    }
};

template <class V>
struct optic_family<BasicPrism<V>>
{
    using value_type = V;
    static constexpr FamilyTag tag = FamilyTag::prism;

    static BasicPrism<V> inj(Fun<V> f, Fun<V> g)
    {
        return {[f = std::move(f)](const V& s) {
                    return Either<V>::right(f(s));
                },
                std::move(g)};
    }

    static BasicPrism<V> compose(const BasicPrism<V>& o1,
                                 const BasicPrism<V>& o2)
    {
        return {[m1 = o1.match, b1 = o1.build, m2 = o2.match](const V& s) {
                    auto outer = m1(s);
                    if (!outer.is_right)
                        return outer;
                    auto inner = m2(outer.value);
                    if (!inner.is_right)
                        return Either<V>::left(b1(inner.value));
                    return inner;
                },
                [b1 = o1.build, b2 = o2.build](const V& y) {
                    return b1(b2(y));
                }};
    }

    static Fun<V> map(const BasicPrism<V>& o, Fun<V> h)
    {
        return [m = o.match, b = o.build, h = std::move(h)](const V& s) {
            auto r = m(s);
            return r.is_right ? b(h(r.value)) : r.value;
        };
    }
};

template <class V>
struct optic_family<BasicSetter<V>>
{
    using value_type = V;
    static constexpr FamilyTag tag = FamilyTag::setter;

    static BasicSetter<V> inj(Fun<V> f, Fun<V> g)
    {
        return {[f = std::move(f), g = std::move(g)](const Fun<V>& h) -> Fun<V> {
            return [f, g, h](const V& s) { return g(h(f(s))); };
        }};
    }

    static BasicSetter<V> compose(const BasicSetter<V>& o1,
                                  const BasicSetter<V>& o2)
    {
        return {[o1 = o1.over, o2 = o2.over](const Fun<V>& h) {
            return o1(o2(h));
        }};
    }

    static Fun<V> map(const BasicSetter<V>& o, Fun<V> h) { return o.over(h); }
};

template <class V>
struct optic_family<BasicAchLens<V>>
{
    using value_type = V;
    static constexpr FamilyTag tag = FamilyTag::achlens;

    static BasicAchLens<V> inj(Fun<V> f, Fun<V> g)
    {
        return {std::move(f),
                [g](const V& b, const V&) { return g(b); },
                g};
    }

    static BasicAchLens<V> compose(const BasicAchLens<V>& o1,
                                   const BasicAchLens<V>& o2)
    {
        auto lens = optic_family<BasicLens<V>>::compose({o1.get, o1.put},
                                                        {o2.get, o2.put});
        return {std::move(lens.get),
                std::move(lens.put),
                [c1 = o1.create, c2 = o2.create](const V& y) {
                    return c1(c2(y));
                }};
    }

    /// Same action as the underlying lens; `create` plays no part.
    static Fun<V> map(const BasicAchLens<V>& o, Fun<V> h)
    {
        return optic_family<BasicLens<V>>::map({o.get, o.put}, std::move(h));
    }
};

template <class V>
struct optic_family<BasicOptional<V>>
{
    using value_type = V;
    static constexpr FamilyTag tag = FamilyTag::optional;

    static BasicOptional<V> inj(Fun<V> f, Fun<V> g)
    {
        return {[f = std::move(f)](const V& s) {
                    return Either<V>::right(f(s));
                },
                [g = std::move(g)](const V& b, const V&) { return g(b); }};
    }

    static BasicOptional<V> compose(const BasicOptional<V>& o1,
                                    const BasicOptional<V>& o2)
    {
        return {[m1 = o1.match, p1 = o1.put, m2 = o2.match](const V& s) {
                    auto outer = m1(s);
                    if (!outer.is_right)
                        return outer;
                    auto inner = m2(outer.value);
                    if (!inner.is_right)
                        return Either<V>::left(p1(inner.value, s));
                    return inner;
                },
                [m1 = o1.match, p1 = o1.put, p2 = o2.put](const V& y,
                                                          const V& s) {
                    auto outer = m1(s);
                    if (!outer.is_right)
                        return outer.value;
                    return p1(p2(y, outer.value), s);
                }};
    }

    static Fun<V> map(const BasicOptional<V>& o, Fun<V> h)
    {
        return [m = o.match, p = o.put, h = std::move(h)](const V& s) {
            auto r = m(s);
            return r.is_right ? p(h(r.value), s) : r.value;
        };
    }
};

// Embeddings along the family order. Each is a family morphism: it keeps
// injected pairs, composition and the action on functions.

template <class V>
BasicLens<V> as_lens(const BasicAdapter<V>& o)
{
    return optic_family<BasicLens<V>>::inj(o.fwd, o.bwd);
}

template <class V>
BasicLens<V> as_lens(const BasicAchLens<V>& o)
{
    return {o.get, o.put};
}

template <class V>
BasicPrism<V> as_prism(const BasicAdapter<V>& o)
{
    return optic_family<BasicPrism<V>>::inj(o.fwd, o.bwd);
}

template <class V>
BasicAchLens<V> as_achlens(const BasicAdapter<V>& o)
{
    return optic_family<BasicAchLens<V>>::inj(o.fwd, o.bwd);
}

template <class V>
BasicOptional<V> as_optional(const BasicLens<V>& o)
{
    return {[get = o.get](const V& s) { return Either<V>::right(get(s)); },
            o.put};
}

template <class V>
BasicOptional<V> as_optional(const BasicPrism<V>& o)
{
    return {o.match, [m = o.match, b = o.build](const V& y, const V& s) {
                auto r = m(s);
                return r.is_right ? b(y) : r.value;
            }};
}

template <OpticFamily O>
BasicSetter<value_type_of<O>> as_setter(const O& o)
{
    using V = value_type_of<O>;
    return {[o](const Fun<V>& h) { return map_optic(o, h); }};
}

// Canonical optics over the core value universe.

/// Lens onto the first component of a pair.
Lens first();
/// Lens onto the second component of a pair.
Lens second();
/// Prism onto the payload of `Just`; `Nothing` is the miss.
Prism just();
/// Prism onto the right branch of a sum.
Prism right_branch();
/// Setter over both components of a homogeneous pair.
Setter both();

} // namespace optics
