#include <optics/prof.hpp>

namespace optics {

namespace {

using K = Value::Kind;

bool any_shape(const Shape&) { return true; }

void require(bool ok, const ProfOptic& l, const char* op, FunctorFamily need)
{
    if (!ok)
        throw unsupported_operator{std::string{op} + " needs a " + need.name() +
                                   " optic, got " + l.family().name()};
}

} // namespace

ProfunctorCapability function_arrow()
{
    return make_capability<Fn>(
        "FunctionArrow",
        [](const Fn& f, const Fn& g, const Fn& h) -> Fn {
            return [f, g, h](const Value& s) { return g(h(f(s))); };
        },
        [](const Shape& shape, const Fn& h) { return shape.map(h); },
        any_shape);
}

ProfunctorCapability getting()
{
    return make_capability<Getting>(
        "Getting",
        [](const Fn& f, const Fn&, const Getting& p) {
            return Getting{[f, v = p.view](const Value& s) { return v(f(s)); }};
        },
        [](const Shape& shape, const Getting& p) {
            return Getting{[to = shape.product()->to_product,
                            v = p.view](const Value& fs) {
                return v(to(fs).second());
            }};
        },
        [](const Shape& shape) { return shape.product() != nullptr; });
}

ProfunctorCapability matching()
{
    return make_capability<Matching>(
        "Matching",
        [](const Fn& f, const Fn& g, const Matching& p) {
            return Matching{[f, g, m = p.match](const Value& s) {
                auto r = m(f(s));
                return r.is(K::left) ? Value::left(g(r.inner())) : r;
            }};
        },
        [](const Shape& shape, const Matching& p) {
            auto cap = *shape.affine();
            return Matching{[cap, m = p.match](const Value& fs) {
                auto split = cap.to_affine(fs);
                if (split.is(K::left))
                    return split;
                const auto& ctx = split.inner().first();
                auto r = m(split.inner().second());
                if (r.is(K::left))
                    return Value::left(cap.from_affine(
                        Value::right(Value::pair(ctx, r.inner()))));
                return r;
            }};
        },
        [](const Shape& shape) { return shape.affine() != nullptr; });
}

ProfunctorCapability reviewing()
{
    return make_capability<Reviewing>(
        "Reviewing",
        [](const Fn&, const Fn& g, const Reviewing& p) {
            return Reviewing{
                [g, r = p.review](const Value& b) { return g(r(b)); }};
        },
        [](const Shape& shape, const Reviewing& p) {
            if (const auto* sum = shape.sum())
                return Reviewing{[from = sum->from_sum,
                                  r = p.review](const Value& b) {
                    return from(Value::right(r(b)));
                }};
            return Reviewing{[from = shape.product()->from_product,
                              unit = shape.point()->unit,
                              r = p.review](const Value& b) {
                return from(Value::pair(unit, r(b)));
            }};
        },
        [](const Shape& shape) {
            return shape.sum() || (shape.product() && shape.point());
        });
}

ProfunctorCapability iso_capability(FunctorFamily family)
{
    return make_capability<IsoOptic>(
        std::string{"IsoOptic<"} + family.name() + ">",
        [](const Fn& f, const Fn& g, const IsoOptic& l) {
            return iso_compose(iso_inj(f, g), l);
        },
        [family](const Shape& shape, const IsoOptic& l) {
            return iso_compose(enhance_iso(family, shape), l);
        },
        [family](const Shape& shape) { return family.member(shape); });
}

std::any prof_apply(const ProfOptic& l, const ProfunctorCapability& cap,
                    const std::any& p)
{
    return l.apply(cap, p);
}

ProfOptic prof_identity()
{
    return ProfOptic{id_only(),
                     [](const ProfunctorCapability&, const std::any& p) {
                         return p;
                     }};
}

ProfOptic prof_compose(const ProfOptic& outer, const ProfOptic& inner)
{
    return ProfOptic{join(outer.family(), inner.family()),
                     [outer, inner](const ProfunctorCapability& cap,
                                    const std::any& p) {
                         return outer.apply(cap, inner.apply(cap, p));
                     }};
}

ProfOptic prof_dimap(Fn f, Fn g)
{
    return ProfOptic{id_only(),
                     [f = std::move(f), g = std::move(g)](
                         const ProfunctorCapability& cap, const std::any& p) {
                         return cap.dimap(f, g, p);
                     }};
}

ProfOptic prof_enhance(FunctorFamily family, const Shape& shape)
{
    if (!family.member(shape))
        throw family_mismatch{"shape " + shape.name() + " is not a member of " +
                              family.name()};
    return ProfOptic{family, [shape](const ProfunctorCapability& cap,
                                     const std::any& p) {
                         return cap.enhance(shape, p);
                     }};
}

ProfOptic prof_second()
{
    static const Shape pair = pair_shape();
    return prof_enhance(is_product(), pair);
}

ProfOptic prof_first()
{
    return prof_compose(prof_dimap(swap_fn(), swap_fn()), prof_second());
}

ProfOptic prof_right()
{
    static const Shape sum = sum_shape();
    return prof_enhance(is_sum(), sum);
}

ProfOptic prof_just()
{
    auto maybe_to_sum = [](const Value& m) {
        return m.is(K::just) ? Value::right(m.inner())
                             : Value::left(Value::unit());
    };
    auto sum_to_maybe = [](const Value& e) {
        return e.is(K::right) ? Value::just(e.inner()) : Value::nothing();
    };
    return prof_compose(prof_dimap(maybe_to_sum, sum_to_maybe), prof_right());
}

Fn get_operator(const ProfOptic& l)
{
    require(family_includes(is_product(), l.family()), l, "get", is_product());
    return l.apply_as<Getting>(getting(), Getting{identity_fn()}).view;
}

Fn match_operator(const ProfOptic& l)
{
    require(family_includes(is_affine(), l.family()), l, "match", is_affine());
    return l.apply_as<Matching>(matching(), Matching{right_fn()}).match;
}

Fn build_operator(const ProfOptic& l)
{
    require(family_includes(is_sum(), l.family()) ||
                family_includes(is_pointed_product(), l.family()),
            l, "build", is_sum());
    return l.apply_as<Reviewing>(reviewing(), Reviewing{identity_fn()}).review;
}

ProfOptic iso_to_prof(const IsoOptic& l)
{
    auto family = l.family().value_or(id_only());
    return ProfOptic{family, [l](const ProfunctorCapability& cap,
                                 const std::any& p) {
                         return cap.dimap(l.forward(), l.backward(),
                                          cap.enhance(l.shape(), p));
                     }};
}

IsoOptic prof_to_iso(const ProfOptic& l)
{
    return l.apply_as<IsoOptic>(iso_capability(l.family()),
                                iso_inj(identity_fn(), identity_fn()));
}

Observation observe_prof(const ProfOptic& l, const ProfOptic& r,
                         const Signature& sig, std::uint64_t seed)
{
    auto obs = observe_maps([&](const Fn& h) { return map_optic(l, h); },
                            [&](const Fn& h) { return map_optic(r, h); },
                            sig, seed);
    auto both = [&](FunctorFamily need) {
        return family_includes(need, l.family()) &&
               family_includes(need, r.family());
    };
    auto extend = [&](const Fn& fl, const Fn& fr, const char* segment) {
        auto more = observe_functions(fl, fr, sig.s, segment);
        obs.cases += more.cases;
        if (!more.equal) {
            obs.equal = false;
            obs.counterexample = more.counterexample;
        }
    };
    if (obs && both(is_product()))
        extend(get_operator(l), get_operator(r), "get");
    if (obs && both(is_affine()))
        extend(match_operator(l), match_operator(r), "match");
    return obs;
}

} // namespace optics
