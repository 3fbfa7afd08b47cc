#include <optics/laws/checks.hpp>

#include <algorithm>

namespace optics::laws {

namespace {

using K = Value::Kind;

Counterexample ce(const char* segment, std::string input, const Value& lhs,
                  const Value& rhs)
{
    return {segment, std::move(input), lhs.to_string(), rhs.to_string()};
}

/// Records `lhs == rhs` for one case.
bool expect_eq(LawRun& run, const char* segment, const std::string& input,
               const Value& lhs, const Value& rhs)
{
    return run.check(lhs == rhs, ce(segment, input, lhs, rhs));
}

const FiniteDomain& shape_residual()
{
    static const FiniteDomain c = int_domain("C", 2);
    return c;
}

const FiniteDomain& hidden_read()
{
    static const FiniteDomain x = int_domain("X", 2);
    return x;
}

const FiniteDomain& hidden_write()
{
    static const FiniteDomain y{"Y", {Value::string("p"), Value::string("q")}};
    return y;
}

template <class P>
const P& as(const std::any& p)
{
    return std::any_cast<const P&>(p);
}

} // namespace

bool all_passed(const std::vector<LawReport>& reports)
{
    return std::all_of(reports.begin(), reports.end(),
                       [](const LawReport& r) { return r.passed(); });
}

// ---------------------------------------------------------------------------

std::vector<LawReport> check_lens_laws(const Lens& l, const FiniteDomain& s,
                                       const FiniteDomain& a)
{
    LawRun get_put{"lens.get_put"};
    LawRun put_get{"lens.put_get"};
    LawRun put_put{"lens.put_put"};
    for (const auto& x : s) {
        auto ctx = x.to_string();
        if (put_get.more())
            expect_eq(put_get, "put(get s, s)", ctx,
                      guarded([&] { return l.put(l.get(x), x); }), x);
        for (const auto& b : a) {
            auto ctx_b = b.to_string() + ", " + ctx;
            if (get_put.more())
                expect_eq(get_put, "get(put(b, s))", ctx_b,
                          guarded([&] { return l.get(l.put(b, x)); }), b);
            for (const auto& b2 : a)
                if (put_put.more())
                    expect_eq(put_put, "put(b2, put(b, s))",
                              b2.to_string() + ", " + ctx_b,
                              guarded([&] { return l.put(b2, l.put(b, x)); }),
                              guarded([&] { return l.put(b2, x); }));
        }
    }
    return {get_put.finish(), put_get.finish(), put_put.finish()};
}

std::vector<LawReport> check_prism_laws(const Prism& p, const FiniteDomain& s,
                                        const FiniteDomain& a)
{
    LawRun match_build{"prism.match_build"};
    LawRun build_match{"prism.build_match"};
    LawRun no_match{"prism.no_match_identity"};
    for (const auto& b : a)
        expect_eq(match_build, "match(build b)", b.to_string(),
                  guarded([&] { return to_value(p.match(p.build(b))); }),
                  Value::right(b));
    for (const auto& x : s) {
        auto m = p.match(x);
        if (m.is_right)
            expect_eq(build_match, "build a where match s = Right a",
                      x.to_string(), guarded([&] { return p.build(m.value); }),
                      x);
        else
            expect_eq(no_match, "t where match s = Left t", x.to_string(),
                      m.value, x);
    }
    return {match_build.finish(), build_match.finish(), no_match.finish()};
}

std::vector<LawReport> check_adapter_laws(const Adapter& o,
                                          const FiniteDomain& s,
                                          const FiniteDomain& a)
{
    LawRun fwd_bwd{"adapter.fwd_bwd"};
    LawRun bwd_fwd{"adapter.bwd_fwd"};
    for (const auto& b : a)
        expect_eq(fwd_bwd, "fwd(bwd b)", b.to_string(),
                  guarded([&] { return o.fwd(o.bwd(b)); }), b);
    for (const auto& x : s)
        expect_eq(bwd_fwd, "bwd(fwd s)", x.to_string(),
                  guarded([&] { return o.bwd(o.fwd(x)); }), x);
    return {fwd_bwd.finish(), bwd_fwd.finish()};
}

std::vector<LawReport> check_setter_laws(const Setter& o,
                                         const FiniteDomain& s,
                                         const FiniteDomain& a)
{
    LawRun identity{"setter.over_identity"};
    LawRun composition{"setter.over_composition"};
    identity.check(observe_functions(o.over(identity_fn()), identity_fn(), s,
                                     "over(id)"));
    auto fs = probe_functions(a, a, s.size());
    for (const auto& f : fs)
        for (const auto& g : fs) {
            if (!composition.more())
                break;
            composition.check(
                observe_functions(o.over(compose_fn(f.as_fn(), g.as_fn())),
                                  compose_fn(o.over(f.as_fn()),
                                             o.over(g.as_fn())),
                                  s, "over(f . g)"),
                f.to_string() + " . " + g.to_string());
        }
    return {identity.finish(), composition.finish()};
}

std::vector<LawReport> check_achlens_laws(const AchLens& o,
                                          const FiniteDomain& s,
                                          const FiniteDomain& a)
{
    auto reports = check_lens_laws(Lens{o.get, o.put}, s, a);
    LawRun get_create{"achlens.get_create"};
    for (const auto& b : a)
        expect_eq(get_create, "get(create b)", b.to_string(),
                  guarded([&] { return o.get(o.create(b)); }), b);
    reports.push_back(get_create.finish());
    return reports;
}

std::vector<LawReport> check_optional_laws(const Optional& o,
                                           const FiniteDomain& s,
                                           const FiniteDomain& a)
{
    LawRun match_put{"optional.match_put"};
    LawRun put_match{"optional.put_match"};
    LawRun miss_put{"optional.miss_put"};
    for (const auto& x : s) {
        auto m = o.match(x);
        if (m.is_right)
            expect_eq(match_put, "put(a, s) where match s = Right a",
                      x.to_string(), guarded([&] { return o.put(m.value, x); }),
                      x);
        for (const auto& b : a) {
            auto ctx = b.to_string() + ", " + x.to_string();
            if (m.is_right)
                expect_eq(put_match, "match(put(b, s))", ctx,
                          guarded([&] { return to_value(o.match(o.put(b, x))); }),
                          Value::right(b));
            else
                expect_eq(miss_put, "put(b, s) where match s = Left t", ctx,
                          guarded([&] { return o.put(b, x); }), m.value);
        }
    }
    return {match_put.finish(), put_match.finish(), miss_put.finish()};
}

// ---------------------------------------------------------------------------

template <>
Generator<Adapter> arbitrary<Adapter>()
{
    return random_adapter;
}
template <>
Generator<Lens> arbitrary<Lens>()
{
    return random_lens;
}
template <>
Generator<Prism> arbitrary<Prism>()
{
    return random_prism;
}
template <>
Generator<Setter> arbitrary<Setter>()
{
    return random_setter;
}
template <>
Generator<AchLens> arbitrary<AchLens>()
{
    return random_achlens;
}
template <>
Generator<Optional> arbitrary<Optional>()
{
    return random_optional;
}

std::vector<Shape> member_shapes(FunctorFamily family)
{
    static const std::vector<Shape> registry =
        registered_shapes(shape_residual());
    std::vector<Shape> out;
    for (const auto& f : registry)
        if (f.enumerable() && family.member(f))
            out.push_back(f);
    return out;
}

Generator<IsoOptic> arbitrary_iso(FunctorFamily family)
{
    return [family, shapes = member_shapes(family)](std::mt19937_64& rng,
                                                    const Carriers& c) {
        return random_iso(rng, family, pick(rng, shapes), c);
    };
}

Generator<ProfOptic> arbitrary_prof(FunctorFamily family)
{
    return [gen = arbitrary_iso(family)](std::mt19937_64& rng,
                                         const Carriers& c) {
        return iso_to_prof(gen(rng, c));
    };
}

ChainConfig default_chain(std::uint64_t seed, std::size_t samples)
{
    auto strings = [](std::string name, std::vector<std::string> xs) {
        std::vector<Value> vs;
        for (auto& x : xs)
            vs.push_back(Value::string(std::move(x)));
        return FiniteDomain{std::move(name), std::move(vs)};
    };
    ChainConfig cfg;
    cfg.reads = {int_domain("S", 3), int_domain("A", 2), int_domain("X", 3),
                 int_domain("P", 2)};
    cfg.writes = {strings("T", {"t0", "t1"}), strings("B", {"b0", "b1", "b2"}),
                  strings("Y", {"y0", "y1"}), strings("Q", {"q0", "q1"})};
    cfg.samples = samples;
    cfg.seed = seed;
    return cfg;
}

// ---------------------------------------------------------------------------

ProfunctorProbe function_arrow_probe()
{
    return {"FunctionArrow", function_arrow(), any_functor(),
            [](std::mt19937_64& rng, const FiniteDomain& a,
               const FiniteDomain& b) {
                return std::any{random_function(rng, a, b).as_fn()};
            },
            [](const std::any& l, const std::any& r, const FiniteDomain& s) {
                return observe_functions(as<Fn>(l), as<Fn>(r), s);
            }};
}

ProfunctorProbe getting_probe()
{
    return {"Getting", getting(), is_product(),
            [](std::mt19937_64& rng, const FiniteDomain& a,
               const FiniteDomain&) {
                return std::any{
                    Getting{random_function(rng, a, hidden_read()).as_fn()}};
            },
            [](const std::any& l, const std::any& r, const FiniteDomain& s) {
                return observe_functions(as<Getting>(l).view,
                                         as<Getting>(r).view, s, "view");
            }};
}

ProfunctorProbe matching_probe()
{
    return {"Matching", matching(), is_affine(),
            [](std::mt19937_64& rng, const FiniteDomain& a,
               const FiniteDomain& b) {
                return std::any{Matching{
                    random_function(rng, a, sum_domain(b, hidden_read()))
                        .as_fn()}};
            },
            [](const std::any& l, const std::any& r, const FiniteDomain& s) {
                return observe_functions(as<Matching>(l).match,
                                         as<Matching>(r).match, s, "match");
            }};
}

ProfunctorProbe reviewing_probe()
{
    return {"Reviewing", reviewing(), any_functor(),
            [](std::mt19937_64& rng, const FiniteDomain&,
               const FiniteDomain& b) {
                return std::any{Reviewing{
                    random_function(rng, hidden_write(), b).as_fn()}};
            },
            [](const std::any& l, const std::any& r, const FiniteDomain&) {
                return observe_functions(as<Reviewing>(l).review,
                                         as<Reviewing>(r).review,
                                         hidden_write(), "review");
            }};
}

ProfunctorProbe iso_probe(FunctorFamily family)
{
    return {std::string{"IsoOptic<"} + family.name() + ">",
            iso_capability(family), family,
            [gen = arbitrary_iso(family)](std::mt19937_64& rng,
                                          const FiniteDomain& a,
                                          const FiniteDomain& b) {
                return std::any{
                    gen(rng, Carriers{a, b, hidden_read(), hidden_write()})};
            },
            [](const std::any& l, const std::any& r, const FiniteDomain& s) {
                return observe_iso(as<IsoOptic>(l), as<IsoOptic>(r),
                                   Signature{s, hidden_read(), hidden_write()});
            }};
}

ProfunctorProbe lens_probe()
{
    return {"Lens", family_capability<Lens>("Lens"), is_product(),
            [](std::mt19937_64& rng, const FiniteDomain& a,
               const FiniteDomain& b) {
                return std::any{
                    random_lens(rng, Carriers{a, b, hidden_read(), hidden_write()})};
            },
            [](const std::any& l, const std::any& r, const FiniteDomain& s) {
                return observe_equal(as<Lens>(l), as<Lens>(r),
                                     Signature{s, hidden_read(), hidden_write()});
            }};
}

ProfunctorProbe broken_compose_probe()
{
    auto probe = function_arrow_probe();
    probe.name = "BrokenCompose";
    probe.cap = make_capability<Fn>(
        "BrokenCompose",
        [](const Fn& f, const Fn& g, const Fn& h) -> Fn {
            return [f, g, h](const Value& s) { return g(h(f(s))); };
        },
        [](const Shape& shape, const Fn& h) -> Fn {
            if (shape.name().rfind("Compose(", 0) == 0)
                return identity_fn();
            return shape.map(h);
        },
        [](const Shape&) { return true; });
    return probe;
}

std::vector<Shape> usable_shapes(const ProfunctorProbe& probe,
                                 const FiniteDomain& residual)
{
    std::vector<Shape> out;
    for (const auto& f : registered_shapes(residual))
        if (f.enumerable() && probe.family.member(f) && probe.cap.supports(f))
            out.push_back(f);
    return out;
}

std::vector<LawReport> check_enhancing_laws(const ProfunctorProbe& probe,
                                            const EnhancingConfig& cfg)
{
    auto name = [&](const char* law) {
        return std::string{law} + "[" + probe.name + "]";
    };
    const auto& cap = probe.cap;
    std::mt19937_64 rng{cfg.seed};
    auto usable = [&](const Shape& f) {
        return f.enumerable() && probe.family.member(f) && cap.supports(f);
    };

    LawRun dimap_id{name("profunctor.dimap_identity"), CheckMode::budgeted};
    LawRun dimap_comp{name("profunctor.dimap_composition"), CheckMode::budgeted};
    LawRun enh_id{name("enhancing.id"), CheckMode::budgeted};
    LawRun enh_comp{name("enhancing.compose"), CheckMode::budgeted};
    LawRun wedge{name("enhancing.wedge"), CheckMode::budgeted};
    LawRun natural{name("enhancing.naturality"), CheckMode::budgeted};

    // a2 : intermediate read domain for dimap composition
    auto a2 = int_domain("A2", 3);
    Fn un_id = [](const Value& v) { return v.inner(); };
    Fn wrap_id = [](const Value& v) { return Value::id(v); };
    Fn un_compose = [](const Value& v) { return v.inner(); };
    Fn wrap_compose = [](const Value& v) { return Value::compose(v); };

    std::vector<Shape> base;
    for (const auto& f : {id_shape(), pair_shape(cfg.residual),
                          sum_shape(cfg.residual),
                          maybe_pair_shape(cfg.residual),
                          affine_shape(cfg.residual, cfg.residual)})
        if (usable(f))
            base.push_back(f);
    auto naturals = registered_naturals(cfg.residual);
    auto shapes = usable_shapes(probe, cfg.residual);

    for (std::size_t i = 0; i < cfg.samples; ++i) {
        auto ctx = "sample " + std::to_string(i);
        auto p = probe.sample(rng, cfg.a, cfg.b);

        dimap_id.check(probe.equal(cap.dimap(identity_fn(), identity_fn(), p),
                                   p, cfg.a),
                       ctx);

        // f2 : a2 -> a, g2 : b -> b ; f1 : a -> a2, g1 : b -> b
        auto f2 = random_function(rng, a2, cfg.a).as_fn();
        auto g2 = random_function(rng, cfg.b, cfg.b).as_fn();
        auto f1 = random_function(rng, cfg.a, a2).as_fn();
        auto g1 = random_function(rng, cfg.b, cfg.b).as_fn();
        dimap_comp.check(
            probe.equal(cap.dimap(compose_fn(f2, f1), compose_fn(g1, g2), p),
                        cap.dimap(f1, g1, cap.dimap(f2, g2, p)), cfg.a),
            ctx);

        auto idf = id_shape();
        enh_id.check(probe.equal(cap.enhance(idf, p),
                                 cap.dimap(un_id, wrap_id, p),
                                 payload_domain(idf, cfg.a)),
                     ctx);

        for (const auto& f : base)
            for (const auto& g : base) {
                auto fg = compose_shapes(f, g);
                if (!usable(fg) || !enh_comp.more())
                    continue;
                enh_comp.check(
                    probe.equal(cap.enhance(fg, p),
                                cap.dimap(un_compose, wrap_compose,
                                          cap.enhance(f, cap.enhance(g, p))),
                                payload_domain(fg, cfg.a)),
                    ctx + ", " + fg.name());
            }

        for (const auto& nat : naturals) {
            if (!usable(nat.from) || !usable(nat.to) || !wedge.more())
                continue;
            wedge.check(
                probe.equal(
                    cap.dimap(identity_fn(), nat.component,
                              cap.enhance(nat.from, p)),
                    cap.dimap(nat.component, identity_fn(),
                              cap.enhance(nat.to, p)),
                    payload_domain(nat.from, cfg.a)),
                ctx + ", " + nat.name);
        }

        // h1 : b -> a (new read side), k1 : b -> a (new write side)
        auto h1 = random_function(rng, cfg.b, cfg.a).as_fn();
        auto k1 = random_function(rng, cfg.b, cfg.a).as_fn();
        for (const auto& f : shapes) {
            if (!natural.more())
                break;
            natural.check(
                probe.equal(cap.enhance(f, cap.dimap(h1, k1, p)),
                            cap.dimap(f.map(h1), f.map(k1), cap.enhance(f, p)),
                            payload_domain(f, cfg.b)),
                ctx + ", " + f.name());
        }
    }
    return {dimap_id.finish(), dimap_comp.finish(), enh_id.finish(),
            enh_comp.finish(), wedge.finish(),      natural.finish()};
}

// ---------------------------------------------------------------------------

namespace {

/// Payloads of a continuation shape: `\g -> g x` for each x.
/// Yoneda payloads `\g -> g x` for every `x` in `dom`.
std::vector<Value> cps_payloads(const std::vector<Value>& dom)
{
    std::vector<Value> out;
    for (const auto& x : dom)
        out.push_back(Value::function([x](const Value& g) { return g(x); }));
    return out;
}

/// Compares continuation payloads by feeding every function `dom -> dom`.
bool cps_equal(const Value& l, const Value& r, const std::vector<Value>& dom)
{
    FiniteDomain d{"P", dom};
    for (const auto& g : all_functions(d, d))
        if (guarded([&] { return l(g.as_value()); }) !=
            guarded([&] { return r(g.as_value()); }))
            return false;
    return true;
}

} // namespace

std::vector<LawReport> check_shape_laws(const FiniteDomain& residual,
                                        const FiniteDomain& a)
{
    LawRun map_id{"functor.map_identity"};
    LawRun map_comp{"functor.map_composition"};
    LawRun product{"functor.product_round_trip"};
    LawRun sum{"functor.sum_round_trip"};
    LawRun affine{"functor.affine_round_trip"};
    LawRun closure{"functor.monoid_closure"};

    auto fs = all_functions(a, a);
    auto unit = std::vector<Value>{Value::unit()};
    auto shapes = registered_shapes(residual);

    for (const auto& f : shapes) {
        auto ctx = f.name();
        if (!f.enumerable()) {
            // Cps itself, or Compose(Cps, g) with g enumerable
            std::vector<Value> dom = a.elements();
            bool wrapped = f.name() != "Cps";
            if (wrapped) {
                auto inner = f.name().substr(9, f.name().size() - 10);
                auto g = std::find_if(shapes.begin(), shapes.end(),
                                      [&](const Shape& x) { return x.name() == inner; });
                if (f.name().rfind("Compose(Cps,", 0) != 0 || g == shapes.end() ||
                    !g->enumerable())
                    continue;
                dom = g->enumerate(a.elements());
            }
            auto unwrap = [wrapped](const Value& v) {
                return wrapped ? v.inner() : v;
            };
            for (const auto& k0 : cps_payloads(dom)) {
                auto k = wrapped ? Value::compose(k0) : k0;
                auto eq = [&](const Value& l, const Value& r) {
                    return cps_equal(unwrap(l), unwrap(r), dom);
                };
                map_id.check(eq(f.map(identity_fn())(k), k),
                             {"map(id)", ctx, "", ""});
                for (const auto& g : fs)
                    for (const auto& h : fs)
                        if (map_comp.more())
                            map_comp.check(
                                eq(f.map(compose_fn(g.as_fn(), h.as_fn()))(k),
                                   f.map(g.as_fn())(f.map(h.as_fn())(k))),
                                {"map(g . h)", ctx, "", ""});
            }
            continue;
        }
        auto payloads = f.enumerate(a.elements());
        for (const auto& x : payloads) {
            auto in = ctx + " " + x.to_string();
            expect_eq(map_id, "map(id)", in,
                      guarded([&] { return f.map(identity_fn())(x); }), x);
            for (const auto& g : fs)
                for (const auto& h : fs)
                    if (map_comp.more())
                        expect_eq(map_comp, "map(g . h)", in,
                                  guarded([&] {
                                      return f.map(
                                          compose_fn(g.as_fn(), h.as_fn()))(x);
                                  }),
                                  guarded([&] {
                                      return f.map(g.as_fn())(f.map(h.as_fn())(x));
                                  }));
            if (const auto* p = f.product())
                expect_eq(product, "from(to x)", in,
                          guarded([&] { return p->from_product(p->to_product(x)); }),
                          x);
            if (const auto* s = f.sum())
                expect_eq(sum, "from(to x)", in,
                          guarded([&] { return s->from_sum(s->to_sum(x)); }), x);
            if (const auto* af = f.affine())
                expect_eq(affine, "from(to x)", in,
                          guarded([&] { return af->from_affine(af->to_affine(x)); }),
                          x);
        }
        // the other direction, through the unit payloads
        for (const auto& u : f.enumerate(unit)) {
            if (const auto* p = f.product()) {
                auto ctx_u = p->to_product(u).first();
                for (const auto& x : a) {
                    auto v = Value::pair(ctx_u, x);
                    expect_eq(product, "to(from (c, a))", ctx + " " + v.to_string(),
                              guarded([&] { return p->to_product(p->from_product(v)); }),
                              v);
                }
            }
            if (const auto* af = f.affine()) {
                auto split = af->to_affine(u);
                if (split.is(K::right))
                    for (const auto& x : a) {
                        auto v = Value::right(Value::pair(split.inner().first(), x));
                        expect_eq(affine, "to(from (c, a))",
                                  ctx + " " + v.to_string(),
                                  guarded([&] {
                                      return af->to_affine(af->from_affine(v));
                                  }),
                                  v);
                    }
            }
        }
        if (const auto* s = f.sum())
            for (const auto& x : a)
                expect_eq(sum, "to(from (Right a))", ctx + " " + x.to_string(),
                          guarded([&] {
                              return s->to_sum(s->from_sum(Value::right(x)));
                          }),
                          Value::right(x));
        if (const auto* pt = f.point()) {
            auto units = f.enumerate(unit);
            bool found = std::find(units.begin(), units.end(), pt->unit) !=
                         units.end();
            product.check(found, {"point is a unit payload", ctx,
                                  pt->unit.to_string(), "one of F ()"});
        }
    }

    for (auto family : all_functor_families()) {
        closure.check(family.member(id_shape()),
                      {"member(Id)", family.name(), "false", "true"});
        for (const auto& f : shapes)
            for (const auto& g : shapes)
                if (family.member(f) && family.member(g))
                    closure.check(family.member(compose_shapes(f, g)),
                                  {"member(Compose f g)",
                                   std::string{family.name()} + " " + f.name() +
                                       ", " + g.name(),
                                   "false", "true"});
    }
    return {map_id.finish(), map_comp.finish(), product.finish(),
            sum.finish(),    affine.finish(),   closure.finish()};
}

std::vector<LawReport> check_iso_structure(FunctorFamily family,
                                           std::size_t samples,
                                           std::uint64_t seed)
{
    auto tag = std::string{"["} + family.name() + "]";
    LawRun normal{"iso.normal_form" + tag, CheckMode::budgeted};
    LawRun retraction{"iso.retraction" + tag};
    LawRun rigid{"iso.endomorphism_rigidity" + tag, CheckMode::budgeted};

    auto chain = default_chain(seed);
    auto sig = chain.observe_span(0, 1);
    auto gen = arbitrary_iso(family);
    std::mt19937_64 rng{seed};

    // endomorphisms of isomorphism optics built from the library's morphisms
    std::vector<std::pair<const char*, std::function<IsoOptic(const IsoOptic&)>>>
        endos = {
            {"normal_form", [](const IsoOptic& l) { return normal_form(l); }},
            {"prof_to_iso . iso_to_prof",
             [](const IsoOptic& l) { return prof_to_iso(iso_to_prof(l)); }},
            {"concrete_to_iso . unfunctorize<Setter>",
             [](const IsoOptic& l) {
                 return concrete_to_iso(unfunctorize<Setter>(l));
             }},
        };

    for (std::size_t i = 0; i < samples; ++i) {
        auto l = gen(rng, chain.link(0));
        auto ctx = "sample " + std::to_string(i) + " " + l.shape().name();
        if (normal.more())
            normal.check(observe_iso(normal_form(l), l, sig), ctx);
        for (const auto& [what, theta] : endos)
            if (rigid.more())
                rigid.check(observe_iso(theta(l), l, sig), ctx + ", " + what);
    }

    // IsoOptic phi psi over shape f equals enhance_iso(f) iff psi . phi = id,
    // for natural phi : f => h and psi : h => f.
    const auto& c = shape_residual();
    auto a = int_domain("A", 2);
    auto naturals = registered_naturals(c);
    for (const auto& f : member_shapes(family)) {
        NaturalTransformation self{"id", f, f, identity_fn()};
        naturals.push_back(self);
    }
    for (const auto& phi : naturals)
        for (const auto& psi : naturals) {
            if (!(phi.to == psi.from) || !(psi.to == phi.from))
                continue;
            if (!family.member(phi.from) || !family.member(phi.to) ||
                !phi.from.enumerable())
                continue;
            auto dom = payload_domain(phi.from, a);
            auto l = IsoOptic{family, phi.to, phi.component, psi.component};
            bool equal =
                observational_eq(l, enhance_iso(family, phi.from),
                                 Signature{dom, a, a});
            bool retracts = bool(observe_functions(
                compose_fn(psi.component, phi.component), identity_fn(), dom));
            retraction.check(equal == retracts,
                             {"equal iff retraction", phi.name + " ; " + psi.name,
                              equal ? "equal" : "different",
                              retracts ? "retracts" : "does not retract"});
        }
    return {normal.finish(), retraction.finish(), rigid.finish()};
}

} // namespace optics::laws
