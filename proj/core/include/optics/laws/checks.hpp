#pragma once

#include <optics/encode.hpp>
#include <optics/iso.hpp>
#include <optics/laws/generators.hpp>
#include <optics/laws/report.hpp>
#include <optics/observe.hpp>
#include <optics/prof.hpp>

#include <any>
#include <functional>
#include <random>
#include <string>
#include <vector>

/// Law checkers. Each returns one LawReport per law it covers; failures are
/// data, never exceptions.
namespace optics::laws {

bool all_passed(const std::vector<LawReport>& reports);

// ---------------------------------------------------------------------------
// Well-behavedness of concrete optics (simple optics: T = S, B = A).

std::vector<LawReport> check_lens_laws(const Lens& l, const FiniteDomain& s,
                                       const FiniteDomain& a);
std::vector<LawReport> check_prism_laws(const Prism& p, const FiniteDomain& s,
                                        const FiniteDomain& a);
std::vector<LawReport> check_adapter_laws(const Adapter& o,
                                          const FiniteDomain& s,
                                          const FiniteDomain& a);
std::vector<LawReport> check_setter_laws(const Setter& o,
                                         const FiniteDomain& s,
                                         const FiniteDomain& a);
/// Lens laws plus GetCreate.
std::vector<LawReport> check_achlens_laws(const AchLens& o,
                                          const FiniteDomain& s,
                                          const FiniteDomain& a);
std::vector<LawReport> check_optional_laws(const Optional& o,
                                           const FiniteDomain& s,
                                           const FiniteDomain& a);

// ---------------------------------------------------------------------------
// Observation dispatch.

template <OpticFamily O>
Observation observe(const O& l, const O& r, const Signature& sig)
{
    return observe_equal(l, r, sig);
}

inline Observation observe(const IsoOptic& l, const IsoOptic& r,
                           const Signature& sig)
{
    return observe_iso(l, r, sig);
}

inline Observation observe(const ProfOptic& l, const ProfOptic& r,
                           const Signature& sig)
{
    return observe_prof(l, r, sig);
}

template <class O>
using Generator = std::function<O(std::mt19937_64&, const Carriers&)>;

/// Random optics of a family. Isomorphism and profunctor optics pick their
/// shape among the enumerable members of `family` in the registry.
template <class O>
Generator<O> arbitrary();

template <> Generator<Adapter> arbitrary<Adapter>();
template <> Generator<Lens> arbitrary<Lens>();
template <> Generator<Prism> arbitrary<Prism>();
template <> Generator<Setter> arbitrary<Setter>();
template <> Generator<AchLens> arbitrary<AchLens>();
template <> Generator<Optional> arbitrary<Optional>();

Generator<IsoOptic> arbitrary_iso(FunctorFamily family);
Generator<ProfOptic> arbitrary_prof(FunctorFamily family);

/// Enumerable registered shapes that belong to `family` (residuals of
/// size 2).
std::vector<Shape> member_shapes(FunctorFamily family);

/// Domains for chained optics: optic i reads `reads[i+1]` inside
/// `reads[i]` and writes `writes[i+1]` inside `writes[i]`.
struct ChainConfig
{
    std::vector<FiniteDomain> reads;
    std::vector<FiniteDomain> writes;
    std::size_t samples = 40;
    std::uint64_t seed = 1;

    Carriers link(std::size_t i) const
    {
        return {reads[i], writes[i], reads[i + 1], writes[i + 1]};
    }
    Signature observe_span(std::size_t from, std::size_t to) const
    {
        return {reads[from], reads[to], writes[to]};
    }
};

/// Four levels with sizes 2..3: the default for family laws.
ChainConfig default_chain(std::uint64_t seed = 1, std::size_t samples = 40);

// ---------------------------------------------------------------------------
// Optic-family axioms.

template <OpticFamily O>
std::vector<LawReport> check_optic_family_laws(const std::string& instance,
                                               const Generator<O>& gen,
                                               const ChainConfig& cfg)
{
    using V = value_type_of<O>;
    auto name = [&](const char* law) {
        return std::string{"optic_family."} + law + "[" + instance + "]";
    };
    std::mt19937_64 rng{cfg.seed};
    Fn id = identity_fn();

    LawRun assoc{name("associativity"), CheckMode::budgeted};
    LawRun left{name("left_identity"), CheckMode::budgeted};
    LawRun right{name("right_identity"), CheckMode::budgeted};
    LawRun inj_id{name("inj_identity"), CheckMode::budgeted};
    LawRun inj_comp{name("inj_composition"), CheckMode::budgeted};
    LawRun map_inj{name("map_inj"), CheckMode::budgeted};
    LawRun map_comp{name("map_compose"), CheckMode::budgeted};

    for (std::size_t i = 0; i < cfg.samples; ++i) {
        auto o1 = gen(rng, cfg.link(0));
        auto o2 = gen(rng, cfg.link(1));
        auto o3 = gen(rng, cfg.link(2));
        auto ctx = "sample " + std::to_string(i);

        if (assoc.more())
            assoc.check(observe(compose(o1, compose(o2, o3)),
                                compose(compose(o1, o2), o3),
                                cfg.observe_span(0, 3)),
                        ctx);
        if (left.more())
            left.check(observe(compose(identity_optic<O>(), o1), o1,
                               cfg.observe_span(0, 1)),
                       ctx);
        if (right.more())
            right.check(observe(compose(o1, identity_optic<O>()), o1,
                                cfg.observe_span(0, 1)),
                        ctx);
        if (map_comp.more())
            map_comp.check(
                observe_maps(
                    [&](const Fn& h) { return map_optic(compose(o1, o2), h); },
                    [&](const Fn& h) { return map_optic(o1, map_optic(o2, h)); },
                    cfg.observe_span(0, 2)),
                ctx);

        // s -f-> a -f2-> x ; y -g2-> b -g-> t
        auto f = random_function(rng, cfg.reads[0], cfg.reads[1]).as_fn();
        auto g = random_function(rng, cfg.writes[1], cfg.writes[0]).as_fn();
        auto f2 = random_function(rng, cfg.reads[1], cfg.reads[2]).as_fn();
        auto g2 = random_function(rng, cfg.writes[2], cfg.writes[1]).as_fn();

        if (inj_comp.more())
            inj_comp.check(observe(inj_optic<O>(compose_fn(f2, f),
                                                compose_fn(g, g2)),
                                   compose(inj_optic<O>(f, g),
                                           inj_optic<O>(f2, g2)),
                                   cfg.observe_span(0, 2)),
                           ctx);
        if (map_inj.more())
            map_inj.check(
                observe_maps(
                    [&](const Fn& h) { return map_optic(inj_optic<O>(f, g), h); },
                    [&](const Fn& h) { return compose_fn(g, compose_fn(h, f)); },
                    cfg.observe_span(0, 1)),
                ctx);
        if (inj_id.more())
            inj_id.check(
                observe_maps(
                    [&](const Fn& h) {
                        return map_optic(inj_optic<O>(id, id), h);
                    },
                    [&](const Fn& h) { return h; },
                    Signature{cfg.reads[0], cfg.reads[0], cfg.writes[0]}),
                ctx);
    }
    static_assert(std::is_same_v<V, Value>);
    return {assoc.finish(),    left.finish(),    right.finish(),
            inj_id.finish(),   inj_comp.finish(), map_inj.finish(),
            map_comp.finish()};
}

// ---------------------------------------------------------------------------
// Morphisms of optic families: injections, composition and the action on
// functions are preserved.

template <OpticFamily O1, OpticFamily O2>
std::vector<LawReport> check_morphism(const std::string& instance,
                                      const std::function<O2(const O1&)>& theta,
                                      const Generator<O1>& gen,
                                      const ChainConfig& cfg)
{
    auto name = [&](const char* law) {
        return std::string{"morphism."} + law + "[" + instance + "]";
    };
    std::mt19937_64 rng{cfg.seed};
    LawRun inj{name("inj"), CheckMode::budgeted};
    LawRun comp{name("compose"), CheckMode::budgeted};
    LawRun map{name("map"), CheckMode::budgeted};

    for (std::size_t i = 0; i < cfg.samples; ++i) {
        auto ctx = "sample " + std::to_string(i);
        auto f = random_function(rng, cfg.reads[0], cfg.reads[1]).as_fn();
        auto g = random_function(rng, cfg.writes[1], cfg.writes[0]).as_fn();
        auto o1 = gen(rng, cfg.link(0));
        auto o2 = gen(rng, cfg.link(1));

        if (inj.more())
            inj.check(observe(theta(inj_optic<O1>(f, g)), inj_optic<O2>(f, g),
                              cfg.observe_span(0, 1)),
                      ctx);
        if (comp.more())
            comp.check(observe(theta(compose(o1, o2)),
                               compose(theta(o1), theta(o2)),
                               cfg.observe_span(0, 2)),
                       ctx);
        if (map.more()) {
            auto image = theta(o1);
            map.check(observe_maps(
                          [&](const Fn& h) { return map_optic(image, h); },
                          [&](const Fn& h) { return map_optic(o1, h); },
                          cfg.observe_span(0, 1)),
                      ctx);
        }
    }
    return {inj.finish(), comp.finish(), map.finish()};
}

/// `round(o)` is observationally `o` for generated optics.
template <class O>
LawReport check_round_trip(const std::string& name,
                           const std::function<O(std::mt19937_64&)>& gen,
                           const std::function<O(const O&)>& round,
                           const Signature& sig, std::size_t samples,
                           std::uint64_t seed)
{
    std::mt19937_64 rng{seed};
    LawRun run{name, CheckMode::budgeted, law_evaluation_cap * 10};
    for (std::size_t i = 0; i < samples && run.more(); ++i) {
        auto o = gen(rng);
        run.check(observe(round(o), o, sig), "sample " + std::to_string(i));
    }
    return run.finish();
}

// ---------------------------------------------------------------------------
// Enhancing laws for profunctor capability records.

/// A capability record with everything needed to test it: a sampler of
/// profunctor values `p a b` and an observational equality on `p s t`.
/// Hidden foci (what a Getting reads, what a Reviewing is fed, ...) live in
/// the probe.
struct ProfunctorProbe
{
    std::string name;
    ProfunctorCapability cap;
    FunctorFamily family;
    std::function<std::any(std::mt19937_64&, const FiniteDomain& a,
                           const FiniteDomain& b)>
        sample;
    std::function<Observation(const std::any&, const std::any&,
                              const FiniteDomain& s)>
        equal;
};

ProfunctorProbe function_arrow_probe();
ProfunctorProbe getting_probe();
ProfunctorProbe matching_probe();
ProfunctorProbe reviewing_probe();
ProfunctorProbe iso_probe(FunctorFamily family);
/// Concrete families seen as profunctors through their functorization.
ProfunctorProbe lens_probe();

/// The negative control: the function arrow whose enhance through a
/// composite shape forgets to lift the function.
ProfunctorProbe broken_compose_probe();

struct EnhancingConfig
{
    FiniteDomain residual = int_domain("C", 2);
    FiniteDomain a = int_domain("A", 2);
    FiniteDomain b = FiniteDomain{"B", {Value::string("x"), Value::string("y")}};
    std::size_t samples = 6;
    std::uint64_t seed = 7;
};

/// dimap identity/composition, enhance at Id and Compose, the wedge
/// condition over every registered natural transformation, and naturality
/// of enhance in the profunctor value.
std::vector<LawReport> check_enhancing_laws(const ProfunctorProbe& probe,
                                            const EnhancingConfig& cfg = {});

/// Registered shapes usable by a probe: enumerable, in its family and
/// supported by its capability.
std::vector<Shape> usable_shapes(const ProfunctorProbe& probe,
                                 const FiniteDomain& residual);

// ---------------------------------------------------------------------------
// Enhanceable / functorization laws for an enhancement operator into an
// optic family.

template <OpticFamily O>
std::vector<LawReport>
check_enhanceable_laws(const std::string& prefix, const std::string& instance,
                       const std::function<O(const Shape&)>& enhance_op,
                       FunctorFamily family, const EnhancingConfig& cfg = {})
{
    auto name = [&](const char* law) {
        return prefix + "." + law + "[" + instance + "]";
    };
    std::mt19937_64 rng{cfg.seed};
    LawRun id_law{name("id"), CheckMode::budgeted};
    LawRun comp_law{name("compose"), CheckMode::budgeted};
    LawRun wedge_law{name("wedge"), CheckMode::budgeted};
    LawRun nat_law{name("naturality"), CheckMode::budgeted};
    LawRun map_law{name("map"), CheckMode::budgeted};

    auto sig_at = [&](const Shape& f) {
        return Signature{payload_domain(f, cfg.a), cfg.a, cfg.b};
    };

    auto idf = id_shape();
    id_law.check(observe(enhance_op(idf),
                         inj_optic<O>([](const Value& v) { return v.inner(); },
                                      [](const Value& v) { return Value::id(v); }),
                         sig_at(idf)),
                 "Id");

    std::vector<Shape> base;
    for (const auto& f : {id_shape(), pair_shape(cfg.residual),
                          sum_shape(cfg.residual), maybe_pair_shape(cfg.residual),
                          affine_shape(cfg.residual, cfg.residual)})
        if (family.member(f))
            base.push_back(f);

    auto un_compose = [](const Value& v) { return v.inner(); };
    auto wrap_compose = [](const Value& v) { return Value::compose(v); };
    for (const auto& f : base)
        for (const auto& g : base) {
            if (!comp_law.more())
                break;
            auto fg = compose_shapes(f, g);
            comp_law.check(
                observe(enhance_op(fg),
                        compose(compose(inj_optic<O>(un_compose, wrap_compose),
                                        enhance_op(f)),
                                enhance_op(g)),
                        sig_at(fg)),
                fg.name());
        }

    for (const auto& nat : registered_naturals(cfg.residual)) {
        if (!family.member(nat.from) || !family.member(nat.to) ||
            !wedge_law.more())
            continue;
        wedge_law.check(
            observe(compose(inj_optic<O>(identity_fn(), nat.component),
                            enhance_op(nat.from)),
                    compose(inj_optic<O>(nat.component, identity_fn()),
                            enhance_op(nat.to)),
                    sig_at(nat.from)),
            nat.name);
    }

    for (const auto& f : member_shapes(family)) {
        auto sig = sig_at(f);
        for (std::size_t i = 0; i < cfg.samples && nat_law.more(); ++i) {
            // f1 : a -> a', g1 : b' -> b
            auto f1 = random_function(rng, cfg.a, cfg.b).as_fn();
            auto g1 = random_function(rng, cfg.a, cfg.b).as_fn();
            nat_law.check(
                observe(compose(enhance_op(f), inj_optic<O>(f1, g1)),
                        compose(inj_optic<O>(f.map(f1), f.map(g1)),
                                enhance_op(f)),
                        Signature{sig.s, cfg.b, cfg.a}),
                f.name());
        }
        if (map_law.more())
            map_law.check(
                observe_maps([&](const Fn& h) { return map_optic(enhance_op(f), h); },
                             [&](const Fn& h) { return f.map(h); }, sig),
                f.name());
    }
    return {id_law.finish(), comp_law.finish(), wedge_law.finish(),
            nat_law.finish(), map_law.finish()};
}

// ---------------------------------------------------------------------------
// Container shapes.

/// Functor laws, product/sum/affine round trips for every registered shape
/// over `residual`, and monoid closure of every functor family.
std::vector<LawReport> check_shape_laws(const FiniteDomain& residual,
                                        const FiniteDomain& a);

// ---------------------------------------------------------------------------
// Isomorphism optics.

/// Normal form and retraction for generated optics over every member shape.
std::vector<LawReport> check_iso_structure(FunctorFamily family,
                                           std::size_t samples,
                                           std::uint64_t seed);

} // namespace optics::laws
