#include <optics/laws/theorems.hpp>

#include <optics/laws/checks.hpp>

#include <map>

namespace optics::laws {

namespace {

using Reports = std::vector<LawReport>;

void append(Reports& out, Reports more)
{
    for (auto& r : more)
        out.push_back(std::move(r));
}

template <class O>
std::string tag_name()
{
    return std::string{to_string(optic_family<O>::tag)};
}

/// Carriers and lawful generators for simple optics of each family.
struct Lawful
{
    FiniteDomain r = int_domain("R", 2);
    FiniteDomain a = int_domain("A", 3);
    FiniteDomain a2 = int_domain("A", 2);
    FiniteDomain m = int_domain("M", 1);

    FiniteDomain lens_s = int_domain("S", 6);   // R x A
    FiniteDomain prism_s = int_domain("S", 5);  // R + A
    FiniteDomain adapter_s = int_domain("S", 3);
    FiniteDomain setter_s = int_domain("S", 8); // R x A2 x A2
    FiniteDomain optional_s = int_domain("S", 5); // M + R x A2

    template <class O>
    std::pair<std::function<O(std::uint64_t)>, Signature> family() const;
};

template <>
std::pair<std::function<Adapter(std::uint64_t)>, Signature>
Lawful::family<Adapter>() const
{
    return {[s = adapter_s, a = a](std::uint64_t seed) {
                return gen_lawful_adapter(seed, s, a);
            },
            Signature{adapter_s, a, a}};
}

template <>
std::pair<std::function<Lens(std::uint64_t)>, Signature>
Lawful::family<Lens>() const
{
    return {[s = lens_s, r = r, a = a](std::uint64_t seed) {
                return gen_lawful_lens(seed, s, r, a);
            },
            Signature{lens_s, a, a}};
}

template <>
std::pair<std::function<Prism(std::uint64_t)>, Signature>
Lawful::family<Prism>() const
{
    return {[s = prism_s, r = r, a = a](std::uint64_t seed) {
                return gen_lawful_prism(seed, s, r, a);
            },
            Signature{prism_s, a, a}};
}

template <>
std::pair<std::function<Setter(std::uint64_t)>, Signature>
Lawful::family<Setter>() const
{
    return {[s = setter_s, r = r, a = a2](std::uint64_t seed) {
                return gen_setter(seed, s, r, a, 2);
            },
            Signature{setter_s, a2, a2}};
}

template <>
std::pair<std::function<AchLens(std::uint64_t)>, Signature>
Lawful::family<AchLens>() const
{
    return {[s = lens_s, r = r, a = a](std::uint64_t seed) {
                return gen_lawful_achlens(seed, s, r, a);
            },
            Signature{lens_s, a, a}};
}

template <>
std::pair<std::function<Optional(std::uint64_t)>, Signature>
Lawful::family<Optional>() const
{
    return {[s = optional_s, m = m, r = r, a = a2](std::uint64_t seed) {
                return gen_lawful_optional(seed, s, m, r, a);
            },
            Signature{optional_s, a2, a2}};
}

/// Calls `f.template operator()<O>()` for every concrete family.
template <class F>
void for_each_family(F&& f)
{
    f.template operator()<Adapter>();
    f.template operator()<Lens>();
    f.template operator()<Prism>();
    f.template operator()<Setter>();
    f.template operator()<AchLens>();
    f.template operator()<Optional>();
}

std::string family_label(const char* kind, FunctorFamily family)
{
    return std::string{kind} + "<" + family.name() + ">";
}

} // namespace

Reports check_concrete_suite(std::size_t samples, std::uint64_t seed)
{
    Lawful d;
    std::map<std::string, Reports> by_law;
    auto collect = [&](Reports rs) {
        for (auto& r : rs)
            by_law[r.name].push_back(std::move(r));
    };
    for (std::size_t i = 0; i < samples; ++i) {
        auto s = seed + i;
        collect(check_adapter_laws(d.family<Adapter>().first(s), d.adapter_s, d.a));
        collect(check_lens_laws(d.family<Lens>().first(s), d.lens_s, d.a));
        collect(check_prism_laws(d.family<Prism>().first(s), d.prism_s, d.a));
        collect(check_setter_laws(d.family<Setter>().first(s), d.setter_s, d.a2));
        collect(check_achlens_laws(d.family<AchLens>().first(s), d.lens_s, d.a));
        collect(check_optional_laws(d.family<Optional>().first(s), d.optional_s,
                                    d.a2));
    }

    // canonical optics
    auto c = int_domain("C", 2);
    auto pairs = product_domain(d.a, c);
    collect(check_lens_laws(first(), pairs, d.a));
    collect(check_lens_laws(second(), product_domain(c, d.a), d.a));
    collect(check_lens_laws(compose(first(), first()),
                            product_domain(pairs, c), d.a));
    collect(check_prism_laws(just(), maybe_domain(d.a), d.a));
    collect(check_prism_laws(compose(just(), just()),
                             maybe_domain(maybe_domain(d.a)), d.a));
    collect(check_prism_laws(right_branch(), sum_domain(c, d.a), d.a));
    collect(check_setter_laws(both(), product_domain(d.a2, d.a2), d.a2));
    collect(check_optional_laws(compose(as_optional(second()), as_optional(just())),
                                product_domain(c, maybe_domain(d.a)), d.a));

    Reports out;
    for (auto& [name, parts] : by_law)
        out.push_back(merge(name, parts));
    return out;
}

Reports check_family_axioms(std::size_t samples, std::uint64_t seed)
{
    auto cfg = default_chain(seed, samples);
    Reports out;
    for_each_family([&]<class O>() {
        append(out, check_optic_family_laws<O>(tag_name<O>(), arbitrary<O>(), cfg));
    });
    for (auto family : all_functor_families())
        append(out, check_optic_family_laws<IsoOptic>(
                        family_label("IsoOptic", family), arbitrary_iso(family),
                        cfg));
    for (auto family : {is_product(), is_sum(), is_affine(), any_functor()})
        append(out, check_optic_family_laws<ProfOptic>(
                        family_label("ProfOptic", family),
                        arbitrary_prof(family), cfg));
    return out;
}

Reports check_conversion_morphisms(std::size_t samples, std::uint64_t seed)
{
    auto cfg = default_chain(seed, samples);
    Reports out;
    for_each_family([&]<class O>() {
        auto tag = tag_name<O>();
        auto family = functor_family_of(optic_family<O>::tag);
        auto enc = prof_encoding<O>();
        append(out, check_morphism<O, IsoOptic>(
                        "concrete_to_iso " + tag,
                        [](const O& o) { return concrete_to_iso(o); },
                        arbitrary<O>(), cfg));
        append(out, check_morphism<IsoOptic, O>(
                        "unfunctorize " + tag,
                        [](const IsoOptic& l) { return unfunctorize<O>(l); },
                        arbitrary_iso(family), cfg));
        append(out, check_morphism<O, ProfOptic>("encode " + tag, enc.encode,
                                                 arbitrary<O>(), cfg));
        append(out, check_morphism<ProfOptic, O>("decode " + tag, enc.decode,
                                                 arbitrary_prof(family), cfg));
    });
    for (auto family : all_functor_families()) {
        append(out, check_morphism<IsoOptic, ProfOptic>(
                        family_label("iso_to_prof ", family),
                        [](const IsoOptic& l) { return iso_to_prof(l); },
                        arbitrary_iso(family), cfg));
        append(out, check_morphism<ProfOptic, IsoOptic>(
                        family_label("prof_to_iso ", family),
                        [](const ProfOptic& l) { return prof_to_iso(l); },
                        arbitrary_prof(family), cfg));
    }
    // embeddings along the family order
    append(out, check_morphism<Adapter, Lens>(
                    "as_lens ADAPTER",
                    [](const Adapter& o) { return as_lens(o); },
                    arbitrary<Adapter>(), cfg));
    append(out, check_morphism<Adapter, Prism>(
                    "as_prism ADAPTER",
                    [](const Adapter& o) { return as_prism(o); },
                    arbitrary<Adapter>(), cfg));
    append(out, check_morphism<AchLens, Lens>(
                    "as_lens ACHLENS",
                    [](const AchLens& o) { return as_lens(o); },
                    arbitrary<AchLens>(), cfg));
    append(out, check_morphism<Lens, Optional>(
                    "as_optional LENS",
                    [](const Lens& o) { return as_optional(o); },
                    arbitrary<Lens>(), cfg));
    append(out, check_morphism<Prism, Optional>(
                    "as_optional PRISM",
                    [](const Prism& o) { return as_optional(o); },
                    arbitrary<Prism>(), cfg));
    append(out, check_morphism<Optional, Setter>(
                    "as_setter OPTIONAL",
                    [](const Optional& o) { return as_setter(o); },
                    arbitrary<Optional>(), cfg));
    return out;
}

Reports check_enhancing_suite(std::uint64_t seed)
{
    EnhancingConfig cfg;
    cfg.seed = seed;
    Reports out;
    for (const auto& probe : {function_arrow_probe(), getting_probe(),
                              matching_probe(), reviewing_probe(), lens_probe()})
        append(out, check_enhancing_laws(probe, cfg));
    for (auto family : all_functor_families())
        append(out, check_enhancing_laws(iso_probe(family), cfg));
    return out;
}

Reports check_enhanceable_suite(std::uint64_t seed)
{
    EnhancingConfig cfg;
    cfg.seed = seed;
    Reports out;
    for (auto family : all_functor_families()) {
        append(out, check_enhanceable_laws<IsoOptic>(
                        "enhanceable", family_label("IsoOptic", family),
                        iso_enhance_op(family), family, cfg));
        append(out, check_enhanceable_laws<ProfOptic>(
                        "enhanceable", family_label("ProfOptic", family),
                        [family](const Shape& f) {
                            return prof_enhance(family, f);
                        },
                        family, cfg));
    }
    return out;
}

Reports check_functorization_suite(std::uint64_t seed)
{
    EnhancingConfig cfg;
    cfg.seed = seed;
    Reports out;
    for_each_family([&]<class O>() {
        auto fz = functorize<O>();
        append(out, check_enhanceable_laws<O>("functorization", tag_name<O>(),
                                              fz.enhance_op, fz.family, cfg));
    });
    return out;
}

Reports check_iso_suite(std::size_t samples, std::uint64_t seed)
{
    Reports out;
    for (auto family : all_functor_families())
        append(out, check_iso_structure(family, samples, seed));
    return out;
}

Reports check_representation_theorem(std::size_t samples, std::uint64_t seed)
{
    auto chain = default_chain(seed);
    auto sig = chain.observe_span(0, 1);
    Reports out;
    for (auto family : all_functor_families()) {
        auto label = std::string{"["} + family.name() + "]";
        auto isos = arbitrary_iso(family);
        out.push_back(check_round_trip<IsoOptic>(
            "representation.iso_round_trip" + label,
            [&](std::mt19937_64& rng) { return isos(rng, chain.link(0)); },
            [](const IsoOptic& l) { return prof_to_iso(iso_to_prof(l)); },
            sig, samples, seed));
        auto profs = arbitrary_prof(family);
        out.push_back(check_round_trip<ProfOptic>(
            "representation.prof_round_trip" + label,
            [&](std::mt19937_64& rng) { return profs(rng, chain.link(0)); },
            [](const ProfOptic& l) { return iso_to_prof(prof_to_iso(l)); },
            sig, samples, seed + 1));
    }

    // the prebuilt optics, each at a whole domain that fits it
    auto a = int_domain("A", 2);
    auto b = FiniteDomain{"B", {Value::string("x"), Value::string("y")}};
    auto c = int_domain("C", 2);
    std::vector<std::pair<std::string, std::pair<ProfOptic, FiniteDomain>>>
        prebuilt = {
            {"first", {prof_first(), product_domain(a, c)}},
            {"second", {prof_second(), product_domain(c, a)}},
            {"right", {prof_right(), sum_domain(c, a)}},
            {"just", {prof_just(), maybe_domain(a)}},
            {"first.first",
             {prof_compose(prof_first(), prof_first()),
              product_domain(product_domain(a, c), c)}},
            {"second.just",
             {prof_compose(prof_second(), prof_just()),
              product_domain(c, maybe_domain(a))}},
            {"just.just",
             {prof_compose(prof_just(), prof_just()),
              maybe_domain(maybe_domain(a))}},
            {"identity", {prof_identity(), a}},
        };
    std::vector<LawReport> parts;
    for (const auto& [name, entry] : prebuilt) {
        const auto& [l, s] = entry;
        parts.push_back(check_round_trip<ProfOptic>(
            "representation.prof_round_trip[" + name + "]",
            [&](std::mt19937_64&) { return l; },
            [](const ProfOptic& p) { return iso_to_prof(prof_to_iso(p)); },
            Signature{s, a, b}, 1, seed));
    }
    out.push_back(merge("representation.prof_round_trip[prebuilt]", parts));
    return out;
}

Reports check_derivation_theorem(std::size_t samples, std::uint64_t seed)
{
    Lawful d;
    auto chain = default_chain(seed);
    Reports out;
    for_each_family([&]<class O>() {
        auto tag = "[" + tag_name<O>() + "]";
        auto [gen, sig] = d.family<O>();
        out.push_back(check_round_trip<O>(
            "derivation.concrete_round_trip" + tag,
            [gen = gen, n = seed](std::mt19937_64& rng) { return gen(rng() ^ n); },
            [](const O& o) { return unfunctorize<O>(concrete_to_iso(o)); }, sig,
            samples, seed));
        auto isos = arbitrary_iso(functor_family_of(optic_family<O>::tag));
        out.push_back(check_round_trip<IsoOptic>(
            "derivation.iso_round_trip" + tag,
            [&](std::mt19937_64& rng) { return isos(rng, chain.link(0)); },
            [](const IsoOptic& l) { return concrete_to_iso(unfunctorize<O>(l)); },
            chain.observe_span(0, 1), samples, seed));
    });
    return out;
}

Reports check_encoding_round_trips(std::size_t samples, std::uint64_t seed)
{
    Lawful d;
    auto chain = default_chain(seed);
    Reports out;
    for_each_family([&]<class O>() {
        auto tag = "[" + tag_name<O>() + "]";
        auto enc = prof_encoding<O>();
        auto [gen, sig] = d.family<O>();
        out.push_back(check_round_trip<O>(
            "encoding.decode_encode" + tag,
            [gen = gen, n = seed](std::mt19937_64& rng) { return gen(rng() ^ n); },
            [enc](const O& o) { return enc.decode(enc.encode(o)); }, sig,
            samples, seed));
        auto profs = arbitrary_prof(functor_family_of(optic_family<O>::tag));
        out.push_back(check_round_trip<ProfOptic>(
            "encoding.encode_decode" + tag,
            [&](std::mt19937_64& rng) { return profs(rng, chain.link(0)); },
            [enc](const ProfOptic& l) { return enc.encode(enc.decode(l)); },
            chain.observe_span(0, 1), samples, seed));
    });
    return out;
}

Reports check_negative_controls()
{
    Reports out;
    auto a = int_domain("A", 3);
    auto pairs = product_domain(a, int_domain("C", 2));
    LawRun unlawful{"control.unlawful_lens"};
    for (const auto& r : check_lens_laws(unlawful_lens_ignoring_put(), pairs, a))
        if (r.name == "lens.get_put")
            unlawful.check(r.status == LawStatus::fail && !r.failures.empty(),
                           {"defect detected", r.name,
                            std::string{to_string(r.status)}, "FAIL"});
    out.push_back(unlawful.finish());

    auto broken = check_enhancing_laws(broken_compose_probe());
    LawRun detect{"control.broken_enhancing"};
    for (const auto& r : broken)
        if (r.name.rfind("enhancing.compose", 0) == 0)
            detect.check(r.status == LawStatus::fail,
                         {"compose law detected", r.name,
                          std::string{to_string(r.status)}, "FAIL"});
    out.push_back(detect.finish());
    return out;
}

Reports check_structural_suite(std::size_t samples, std::uint64_t seed)
{
    Reports out;
    auto a2 = int_domain("A", 2);
    auto x2 = int_domain("X", 2);
    auto r1 = int_domain("R", 1);
    auto r2 = int_domain("R", 2);
    auto r3 = int_domain("R", 3);
    auto m1 = int_domain("M", 1);

    // composites of lawful optics stay lawful
    std::map<std::string, Reports> by_law;
    auto collect = [&](const std::string& family, Reports rs) {
        for (auto& r : rs)
            by_law["families.lawful_composition[" + family + "]"].push_back(
                std::move(r));
    };
    auto s12 = int_domain("S", 12), a4 = int_domain("A", 4);
    auto s6 = int_domain("S", 6), s4 = int_domain("S", 4), a3 = int_domain("A", 3);
    for (std::size_t i = 0; i < samples; ++i) {
        auto k = seed + 2 * i;
        collect("LENS", check_lens_laws(compose(gen_lawful_lens(k, s12, r3, a4),
                                                gen_lawful_lens(k + 1, a4, r2, x2)),
                                        s12, x2));
        collect("ACHLENS",
                check_achlens_laws(compose(gen_lawful_achlens(k, s12, r3, a4),
                                           gen_lawful_achlens(k + 1, a4, r2, x2)),
                                   s12, x2));
        collect("PRISM",
                check_prism_laws(compose(gen_lawful_prism(k, s6, r2, a4),
                                         gen_lawful_prism(k + 1, a4, r2, x2)),
                                 s6, x2));
        collect("OPTIONAL",
                check_optional_laws(
                    compose(gen_lawful_optional(k, s4, m1, r1, a3),
                            gen_lawful_optional(k + 1, a3, m1, r1, x2)),
                    s4, x2));
        collect("SETTER",
                check_setter_laws(compose(gen_setter(k, s4, r1, a2, 2),
                                          gen_setter(k + 1, a2, r1, x2, 1)),
                                  s4, x2));
        collect("ADAPTER",
                check_adapter_laws(compose(gen_lawful_adapter(k, s4, a4),
                                           gen_lawful_adapter(k + 1, a4, s4)),
                                   s4, s4));
    }
    for (auto& [name, parts] : by_law)
        out.push_back(merge(name, parts));

    // multi_map_optic and dimap_optic are functorial
    auto d = int_domain("D", 3);
    auto sig = Signature{d, d, d};
    for_each_family([&]<class O>() {
        auto gen = arbitrary<O>();
        std::mt19937_64 rng{seed};
        LawRun multi{"families.multi_map_functor[" + tag_name<O>() + "]",
                     CheckMode::budgeted};
        LawRun dimap{"families.dimap_functor[" + tag_name<O>() + "]",
                     CheckMode::budgeted};
        auto fn = [&] { return random_function(rng, d, d).as_fn(); };
        for (std::size_t i = 0; i < samples && multi.more(); ++i) {
            auto o = gen(rng, simple(d, d));
            auto fa1 = fn(), fb1 = fn(), fs1 = fn(), ft1 = fn();
            auto fa2 = fn(), fb2 = fn(), fs2 = fn(), ft2 = fn();
            auto ctx = "sample " + std::to_string(i);
            multi.check(
                observe(multi_map_optic(fa2, fb2, fs2, ft2,
                                        multi_map_optic(fa1, fb1, fs1, ft1, o)),
                        multi_map_optic(compose_fn(fa2, fa1), compose_fn(fb1, fb2),
                                        compose_fn(fs1, fs2), compose_fn(ft2, ft1),
                                        o),
                        sig),
                ctx);
            if (dimap.more())
                dimap.check(observe(dimap_optic(fs2, ft2, dimap_optic(fs1, ft1, o)),
                                    dimap_optic(compose_fn(fs1, fs2),
                                                compose_fn(ft2, ft1), o),
                                    sig),
                            ctx);
        }
        out.push_back(multi.finish());
        out.push_back(dimap.finish());
    });

    // the family lattice
    LawRun lattice{"family_tag.join_laws"};
    for (auto x : all_family_tags) {
        for (auto y : all_family_tags) {
            auto j = join(x, y);
            auto pair = std::string{to_string(x)} + ", " + std::string{to_string(y)};
            lattice.check(j == join(y, x), {"commutative", pair, "", ""});
            lattice.check(family_leq(x, j) && family_leq(y, j),
                          {"upper bound", pair, std::string{to_string(j)}, ""});
            for (auto z : all_family_tags) {
                lattice.check(join(j, z) == join(x, join(y, z)),
                              {"associative",
                               pair + ", " + std::string{to_string(z)}, "", ""});
                if (family_leq(x, z) && family_leq(y, z))
                    lattice.check(family_leq(j, z),
                                  {"least", pair + ", " + std::string{to_string(z)},
                                   std::string{to_string(j)}, ""});
            }
        }
        lattice.check(join(x, x) == x,
                      {"idempotent", std::string{to_string(x)}, "", ""});
    }
    out.push_back(lattice.finish());
    return out;
}

Reports check_natural_slides(std::size_t samples, std::uint64_t seed)
{
    auto c = int_domain("C", 2);
    auto s = int_domain("S", 3);
    auto a = int_domain("A", 2);
    auto b = FiniteDomain{"B", {Value::string("x"), Value::string("y")}};
    std::mt19937_64 rng{seed};
    LawRun slide{"iso.natural_slide", CheckMode::budgeted};
    for (const auto& phi : registered_naturals(c)) {
        auto fa = payload_domain(phi.from, a);
        auto gb = payload_domain(phi.to, b);
        for (std::size_t i = 0; i < samples && slide.more(); ++i) {
            auto alpha = random_function(rng, s, fa).as_fn();
            auto beta = random_function(rng, gb, s).as_fn();
            slide.check(observe_iso(IsoOptic{any_functor(), phi.to,
                                             compose_fn(phi.component, alpha), beta},
                                    IsoOptic{any_functor(), phi.from, alpha,
                                             compose_fn(beta, phi.component)},
                                    Signature{s, a, b}),
                        phi.name);
        }
    }
    return {slide.finish()};
}

Reports check_functorization_witnesses(std::size_t samples, std::uint64_t seed)
{
    Reports out;
    auto a = int_domain("A", 3);

    LawRun rigid{"encode.adapter_rigidity"};
    auto adapters = functorize<Adapter>();
    for (const auto& f : member_shapes(id_only())) {
        auto o = adapters.enhance_op(f);
        auto payloads = payload_domain(f, a);
        auto fwd_bwd = observe_functions(compose_fn(o.fwd, o.bwd), identity_fn(), a,
                                         "fwd . bwd");
        rigid.check(fwd_bwd, f.name());
        rigid.check(observe_functions(compose_fn(o.bwd, o.fwd), identity_fn(),
                                      payloads, "bwd . fwd"),
                    f.name());
    }
    out.push_back(rigid.finish());

    Lawful d;
    LawRun residual{"encode.residual_form", CheckMode::budgeted};
    for (std::size_t i = 0; i < samples && residual.more(); ++i) {
        auto lens = concrete_to_iso(d.family<Lens>().first(seed + i)).shape().name();
        residual.check(lens.rfind("Pair<", 0) == 0,
                       {"lens shape", "sample " + std::to_string(i), lens, "Pair<_>"});
        auto ach = concrete_to_iso(d.family<AchLens>().first(seed + i)).shape().name();
        residual.check(ach.rfind("MaybePair<", 0) == 0,
                       {"achlens shape", "sample " + std::to_string(i), ach,
                        "MaybePair<_>"});
    }
    out.push_back(residual.finish());
    return out;
}

Reports check_profunctor_agreement(std::size_t samples, std::uint64_t seed)
{
    Reports out;
    auto a = int_domain("A", 3);
    auto c = int_domain("C", 2);

    // second . just read through Matching is an optional's match
    LawRun cross{"prof.cross_family_match"};
    auto oracle = compose(as_optional(second()), as_optional(just()));
    cross.check(observe_functions(
                    match_operator(prof_compose(prof_second(), prof_just())),
                    [oracle](const Value& v) { return to_value(oracle.match(v)); },
                    product_domain(c, maybe_domain(a)), "match"),
                "second.just");
    auto oracle2 = compose(as_optional(just()), as_optional(first()));
    cross.check(observe_functions(
                    match_operator(prof_compose(prof_just(), prof_first())),
                    [oracle2](const Value& v) { return to_value(oracle2.match(v)); },
                    maybe_domain(product_domain(a, c)), "match"),
                "just.first");
    out.push_back(cross.finish());

    // iso_to_prof commutes with applying a profunctor optic
    auto chain = default_chain(seed);
    LawRun param{"representation.parametricity", CheckMode::budgeted};
    std::mt19937_64 rng{seed};
    for (auto family : all_functor_families()) {
        auto profs = arbitrary_prof(family);
        auto isos = arbitrary_iso(family);
        for (std::size_t i = 0; i < samples && param.more(); ++i) {
            auto l = profs(rng, chain.link(0));
            auto pab = isos(rng, chain.link(1));
            auto applied = l.apply_as<IsoOptic>(iso_capability(family), pab);
            param.check(observe_prof(iso_to_prof(applied),
                                     prof_compose(l, iso_to_prof(pab)),
                                     chain.observe_span(0, 2)),
                        family.name());
        }
    }
    out.push_back(param.finish());
    return out;
}

} // namespace optics::laws
