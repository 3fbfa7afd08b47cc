// One line per acceptance criterion; exits non-zero when any fails.

#include <golden_cases.hpp>

#include <optics/encode.hpp>
#include <optics/laws/checks.hpp>
#include <optics/laws/registry.hpp>
#include <optics/laws/theorems.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace optics;
using namespace optics::laws;

namespace {

struct Verdict
{
    bool ok = true;
    std::string detail;
};

/// Fails on the first failing report; otherwise summarizes the cases.
Verdict from_reports(const std::vector<LawReport>& rs)
{
    std::uint64_t cases = 0;
    for (const auto& r : rs) {
        cases += r.cases;
        if (!r.passed()) {
            std::string why = r.name + " " + std::string{to_string(r.status)};
            if (!r.failures.empty())
                why += ": " + r.failures.front().to_string();
            return {false, why};
        }
    }
    return {true, std::to_string(rs.size()) + " reports, " + std::to_string(cases) +
                      " cases"};
}

void also(Verdict& v, bool ok, const std::string& why)
{
    if (v.ok && !ok)
        v = {false, why};
}

std::uint64_t cases_of(const std::vector<LawReport>& rs, std::string_view id)
{
    std::uint64_t n = 0;
    for (const auto& r : rs)
        if (law_id(r.name) == id)
            n += r.cases;
    return n;
}

bool probes_exhaustive(const Signature& sig)
{
    return probes_are_exhaustive(sig.a, sig.b, sig.s.size());
}

Verdict worked_examples()
{
    Verdict v;
    auto expect = [&](const char* what, const Value& got, const Value& want) {
        also(v, got == want,
             std::string{what} + " = " + got.to_string() + ", want " + want.to_string());
    };
    auto hello = pair(4_i, str("hello"));
    auto nested = pair(pair(pair(1_i, 2_i), str("hi")), 4_i);
    auto nested42 = pair(pair(pair(42_i, 2_i), str("hi")), 4_i);
    auto jn = Value::just(Value::nothing());
    auto jj42 = Value::just(Value::just(42_i));

    // concrete records
    auto first_of_4 = compose(first(), compose(first(), first()));
    auto jj = compose(just(), just());
    expect("get first", first().get(hello), 4_i);
    expect("put first 12", first().put(12_i, hello), pair(12_i, str("hello")));
    expect("put firstOf4 42", first_of_4.put(42_i, nested), nested42);
    expect("match just (Just 42)", to_value(just().match(Value::just(42_i))),
           Value::right(42_i));
    expect("match just Nothing", to_value(just().match(Value::nothing())),
           Value::left(Value::nothing()));
    expect("match justjust (Just Nothing)", to_value(jj.match(jn)), Value::left(jn));
    expect("match justjust (Just (Just 42))", to_value(jj.match(jj42)),
           Value::right(42_i));
    expect("build justjust 42", jj.build(42_i), jj42);

    // profunctor optics, prebuilt and encoded from the concrete records
    auto arrow = [](const ProfOptic& l, const Fn& h) {
        return l.apply_as<Fn>(function_arrow(), h);
    };
    auto pfirst_of_4 =
        prof_compose(prof_first(), prof_compose(prof_first(), prof_first()));
    auto pjj = prof_compose(prof_just(), prof_just());
    for (const auto& [pfirst, pf4, pjust, pjj2] :
         {std::tuple{prof_first(), pfirst_of_4, prof_just(), pjj},
          std::tuple{prof_encoding<Lens>().encode(first()),
                     prof_encoding<Lens>().encode(first_of_4),
                     prof_encoding<Prism>().encode(just()),
                     prof_encoding<Prism>().encode(jj)}}) {
        expect("prof get first", get_operator(pfirst)(hello), 4_i);
        expect("prof put first 12", arrow(pfirst, constant_fn(12_i))(hello),
               pair(12_i, str("hello")));
        expect("prof put firstOf4 42", arrow(pf4, constant_fn(42_i))(nested), nested42);
        expect("prof match just (Just 42)", match_operator(pjust)(Value::just(42_i)),
               Value::right(42_i));
        expect("prof match just Nothing", match_operator(pjust)(Value::nothing()),
               Value::left(Value::nothing()));
        expect("prof match justjust (Just Nothing)", match_operator(pjj2)(jn),
               Value::left(jn));
        expect("prof match justjust (Just (Just 42))", match_operator(pjj2)(jj42),
               Value::right(42_i));
        expect("prof build justjust 42", build_operator(pjj2)(42_i), jj42);
    }
    if (v.ok)
        v.detail = "8 examples, concrete and profunctor";
    return v;
}

Verdict family_laws()
{
    auto rs = check_family_axioms(100, 1);
    auto v = from_reports(rs);
    auto chain = default_chain();
    for (const auto& d : chain.reads)
        also(v, d.size() <= 4, "domain " + d.name() + " larger than 4");
    for (const auto& d : chain.writes)
        also(v, d.size() <= 4, "domain " + d.name() + " larger than 4");
    for (std::size_t to = 1; to < chain.reads.size(); ++to)
        also(v, probes_exhaustive(chain.observe_span(0, to)),
             "probes not exhaustive at span " + std::to_string(to));
    std::size_t instances = 0;
    for (const auto& r : rs)
        instances += law_id(r.name) == "optic_family.associativity";
    also(v, instances >= 6 + all_functor_families().size(),
         "only " + std::to_string(instances) + " family instances");
    return v;
}

Verdict enhancing_laws()
{
    EnhancingConfig cfg;
    Verdict v;
    std::vector<LawReport> all;
    std::vector<ProfunctorProbe> probes = {function_arrow_probe(), getting_probe(),
                                           matching_probe(), iso_probe(any_functor())};
    // the narrower iso capabilities only need to pass
    for (auto family : all_functor_families())
        if (family != any_functor()) {
            auto rs = check_enhancing_laws(iso_probe(family), cfg);
            all.insert(all.end(), rs.begin(), rs.end());
        }
    std::size_t fewest = SIZE_MAX;
    for (const auto& probe : probes) {
        auto rs = check_enhancing_laws(probe, cfg);
        all.insert(all.end(), rs.begin(), rs.end());
        auto usable = usable_shapes(probe, cfg.residual);
        auto in = [&](const Shape& s) {
            return std::find(usable.begin(), usable.end(), s) != usable.end();
        };
        std::size_t naturals = 0;
        for (const auto& nat : registered_naturals(cfg.residual))
            naturals += in(nat.from) && in(nat.to);
        fewest = std::min(fewest, naturals);
        also(v, naturals >= 5,
             probe.name + " has " + std::to_string(naturals) + " usable naturals");
        also(v, cases_of(rs, "enhancing.wedge") > 0, probe.name + " checked no wedge");
    }
    auto r = from_reports(all);
    if (!r.ok || !v.ok)
        return r.ok ? v : r;
    r.detail += ", wedge over >= " + std::to_string(fewest) + " naturals per probe";
    return r;
}

Verdict representation()
{
    auto rs = check_representation_theorem(100, 1);
    auto v = from_reports(rs);
    std::uint64_t isos = 0;
    for (const auto& r : rs)
        if (law_id(r.name) == "representation.iso_round_trip")
            isos += 100;
    also(v, isos >= 500, "only " + std::to_string(isos) + " isos");
    also(v, probes_exhaustive(default_chain().observe_span(0, 1)),
         "probes not exhaustive");
    if (v.ok)
        v.detail += ", " + std::to_string(isos) + " isos each way";
    return v;
}

Verdict derivation()
{
    auto rs = check_derivation_theorem(200, 1);
    auto enc = check_encoding_round_trips(200, 1);
    rs.insert(rs.end(), enc.begin(), enc.end());
    auto v = from_reports(rs);
    for (const char* name : {"encoding.decode_encode[LENS]", "encoding.encode_decode[LENS]",
                             "encoding.decode_encode[ACHLENS]",
                             "encoding.encode_decode[ACHLENS]"})
        also(v, std::any_of(rs.begin(), rs.end(),
                            [&](const LawReport& r) { return r.name == name; }),
             std::string{"missing "} + name);
    return v;
}

Verdict morphisms()
{
    auto rs = check_conversion_morphisms(100, 1);
    auto v = from_reports(rs);
    for (const char* conv : {"concrete_to_iso", "unfunctorize", "iso_to_prof",
                             "prof_to_iso", "encode", "decode"})
        also(v, std::any_of(rs.begin(), rs.end(),
                            [&](const LawReport& r) {
                                return r.name.find(conv) != std::string::npos;
                            }),
             std::string{"no instance for "} + conv);
    return v;
}

Verdict negative_controls()
{
    Verdict v = from_reports(check_negative_controls());
    auto a = int_domain("A", 3);
    auto lens = check_lens_laws(unlawful_lens_ignoring_put(),
                                product_domain(a, int_domain("C", 2)), a);
    for (const auto& r : lens)
        if (r.name == "lens.get_put") {
            also(v, !r.failures.empty(), "GetPut reported no counterexample");
            if (v.ok)
                v.detail = "GetPut counterexample " + r.failures.front().to_string();
        }
    return v;
}

Verdict cli_golden()
{
    Verdict v;
    const auto& table = golden::cases();
    bool has_snd_some = false;
    for (const auto& c : table) {
        has_snd_some |= c.args.size() > 1 && c.args[1] == "snd.some";
        auto r = golden::run(c);
        also(v, r.status == c.status && r.out == c.out,
             golden::describe(c) + " -> status " + std::to_string(r.status) + ", '" +
                 r.out + "'");
    }
    also(v, table.size() >= 20, "fewer than 20 golden cases");
    also(v, has_snd_some, "no snd.some case");

    std::mt19937_64 rng{2024};
    for (int i = 0; i < 1000 && v.ok; ++i) {
        auto p = golden::random_path(rng);
        auto text = opticat::print_path(p);
        also(v, opticat::parse_path(text) == p, "round trip broke on " + text);
    }
    if (v.ok)
        v.detail = std::to_string(table.size()) + " golden cases, 1000 paths";
    return v;
}

struct Criterion
{
    const char* name;
    double limit_s; // 0: untimed
    std::function<Verdict()> run;
};

} // namespace

int main()
{
    std::vector<Criterion> criteria = {
        {"worked examples", 1, worked_examples},
        {"optic family laws", 30, family_laws},
        {"enhancing laws", 0, enhancing_laws},
        {"representation theorem", 60, representation},
        {"derivation theorem", 0, derivation},
        {"morphism preservation", 0, morphisms},
        {"negative controls", 0, negative_controls},
        {"cli golden tests", 0, cli_golden},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string{"threw: "} + e.what()};
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
        if (c.limit_s > 0 && secs > c.limit_s)
            also(v, false, "over the " + std::to_string(int(c.limit_s)) + " s limit");
        failed += !v.ok;
        std::printf("%s %zu %-24s %7.2fs  %s\n", v.ok ? "PASS" : "FAIL", i + 1, c.name,
                    secs, v.detail.c_str());
    }
    return failed == 0 ? 0 : 1;
}
