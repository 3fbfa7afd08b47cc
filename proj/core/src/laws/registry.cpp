#include <optics/laws/registry.hpp>

#include <optics/laws/checks.hpp>
#include <optics/laws/theorems.hpp>

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

namespace optics::laws {

namespace {

using Reports = std::vector<LawReport>;

Reports concat(std::initializer_list<Reports> parts)
{
    Reports out;
    for (const auto& p : parts)
        out.insert(out.end(), p.begin(), p.end());
    return out;
}

LawReport coverage_failure(const std::string& law, const std::string& what,
                           const std::string& id)
{
    LawRun run{"coverage." + law};
    run.check(false, Counterexample{"registry", id, what, "claimed once"});
    return run.finish();
}

} // namespace

std::string_view law_id(std::string_view report_name) noexcept
{
    return report_name.substr(0, report_name.find('['));
}

const std::vector<LawGroup>& standard_groups()
{
    static const std::vector<LawGroup> groups = {
        {"concrete",
         {"lens.get_put", "lens.put_get", "lens.put_put", "prism.match_build",
          "prism.build_match", "prism.no_match_identity", "adapter.fwd_bwd",
          "adapter.bwd_fwd", "setter.over_identity", "setter.over_composition",
          "achlens.get_create", "optional.match_put", "optional.put_match",
          "optional.miss_put"},
         [](const SuiteOptions& o) {
             return check_concrete_suite(o.samples, o.seed);
         }},
        {"structure",
         {"families.lawful_composition", "families.multi_map_functor",
          "families.dimap_functor", "family_tag.join_laws"},
         [](const SuiteOptions& o) {
             return check_structural_suite(o.samples, o.seed);
         }},
        {"shapes",
         {"functor.map_identity", "functor.map_composition",
          "functor.product_round_trip", "functor.sum_round_trip",
          "functor.affine_round_trip", "functor.monoid_closure"},
         [](const SuiteOptions&) {
             return check_shape_laws(int_domain("C", 2), int_domain("A", 3));
         }},
        {"optic_family",
         {"optic_family.associativity", "optic_family.left_identity",
          "optic_family.right_identity", "optic_family.inj_identity",
          "optic_family.inj_composition", "optic_family.map_inj",
          "optic_family.map_compose"},
         [](const SuiteOptions& o) {
             return check_family_axioms(o.samples, o.seed);
         }},
        {"morphisms",
         {"morphism.inj", "morphism.compose", "morphism.map"},
         [](const SuiteOptions& o) {
             return check_conversion_morphisms(o.samples, o.seed);
         }},
        {"enhancing",
         {"profunctor.dimap_identity", "profunctor.dimap_composition",
          "enhancing.id", "enhancing.compose", "enhancing.wedge",
          "enhancing.naturality"},
         [](const SuiteOptions& o) { return check_enhancing_suite(o.seed); }},
        {"enhanceable",
         {"enhanceable.id", "enhanceable.compose", "enhanceable.wedge",
          "enhanceable.naturality", "enhanceable.map"},
         [](const SuiteOptions& o) { return check_enhanceable_suite(o.seed); }},
        {"functorization",
         {"functorization.id", "functorization.compose", "functorization.wedge",
          "functorization.naturality", "functorization.map",
          "encode.adapter_rigidity", "encode.residual_form"},
         [](const SuiteOptions& o) {
             return concat({check_functorization_suite(o.seed),
                            check_functorization_witnesses(o.samples, o.seed)});
         }},
        {"iso",
         {"iso.normal_form", "iso.retraction", "iso.endomorphism_rigidity",
          "iso.natural_slide"},
         [](const SuiteOptions& o) {
             return concat({check_iso_suite(o.samples, o.seed),
                            check_natural_slides(o.samples, o.seed)});
         }},
        {"representation",
         {"representation.iso_round_trip", "representation.prof_round_trip",
          "representation.parametricity", "prof.cross_family_match"},
         [](const SuiteOptions& o) {
             return concat(
                 {check_representation_theorem(o.round_trips, o.seed),
                  check_profunctor_agreement(o.samples, o.seed)});
         }},
        {"derivation",
         {"derivation.concrete_round_trip", "derivation.iso_round_trip"},
         [](const SuiteOptions& o) {
             return check_derivation_theorem(o.derivations, o.seed);
         }},
        {"encoding",
         {"encoding.decode_encode", "encoding.encode_decode"},
         [](const SuiteOptions& o) {
             return check_encoding_round_trips(o.round_trips, o.seed);
         }},
        {"controls",
         {"control.unlawful_lens", "control.broken_enhancing"},
         [](const SuiteOptions&) { return check_negative_controls(); }},
    };
    return groups;
}

const std::vector<std::string>& law_catalogue()
{
    static const std::vector<std::string> catalogue = [] {
        std::vector<std::string> ids = {
            // concrete well-behavedness
            "lens.get_put", "lens.put_get", "lens.put_put",
            "prism.match_build", "prism.build_match", "prism.no_match_identity",
            "adapter.fwd_bwd", "adapter.bwd_fwd", "setter.over_identity",
            "setter.over_composition", "achlens.get_create",
            "optional.match_put", "optional.put_match", "optional.miss_put",
            "families.lawful_composition",
            // optic families and their morphisms
            "optic_family.associativity", "optic_family.left_identity",
            "optic_family.right_identity", "optic_family.inj_identity",
            "optic_family.inj_composition", "optic_family.map_inj",
            "optic_family.map_compose", "families.multi_map_functor",
            "families.dimap_functor", "family_tag.join_laws", "morphism.inj",
            "morphism.compose", "morphism.map",
            // functor monoids
            "functor.map_identity", "functor.map_composition",
            "functor.product_round_trip", "functor.sum_round_trip",
            "functor.affine_round_trip", "functor.monoid_closure",
            // profunctors
            "profunctor.dimap_identity", "profunctor.dimap_composition",
            "enhancing.id", "enhancing.compose", "enhancing.wedge",
            "enhancing.naturality", "prof.cross_family_match",
            // isomorphism optics
            "iso.normal_form", "iso.retraction", "iso.endomorphism_rigidity",
            "iso.natural_slide", "enhanceable.id", "enhanceable.compose",
            "enhanceable.wedge", "enhanceable.naturality", "enhanceable.map",
            // representation, functorization, derivation
            "representation.iso_round_trip", "representation.prof_round_trip",
            "representation.parametricity", "functorization.id",
            "functorization.compose", "functorization.wedge",
            "functorization.naturality", "functorization.map",
            "encode.adapter_rigidity", "encode.residual_form",
            "derivation.concrete_round_trip", "derivation.iso_round_trip",
            "encoding.decode_encode", "encoding.encode_decode",
            // the checkers themselves
            "control.unlawful_lens", "control.broken_enhancing",
        };
        std::sort(ids.begin(), ids.end());
        return ids;
    }();
    return catalogue;
}

Coverage coverage(const std::vector<LawGroup>& groups,
                  const std::vector<std::string>& catalogue)
{
    std::map<std::string, int> claims;
    for (const auto& g : groups)
        for (const auto& id : g.claims)
            ++claims[id];
    std::set<std::string> known(catalogue.begin(), catalogue.end());

    Coverage c;
    for (const auto& id : known)
        if (!claims.count(id))
            c.unclaimed.push_back(id);
    for (const auto& [id, n] : claims) {
        if (n > 1)
            c.duplicated.push_back(id);
        if (!known.count(id))
            c.unknown.push_back(id);
    }
    return c;
}

std::vector<LawReport> run_suite(const std::vector<LawGroup>& groups,
                                 const SuiteOptions& opts,
                                 const std::vector<std::string>& catalogue)
{
    std::vector<Reports> results(groups.size());
    auto run_one = [&](std::size_t i) {
        try {
            results[i] = groups[i].run(opts);
        } catch (const std::exception& e) {
            LawRun run{"coverage.crashed[" + groups[i].name + "]"};
            run.check(false, Counterexample{"group", groups[i].name, e.what(),
                                            "reports"});
            results[i] = {run.finish()};
        }
    };

    if (opts.threads <= 1) {
        for (std::size_t i = 0; i < groups.size(); ++i)
            run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        auto n = std::min<std::size_t>(opts.threads, groups.size());
        for (std::size_t t = 0; t < n; ++t)
            pool.emplace_back([&] {
                for (auto i = next++; i < groups.size(); i = next++)
                    run_one(i);
            });
        for (auto& t : pool)
            t.join();
    }

    Reports out;
    Reports guard;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        std::set<std::string, std::less<>> claimed(groups[i].claims.begin(),
                                                   groups[i].claims.end());
        std::set<std::string, std::less<>> seen;
        for (auto& r : results[i]) {
            auto id = law_id(r.name);
            if (id.rfind("coverage.", 0) != 0 && !claimed.count(id))
                guard.push_back(coverage_failure(
                    "unregistered[" + std::string{id} + "]",
                    "emitted by " + groups[i].name, std::string{id}));
            seen.insert(std::string{id});
            out.push_back(std::move(r));
        }
        for (const auto& id : groups[i].claims)
            if (!seen.count(id))
                guard.push_back(coverage_failure("silent[" + id + "]",
                                                 "no report from " +
                                                     groups[i].name,
                                                 id));
    }

    auto cov = coverage(groups, catalogue);
    for (const auto& id : cov.unclaimed)
        guard.push_back(coverage_failure("unclaimed[" + id + "]", "unclaimed", id));
    for (const auto& id : cov.duplicated)
        guard.push_back(
            coverage_failure("duplicated[" + id + "]", "claimed twice", id));
    for (const auto& id : cov.unknown)
        guard.push_back(coverage_failure("unknown[" + id + "]",
                                         "not in the catalogue", id));

    std::stable_sort(out.begin(), out.end(),
                     [](const LawReport& a, const LawReport& b) {
                         return a.name < b.name;
                     });
    out.insert(out.end(), guard.begin(), guard.end());
    return out;
}

} // namespace optics::laws
