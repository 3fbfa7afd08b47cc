#include <doctest.h>

#include <oracles.hpp>

#include <optics/laws/checks.hpp>
#include <optics/laws/generators.hpp>
#include <optics/laws/registry.hpp>
#include <optics/laws/theorems.hpp>

#include <json.hpp>

#include <algorithm>
#include <random>
#include <sstream>

using namespace optics;
using namespace optics::laws;

namespace {

const FiniteDomain a2 = int_domain("A", 2);
const FiniteDomain a3 = int_domain("A", 3);
const FiniteDomain r2 = int_domain("R", 2);
const FiniteDomain s6 = int_domain("S", 6);
const FiniteDomain s5 = int_domain("S", 5);

bool lens_equal(const Lens& l, const Lens& r, const FiniteDomain& s,
                const FiniteDomain& a)
{
    for (const auto& x : s) {
        if (l.get(x) != r.get(x))
            return false;
        for (const auto& b : a)
            if (l.put(b, x) != r.put(b, x))
                return false;
    }
    return true;
}

const LawReport* find(const std::vector<LawReport>& rs, std::string_view name)
{
    auto it = std::find_if(rs.begin(), rs.end(),
                           [&](const LawReport& r) { return r.name == name; });
    return it == rs.end() ? nullptr : &*it;
}

} // namespace

TEST_CASE("generators are deterministic in the seed")
{
    CHECK(lens_equal(gen_lawful_lens(5, s6, r2, a3), gen_lawful_lens(5, s6, r2, a3),
                     s6, a3));
    bool some_differ = false;
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        some_differ |= !lens_equal(gen_lawful_lens(seed, s6, r2, a3),
                                   gen_lawful_lens(seed + 100, s6, r2, a3), s6, a3);
    CHECK(some_differ);
}

TEST_CASE("gen_lawful_* are lawful (oracle)")
{
    auto m1 = int_domain("M", 1);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        CHECK(oracle::lens_lawful(gen_lawful_lens(seed, s6, r2, a3), s6, a3));
        CHECK(oracle::prism_lawful(gen_lawful_prism(seed, s5, r2, a3), s5, a3));
        CHECK(oracle::optional_lawful(gen_lawful_optional(seed, s5, m1, r2, a2),
                                      s5, a2));
        auto ach = gen_lawful_achlens(seed, s6, r2, a3);
        CHECK(oracle::lens_lawful(Lens{ach.get, ach.put}, s6, a3));
    }
    CHECK_THROWS_AS(gen_lawful_lens(0, s5, r2, a3), std::invalid_argument);
    CHECK_THROWS_AS(gen_lawful_prism(0, s6, r2, a3), std::invalid_argument);
}

TEST_CASE("check_lens_laws agrees with the oracle on arbitrary lenses")
{
    auto s = int_domain("S", 3);
    std::mt19937_64 rng{17};
    int lawful = 0;
    for (int i = 0; i < 300; ++i) {
        auto l = random_lens(rng, simple(s, a2));
        bool expected = oracle::lens_lawful(l, s, a2);
        lawful += expected;
        CHECK(all_passed(check_lens_laws(l, s, a2)) == expected);
    }
    CHECK(lawful < 300);
}

TEST_CASE("check_prism_laws agrees with the oracle on arbitrary prisms")
{
    auto s = int_domain("S", 3);
    std::mt19937_64 rng{19};
    for (int i = 0; i < 300; ++i) {
        auto p = random_prism(rng, simple(s, a2));
        CHECK(all_passed(check_prism_laws(p, s, a2)) ==
              oracle::prism_lawful(p, s, a2));
    }
}

TEST_CASE("check_optional_laws agrees with the oracle on arbitrary optionals")
{
    auto s = int_domain("S", 3);
    std::mt19937_64 rng{23};
    for (int i = 0; i < 300; ++i) {
        auto o = random_optional(rng, simple(s, a2));
        CHECK(all_passed(check_optional_laws(o, s, a2)) ==
              oracle::optional_lawful(o, s, a2));
    }
}

TEST_CASE("the unlawful lens fails GetPut with a counterexample")
{
    auto pairs = product_domain(a2, a2);
    auto reports = check_lens_laws(unlawful_lens_ignoring_put(), pairs, a2);
    auto r = find(reports, "lens.get_put");
    REQUIRE(r);
    CHECK(r->status == LawStatus::fail);
    REQUIRE_FALSE(r->failures.empty());
    CHECK_FALSE(r->failures.front().input.empty());
    CHECK(r->failures.front().lhs != r->failures.front().rhs);
}

TEST_CASE("LawRun caps and inconclusive reports")
{
    LawRun exhaustive{"x", CheckMode::exhaustive, 3};
    int n = 0;
    while (exhaustive.more()) {
        exhaustive.check(true, {});
        ++n;
    }
    CHECK(n == 3);
    CHECK(exhaustive.finish().status == LawStatus::inconclusive);

    LawRun budgeted{"y", CheckMode::budgeted, 3};
    while (budgeted.more())
        budgeted.check(true, {});
    CHECK(budgeted.finish().status == LawStatus::pass);
    CHECK(budgeted.finish().cases == 3);

    LawRun failing{"z"};
    failing.check(false, Counterexample{"get", "1", "a", "b"});
    CHECK_FALSE(failing.more());
    CHECK(failing.finish().status == LawStatus::fail);

    Observation sampled;
    sampled.exhaustive = false;
    sampled.cases = 4;
    LawRun partial{"w"};
    partial.check(sampled);
    CHECK(partial.finish().status == LawStatus::inconclusive);
}

TEST_CASE("merge keeps the first failure and adds the cases")
{
    LawReport a{"law[a]", LawStatus::pass, 3, {}};
    LawReport b{"law[b]", LawStatus::fail, 2, {Counterexample{"put", "s", "1", "2"}}};
    LawReport c{"law[c]", LawStatus::fail, 1, {Counterexample{"get", "t", "3", "4"}}};
    auto m = merge("law", {a, b, c});
    CHECK(m.status == LawStatus::fail);
    CHECK(m.cases == 6);
    REQUIRE(m.failures.size() >= 1);
    CHECK(m.failures.front().segment == "put");
    CHECK(merge("law", {a, a}).status == LawStatus::pass);
}

TEST_CASE("write_jsonl emits one object per report")
{
    std::vector<LawReport> rs{
        {"lens.get_put[first]", LawStatus::pass, 12, {}},
        {"lens.put_get[bad]", LawStatus::fail, 1, {Counterexample{"get", "(0, 1)", "1", "0"}}},
    };
    std::ostringstream out;
    write_jsonl(out, rs);
    std::istringstream in{out.str()};
    std::string line;
    std::vector<nlohmann::json> lines;
    while (std::getline(in, line))
        lines.push_back(nlohmann::json::parse(line));
    REQUIRE(lines.size() == 2);
    CHECK(lines[0]["status"] == "PASS");
    CHECK(lines[0]["cases"] == 12);
    CHECK(lines[0]["counterexample"].is_null());
    CHECK(lines[1]["status"] == "FAIL");
    CHECK(lines[1]["counterexample"]["input"] == "(0, 1)");
}

TEST_CASE("law ids and the catalogue")
{
    CHECK(law_id("lens.get_put[first]") == "lens.get_put");
    CHECK(law_id("lens.get_put") == "lens.get_put");
    const auto& cat = law_catalogue();
    CHECK(std::is_sorted(cat.begin(), cat.end()));
    CHECK(std::adjacent_find(cat.begin(), cat.end()) == cat.end());
    CHECK(coverage(standard_groups()).complete());
}

TEST_CASE("coverage guard detects gaps")
{
    auto groups = standard_groups();
    auto catalogue = law_catalogue();

    auto extra = catalogue;
    extra.push_back("zz.never_checked");
    auto cov = coverage(groups, extra);
    CHECK_FALSE(cov.complete());
    CHECK(cov.unclaimed == std::vector<std::string>{"zz.never_checked"});

    // a group emitting an id it did not claim
    LawGroup rogue{"rogue", {"lens.get_put"}, [](const SuiteOptions&) {
                       return std::vector<LawReport>{
                           {"lens.get_put[x]", LawStatus::pass, 1, {}},
                           {"lens.put_put[x]", LawStatus::pass, 1, {}}};
                   }};
    auto reports = run_suite({rogue}, SuiteOptions{}, {"lens.get_put"});
    bool flagged = std::any_of(reports.begin(), reports.end(), [](const LawReport& r) {
        return r.name.rfind("coverage.", 0) == 0 && r.status == LawStatus::fail;
    });
    CHECK(flagged);

    // a claimed id that never reports
    LawGroup silent{"silent", {"lens.get_put"},
                    [](const SuiteOptions&) { return std::vector<LawReport>{}; }};
    auto quiet = run_suite({silent}, SuiteOptions{}, {"lens.get_put"});
    CHECK(std::any_of(quiet.begin(), quiet.end(), [](const LawReport& r) {
        return r.name.rfind("coverage.", 0) == 0 && r.status == LawStatus::fail;
    }));

    // a crashing group
    LawGroup crash{"crash", {"lens.get_put"}, [](const SuiteOptions&) -> std::vector<LawReport> {
                       throw std::runtime_error{"boom"};
                   }};
    auto crashed = run_suite({crash}, SuiteOptions{}, {"lens.get_put"});
    CHECK(std::any_of(crashed.begin(), crashed.end(), [](const LawReport& r) {
        return r.status == LawStatus::fail;
    }));
}

TEST_CASE("run_suite is deterministic across thread counts")
{
    std::vector<LawGroup> groups;
    for (const auto& g : standard_groups())
        if (g.name == "concrete" || g.name == "controls" || g.name == "iso")
            groups.push_back(g);
    std::vector<std::string> claimed;
    for (const auto& g : groups)
        claimed.insert(claimed.end(), g.claims.begin(), g.claims.end());
    std::sort(claimed.begin(), claimed.end());

    SuiteOptions one{20, 20, 20, 3, 1};
    SuiteOptions four = one;
    four.threads = 4;
    std::ostringstream a, b;
    write_jsonl(a, run_suite(groups, one, claimed));
    write_jsonl(b, run_suite(groups, four, claimed));
    CHECK(a.str() == b.str());
    CHECK(a.str().find("\"FAIL\"") == std::string::npos);
}

TEST_CASE("negative controls detect the planted defects")
{
    auto reports = check_negative_controls();
    REQUIRE_FALSE(reports.empty());
    CHECK(all_passed(reports));
}

TEST_CASE("enhancing laws catch a broken compose")
{
    auto reports = check_enhancing_laws(broken_compose_probe());
    bool caught = std::any_of(reports.begin(), reports.end(), [](const LawReport& r) {
        return law_id(r.name) == "enhancing.compose" && r.status == LawStatus::fail;
    });
    CHECK(caught);
    CHECK(all_passed(check_enhancing_laws(function_arrow_probe())));
}

TEST_CASE("cardinality mismatches are rejected")
{
    std::mt19937_64 rng{1};
    CHECK_THROWS_AS(random_bijection(rng, a2, a3), std::invalid_argument);
    CHECK_THROWS_AS(gen_lawful_optional(0, s6, int_domain("M", 1), r2, a2),
                    std::invalid_argument);
    CHECK_THROWS_AS(FiniteDomain("E", {}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteDomain("E", {1_i, 1_i}), std::invalid_argument);
}
