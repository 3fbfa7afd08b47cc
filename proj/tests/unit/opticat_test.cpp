#include <doctest.h>

#include <golden_cases.hpp>

#include <opticat/cli.hpp>
#include <opticat/document.hpp>
#include <opticat/path.hpp>

#include <random>

using namespace opticat;
using optics::FamilyTag;

TEST_CASE("parsing paths")
{
    auto p = parse_path("key(users).idx(0).some.fst");
    REQUIRE(p.size() == 4);
    CHECK(p[0] == Step::key("users"));
    CHECK(p[1] == Step::idx(0));
    CHECK(p[2] == Step::of(Step::Kind::some));
    CHECK(p[3] == Step::of(Step::Kind::fst));
    CHECK(parse_path(R"(key("a \"b\" \\"))")[0] == Step::key(R"(a "b" \)"));
    CHECK(parse_path("key(x-1_y)")[0] == Step::key("x-1_y"));
    CHECK(parse_path("key(\"\")")[0] == Step::key(""));
}

TEST_CASE("parse errors carry an offset")
{
    auto offset = [](std::string_view text) -> std::size_t {
        try {
            parse_path(text);
        } catch (const ParseError& e) {
            return e.offset();
        }
        return std::string_view::npos;
    };
    CHECK(offset("fst..snd") == 4);
    CHECK(offset("") == 0);
    CHECK(offset("fst.") == 4);
    CHECK(offset("third") == 0);
    CHECK(offset("idx(01)") == 5);
    CHECK(offset("idx()") == 4);
    CHECK(offset("key(1a)") == 4);
    CHECK(offset("key(\"open") == 9);
    CHECK(offset("fst snd") == 3);
    try {
        parse_path("fst..snd");
    } catch (const ParseError& e) {
        CHECK(std::string{e.what()}.find("offset 4") != std::string::npos);
        CHECK_FALSE(e.expected().empty());
    }
}

TEST_CASE("a path's family is the join of its steps")
{
    auto tag = [](const char* p) { return compile(parse_path(p)).tag; };
    CHECK(tag("fst.snd") == FamilyTag::lens);
    CHECK(tag("some.some") == FamilyTag::prism);
    CHECK(tag("snd.some") == FamilyTag::optional);
    CHECK(tag("key(a)") == FamilyTag::optional);
    CHECK(tag("fst.idx(0)") == FamilyTag::optional);
    CHECK(tag("some.each") == FamilyTag::setter);
    CHECK(tag("each.fst") == FamilyTag::setter);

    // join of concatenation = join of the parts
    std::mt19937_64 rng{5};
    for (int i = 0; i < 200; ++i) {
        auto a = golden::random_path(rng);
        auto b = golden::random_path(rng);
        auto ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        CHECK(compile(ab).tag == optics::join(compile(a).tag, compile(b).tag));
    }
}

TEST_CASE("lens paths obey PutGet and GetPut on documents")
{
    std::mt19937_64 rng{9};
    std::uniform_int_distribution<int> small{-5, 5};
    auto path = compile(parse_path("fst.snd.fst"));
    for (int i = 0; i < 100; ++i) {
        auto inner = Document::array({Document::array({small(rng), small(rng)}),
                                      small(rng)});
        auto d = Document::array({Document::array({small(rng), inner}), "x"});
        Document v = small(rng);
        auto set = over(path, [v](const Document&) { return v; }, d);
        CHECK(get(path, set) == v);
        CHECK(over(path, [&](const Document&) { return get(path, d); }, d) == d);
    }
}

TEST_CASE("map composes")
{
    auto path = compile(parse_path("each"));
    auto incr = named_function("incr");
    Document d = {1, 2.5, -3};
    CHECK(over(path, incr, over(path, incr, d)) == Document{3, 4.5, -1});
    CHECK_THROWS_AS(named_function("square"), std::invalid_argument);
    CHECK_THROWS_AS(over(path, incr, Document{"a"}), TypeMismatch);
}

TEST_CASE("prism paths build and match back")
{
    auto path = compile(parse_path("some.some"));
    for (Document v : {Document(1), Document("s"), Document(nullptr), Document{1, 2}}) {
        auto d = build(path, v);
        auto m = match(path, d);
        CHECK(m.is_right);
        CHECK(m.value == v);
    }
}

TEST_CASE("parse . print is the identity on 1000 generated paths")
{
    std::mt19937_64 rng{2024};
    for (int i = 0; i < 1000; ++i) {
        auto p = golden::random_path(rng);
        auto text = print_path(p);
        CAPTURE(text);
        CHECK(parse_path(text) == p);
        CHECK(print_path(parse_path(text)) == text);
    }
}

TEST_CASE("golden invocations")
{
    for (const auto& c : golden::cases()) {
        CAPTURE(golden::describe(c));
        auto r = golden::run(c);
        CHECK(r.status == c.status);
        CHECK(r.out == c.out);
        if (c.status != exit_ok)
            CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("--input reads a file and --help succeeds")
{
    std::istringstream in;
    std::ostringstream out, err;
    CHECK(run({"get", "fst", "--input", "/nonexistent/doc.json"}, in, out, err) ==
          exit_parse);
    std::ostringstream help;
    CHECK(run({"--help"}, in, help, err) == exit_ok);
    CHECK(help.str().find("Exit status") != std::string::npos);
}
