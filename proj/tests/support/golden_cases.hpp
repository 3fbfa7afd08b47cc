#pragma once

// Fixed opticat invocations with their exact stdout and exit status.

#include <opticat/cli.hpp>
#include <opticat/path.hpp>

#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace golden {

struct Case
{
    std::vector<std::string> args;
    std::string input;
    int status;
    std::string out;
};

inline const std::vector<Case>& cases()
{
    static const std::vector<Case> table = {
        {{"get", "fst"}, R"([4,"hello"])", 0, "4\n"},
        {{"set", "fst", "12"}, R"([4,"hello"])", 0, "[12,\"hello\"]\n"},
        {{"get", "fst.fst.fst"}, R"([[[1,2],"hi"],4])", 0, "1\n"},
        {{"set", "fst.fst.fst", "42"}, R"([[[1,2],"hi"],4])", 0,
         "[[[42,2],\"hi\"],4]\n"},
        {{"match", "some"}, R"({"some":42})", 0, "{\"matched\":true,\"value\":42}\n"},
        {{"match", "some"}, "null", 0, "{\"matched\":false,\"rest\":null}\n"},
        {{"match", "some.some"}, R"({"some":null})", 0,
         "{\"matched\":false,\"rest\":{\"some\":null}}\n"},
        {{"match", "some.some"}, R"({"some":{"some":42}})", 0,
         "{\"matched\":true,\"value\":42}\n"},
        {{"build", "some.some", "42"}, "", 0, "{\"some\":{\"some\":42}}\n"},
        {{"match", "snd.some"}, R"([1,{"some":5}])", 0,
         "{\"matched\":true,\"value\":5}\n"},
        {{"match", "snd.some"}, "[1,null]", 0,
         "{\"matched\":false,\"rest\":[1,null]}\n"},
        {{"set", "snd.some", "7"}, R"([1,{"some":5}])", 0, "[1,{\"some\":7}]\n"},
        {{"set", "snd.some", "7"}, "[1,null]", 0, "[1,null]\n"},
        {{"set", "snd.some", "7", "--strict"}, "[1,null]", 3, ""},
        {{"map", "each", "incr"}, "[1,2,3]", 0, "[2,3,4]\n"},
        {{"map", "key(users).each.key(name)", "upper"},
         R"({"users":[{"name":"ada"},{"name":"bob"}]})", 0,
         "{\"users\":[{\"name\":\"ADA\"},{\"name\":\"BOB\"}]}\n"},
        {{"map", "snd", "negate"}, "[1,2]", 0, "[1,-2]\n"},
        {{"match", "key(a).idx(1)"}, R"({"a":[1,2]})", 0,
         "{\"matched\":true,\"value\":2}\n"},
        {{"match", "idx(5)"}, "[1]", 0, "{\"matched\":false,\"rest\":[1]}\n"},
        {{"set", "key(\"a b\")", "true"}, R"({"a b":false})", 0, "{\"a b\":true}\n"},
        {{"get", "each"}, "[1,2]", 2, ""},
        {{"match", "each"}, "[1]", 2, ""},
        {{"build", "fst", "1"}, "", 2, ""},
        {{"get", "key(a)"}, R"({"a":1})", 2, ""},
        {{"get", "fst"}, R"({"a":1})", 3, ""},
        {{"map", "each", "incr"}, R"(["x"])", 3, ""},
        {{"get", "fst..snd"}, "[1,2]", 4, ""},
        {{"set", "fst", "notjson"}, "[1,2]", 4, ""},
        {{"map", "fst", "square"}, "[1,2]", 4, ""},
        {{"get", "fst"}, "[1,", 4, ""},
        {{"--version"}, "", 0, "opticat 0.1.0\n"},
    };
    return table;
}

struct Outcome
{
    int status;
    std::string out;
    std::string err;
};

inline Outcome run(const Case& c)
{
    std::istringstream in{c.input};
    std::ostringstream out, err;
    int status = opticat::run(c.args, in, out, err);
    return {status, out.str(), err.str()};
}

inline std::string describe(const Case& c)
{
    std::string s = "opticat";
    for (const auto& a : c.args)
        s += " " + a;
    return s + " <<< " + c.input;
}

/// A random path whose keys range over identifiers, spaces, quotes and
/// backslashes.
inline opticat::PathExpr random_path(std::mt19937_64& rng)
{
    using opticat::Step;
    static const std::string alphabet = "abz_AZ09- .\"\\()";
    std::uniform_int_distribution<int> len{1, 6}, kind{0, 5}, chars{0, 5};
    std::uniform_int_distribution<std::size_t> letter{0, alphabet.size() - 1};
    std::uniform_int_distribution<std::size_t> index{0, 1000};
    opticat::PathExpr p;
    for (int i = len(rng); i > 0; --i) {
        switch (kind(rng)) {
        case 0: p.push_back(Step::of(Step::Kind::fst)); break;
        case 1: p.push_back(Step::of(Step::Kind::snd)); break;
        case 2: p.push_back(Step::of(Step::Kind::some)); break;
        case 3: p.push_back(Step::of(Step::Kind::each)); break;
        case 4: p.push_back(Step::idx(index(rng))); break;
        default: {
            std::string name;
            for (int n = chars(rng); n > 0; --n)
                name += alphabet[letter(rng)];
            p.push_back(Step::key(name));
        }
        }
    }
    return p;
}

} // namespace golden
