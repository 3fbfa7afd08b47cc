#include <opticat/cli.hpp>
#include <opticat/document.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>

namespace opticat {

namespace {

struct Invocation
{
    std::string command;
    std::string path;
    std::optional<std::string> value;
    std::string input;
    bool strict = false;
};

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

Document parse_document(const std::string& text, const char* what)
{
    try {
        return Document::parse(text);
    } catch (const Document::parse_error& e) {
        throw UsageError{std::string{what} + " is not valid JSON: " + e.what()};
    }
}

Document read_input(const Invocation& inv, std::istream& in)
{
    std::string text;
    if (inv.input.empty() || inv.input == "-") {
        text.assign(std::istreambuf_iterator<char>{in}, {});
    } else {
        std::ifstream file{inv.input, std::ios::binary};
        if (!file)
            throw UsageError{"cannot read " + inv.input};
        text.assign(std::istreambuf_iterator<char>{file}, {});
    }
    return parse_document(text, "input");
}

const std::string& operand(const Invocation& inv, const char* what)
{
    if (!inv.value)
        throw UsageError{inv.command + " needs a " + what};
    return *inv.value;
}

int execute(const Invocation& inv, std::istream& in, std::ostream& out)
{
    static const std::vector<std::string> commands = {"get", "set", "map",
                                                      "match", "build"};
    if (std::find(commands.begin(), commands.end(), inv.command) == commands.end())
        throw UsageError{"unknown command '" + inv.command +
                         "' (expected get, set, map, match or build)"};
    bool takes_value = inv.command == "set" || inv.command == "map" ||
                       inv.command == "build";
    if (!takes_value && inv.value)
        throw UsageError{inv.command + " takes no value"};

    auto path = compile(parse_path(inv.path));

    if (inv.command == "build") {
        auto value = parse_document(operand(inv, "VALUE"), "VALUE");
        out << canonical(build(path, value)) << '\n';
        return exit_ok;
    }

    std::optional<DocFn> fn;
    std::optional<Document> value;
    if (inv.command == "map")
        try {
            fn = named_function(operand(inv, "FN"));
        } catch (const std::invalid_argument& e) {
            throw UsageError{e.what()};
        }
    if (inv.command == "set")
        value = parse_document(operand(inv, "VALUE"), "VALUE");

    // reject the operator before reading the document
    if (inv.command == "get" && !optics::supports_get(path.tag))
        get(path, nullptr);
    if (inv.command == "match" && !optics::supports_match(path.tag))
        match(path, nullptr);

    auto doc = read_input(inv, in);
    if (inv.command == "get") {
        out << canonical(get(path, doc)) << '\n';
        return exit_ok;
    }
    if (inv.command == "match") {
        auto m = match(path, doc);
        Document r = m.is_right ? Document{{"matched", true}, {"value", m.value}}
                                : Document{{"matched", false}, {"rest", m.value}};
        out << canonical(r) << '\n';
        return exit_ok;
    }
    if (inv.strict && misses(path, doc))
        throw TypeMismatch{"path " + print_path(parse_path(inv.path)) +
                           " has no focus in the document (--strict)"};
    auto h = fn ? *fn : DocFn{[v = *value](const Document&) { return v; }};
    out << canonical(over(path, h, doc)) << '\n';
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err)
{
    Invocation inv;
    CLI::App app{"Apply composed optics to JSON documents.", "opticat"};
    app.set_version_flag("--version", std::string{"opticat "} + version);
    app.add_option("command", inv.command, "get, set, map, match or build")
        ->required();
    app.add_option("path", inv.path, "path expression, e.g. key(users).idx(0).some")
        ->required();
    app.add_option("value", inv.value, "JSON VALUE for set/build, FN for map");
    app.add_option("--input", inv.input, "read the document from FILE");
    app.add_flag("--strict", inv.strict, "a path with no focus exits with status 3");
    app.footer("Exit status: 0 ok, 2 unsupported operator, 3 type mismatch or "
               "strict miss, 4 parse or usage error.");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForVersion&) {
        out << "opticat " << version << '\n';
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "opticat: " << e.what() << '\n';
        return exit_parse;
    }

    try {
        return execute(inv, in, out);
    } catch (const ParseError& e) {
        err << "opticat: path " << e.what() << '\n';
        return exit_parse;
    } catch (const UsageError& e) {
        err << "opticat: " << e.what() << '\n';
        return exit_parse;
    } catch (const Unsupported& e) {
        err << "opticat: " << e.what() << '\n';
        return exit_unsupported;
    } catch (const TypeMismatch& e) {
        err << "opticat: " << e.what() << '\n';
        return exit_mismatch;
    } catch (const Document::exception& e) {
        err << "opticat: " << e.what() << '\n';
        return exit_mismatch;
    }
}

} // namespace opticat
