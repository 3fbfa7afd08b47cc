#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

/*
 * path := step ('.' step)*
 * step := 'fst' | 'snd' | 'some' | 'each'
 *       | 'key(' IDENT ')' | 'key(' STRING ')'
 *       | 'idx(' NAT ')'
 * IDENT  := [A-Za-z_][A-Za-z0-9_-]*
 * STRING := '"' (char | '\"' | '\\')* '"'
 * NAT    := '0' | [1-9][0-9]*
 */
namespace opticat {

struct Step
{
    enum class Kind
    {
        fst,
        snd,
        key,
        idx,
        some,
        each,
    };

    Kind kind;
    std::string name;    // key
    std::size_t index{}; // idx

    static Step of(Kind k) { return {k, {}, 0}; }
    static Step key(std::string n) { return {Kind::key, std::move(n), 0}; }
    static Step idx(std::size_t i) { return {Kind::idx, {}, i}; }

    friend bool operator==(const Step&, const Step&) = default;
};

using PathExpr = std::vector<Step>;

class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t offset, std::vector<std::string> expected);

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept
    {
        return expected_;
    }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// Throws ParseError at the first byte that cannot continue a path.
PathExpr parse_path(std::string_view text);

/// Inverse of parse_path; keys that are not identifiers are quoted.
std::string print_path(const PathExpr& path);

std::string to_string(Step::Kind kind);

} // namespace opticat
