#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace opticat {

enum ExitCode : int
{
    exit_ok = 0,
    exit_unsupported = 2, // operator not offered by the path's family
    exit_mismatch = 3,    // document shape does not fit the path, or a strict miss
    exit_parse = 4,       // bad path, bad document, bad VALUE/FN, bad usage
};

inline constexpr const char* version = "0.1.0";

/// `opticat <command> <path> [value] [--input FILE] [--strict]`
///
///   get PATH          the focus (LENS paths)
///   set PATH VALUE    replace every focus with the JSON VALUE
///   map PATH FN       apply incr, negate, upper or lower to every focus
///   match PATH        {"matched":true,"value":...} or {"matched":false,"rest":...}
///   build PATH VALUE  the document whose focus is VALUE (PRISM paths)
///
/// `args` excludes the program name. Reads the document from `in` unless
/// `--input` names a file; writes canonical JSON plus a newline to `out`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

} // namespace opticat
