#pragma once

// Brute-force oracles, written directly from the law statements and kept
// independent of the library's checkers.

#include <optics/domain.hpp>
#include <optics/families.hpp>

#include <vector>

namespace oracle {

using optics::FiniteDomain;
using optics::Value;

inline bool lens_lawful(const optics::Lens& l, const FiniteDomain& s,
                        const FiniteDomain& a)
{
    for (const auto& x : s) {
        if (l.put(l.get(x), x) != x)
            return false;
        for (const auto& b : a) {
            if (l.get(l.put(b, x)) != b)
                return false;
            for (const auto& b2 : a)
                if (l.put(b2, l.put(b, x)) != l.put(b2, x))
                    return false;
        }
    }
    return true;
}

inline bool prism_lawful(const optics::Prism& p, const FiniteDomain& s,
                         const FiniteDomain& a)
{
    for (const auto& b : a) {
        auto m = p.match(p.build(b));
        if (!m.is_right || m.value != b)
            return false;
    }
    for (const auto& x : s) {
        auto m = p.match(x);
        if (m.is_right ? p.build(m.value) != x : m.value != x)
            return false;
    }
    return true;
}

inline bool optional_lawful(const optics::Optional& o, const FiniteDomain& s,
                            const FiniteDomain& a)
{
    for (const auto& x : s) {
        auto m = o.match(x);
        if (m.is_right && o.put(m.value, x) != x)
            return false;
        for (const auto& b : a) {
            auto t = o.put(b, x);
            if (m.is_right) {
                auto m2 = o.match(t);
                if (!m2.is_right || m2.value != b)
                    return false;
            } else if (t != m.value) {
                return false;
            }
        }
    }
    return true;
}

/// Every table `from -> to`, counted up like an odometer.
inline std::vector<std::vector<Value>> tables(const FiniteDomain& from,
                                              const FiniteDomain& to)
{
    std::vector<std::vector<Value>> out;
    std::vector<std::size_t> digits(from.size(), 0);
    while (true) {
        std::vector<Value> row;
        for (auto d : digits)
            row.push_back(to[d]);
        out.push_back(row);
        std::size_t i = digits.size();
        while (i > 0 && ++digits[i - 1] == to.size())
            digits[--i] = 0;
        if (i == 0)
            return out;
    }
}

inline optics::Fn table_fn(const FiniteDomain& from, std::vector<Value> row)
{
    return [from, row = std::move(row)](const Value& v) {
        return row[from.index_of(v)];
    };
}

/// Pointwise equality of two whole-to-whole functions.
inline bool same(const optics::Fn& f, const optics::Fn& g, const FiniteDomain& s)
{
    for (const auto& x : s)
        if (f(x) != g(x))
            return false;
    return true;
}

} // namespace oracle
