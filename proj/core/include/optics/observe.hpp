#pragma once

#include <optics/domain.hpp>
#include <optics/families.hpp>

#include <cstdint>
#include <optional>
#include <string>

/// Observational equality of optics over finite domains.
///
/// Two optics are equal when their action on functions agrees for every
/// probe `a -> b` at every whole `s`. Concrete families additionally compare
/// each of their operators (get, put, match, build, create) pointwise.
namespace optics {

/// Where to observe an optic `Optic<A,B,S,T>`.
struct Signature
{
    FiniteDomain s; // wholes fed to the optic
    FiniteDomain a; // foci read
    FiniteDomain b; // foci written
};

struct Counterexample
{
    std::string segment; // "map", "get", "put", ...
    std::string input;
    std::string lhs;
    std::string rhs;

    std::string to_string() const;
};

struct Observation
{
    bool equal = true;
    bool exhaustive = true;
    std::uint64_t cases = 0;
    std::optional<Counterexample> counterexample;

    explicit operator bool() const noexcept { return equal; }
};

/// Evaluates `f`, turning an exception into a marker value so that a
/// throwing side compares unequal to a returning one.
template <class F>
Value guarded(F&& f)
{
    try {
        return f();
    } catch (const std::exception& e) {
        return Value::string(std::string{"<throws: "} + e.what() + ">");
    }
}

namespace detail {

inline bool record(Observation& obs,
                   const char* segment,
                   const std::string& input,
                   const Value& lhs,
                   const Value& rhs)
{
    ++obs.cases;
    if (lhs == rhs)
        return true;
    obs.equal = false;
    obs.counterexample =
        Counterexample{segment, input, lhs.to_string(), rhs.to_string()};
    return false;
}

template <class O>
bool observe_operators(Observation& obs, const O& l, const O& r,
                       const Signature& sig)
{
    if constexpr (requires { l.get; }) {
        for (const auto& s : sig.s)
            if (!record(obs, "get", s.to_string(),
                        guarded([&] { return l.get(s); }),
                        guarded([&] { return r.get(s); })))
                return false;
    }
    if constexpr (requires { l.match; }) {
        for (const auto& s : sig.s)
            if (!record(obs, "match", s.to_string(),
                        guarded([&] { return to_value(l.match(s)); }),
                        guarded([&] { return to_value(r.match(s)); })))
                return false;
    }
    if constexpr (requires { l.put; }) {
        // an optional's put is only meaningful where match hits
        auto hits = [&](const Value& s) {
            if constexpr (requires { l.match; })
                return l.match(s).is_right;
            else
                return true;
        };
        for (const auto& b : sig.b)
            for (const auto& s : sig.s)
                if (hits(s) && !record(obs, "put",
                            b.to_string() + ", " + s.to_string(),
                            guarded([&] { return l.put(b, s); }),
                            guarded([&] { return r.put(b, s); })))
                    return false;
    }
    if constexpr (requires { l.build; }) {
        for (const auto& b : sig.b)
            if (!record(obs, "build", b.to_string(),
                        guarded([&] { return l.build(b); }),
                        guarded([&] { return r.build(b); })))
                return false;
    }
    if constexpr (requires { l.create; }) {
        for (const auto& b : sig.b)
            if (!record(obs, "create", b.to_string(),
                        guarded([&] { return l.create(b); }),
                        guarded([&] { return r.create(b); })))
                return false;
    }
    return true;
}

} // namespace detail

/// Compares two action-on-functions transformers `(a -> b) -> (s -> t)`.
template <class MapL, class MapR>
Observation observe_maps(const MapL& l, const MapR& r, const Signature& sig,
                         std::uint64_t seed = 0x0971c5)
{
    Observation obs;
    obs.exhaustive = probes_are_exhaustive(sig.a, sig.b, sig.s.size());
    for (const auto& h : probe_functions(sig.a, sig.b, sig.s.size(), seed)) {
        auto fl = guarded([&] { return Value::function(l(h.as_fn())); });
        auto fr = guarded([&] { return Value::function(r(h.as_fn())); });
        for (const auto& s : sig.s) {
            auto input = h.to_string() + " @ " + s.to_string();
            auto lv = fl.is(Value::Kind::function) ? guarded([&] { return fl(s); })
                                                   : fl;
            auto rv = fr.is(Value::Kind::function) ? guarded([&] { return fr(s); })
                                                   : fr;
            if (!detail::record(obs, "map", input, lv, rv))
                return obs;
        }
    }
    return obs;
}

/// Observational comparison of two optics of the same family.
template <OpticFamily O>
    requires std::same_as<value_type_of<O>, Value>
Observation observe_equal(const O& l, const O& r, const Signature& sig,
                          std::uint64_t seed = 0x0971c5)
{
    auto obs = observe_maps([&](const Fn& h) { return map_optic(l, h); },
                            [&](const Fn& h) { return map_optic(r, h); },
                            sig, seed);
    if (obs)
        detail::observe_operators(obs, l, r, sig);
    return obs;
}

/// Compares two functions pointwise over `dom`.
Observation observe_functions(const Fn& l, const Fn& r,
                              const FiniteDomain& dom,
                              const char* segment = "fn");

} // namespace optics
