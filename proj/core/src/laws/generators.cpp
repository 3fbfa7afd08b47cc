#include <optics/laws/generators.hpp>

#include <map>
#include <stdexcept>

namespace optics::laws {

namespace {

using K = Value::Kind;

std::mt19937_64 rng_for(std::uint64_t seed)
{
    return std::mt19937_64{seed};
}

void require_size(bool ok, const char* what)
{
    if (!ok)
        throw std::invalid_argument{std::string{"cardinality mismatch: "} +
                                    what};
}

/// A random bijection and its inverse.
struct Iso
{
    FunctionTable to;
    FunctionTable from;
};

Iso random_iso_tables(std::mt19937_64& rng, const FiniteDomain& s,
                      const FiniteDomain& target)
{
    auto to = random_bijection(rng, s, target);
    std::vector<Value> inverse(target.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        inverse[target.index_of(to.outputs()[i])] = s[i];
    return {to, FunctionTable{target, std::move(inverse)}};
}

FiniteDomain power_domain(const FiniteDomain& a, std::size_t n)
{
    if (n == 1)
        return a;
    return product_domain(a, power_domain(a, n - 1));
}

Value map_power(const Fn& h, const Value& v, std::size_t n)
{
    if (n == 1)
        return h(v);
    return Value::pair(h(v.first()), map_power(h, v.second(), n - 1));
}

std::uint64_t pow_u64(std::uint64_t base, std::size_t exp)
{
    std::uint64_t r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

} // namespace

Adapter gen_lawful_adapter(std::uint64_t seed, const FiniteDomain& s,
                           const FiniteDomain& a)
{
    require_size(s.size() == a.size(), "|S| != |A|");
    auto rng = rng_for(seed);
    auto iso = random_iso_tables(rng, s, a);
    return {iso.to.as_fn(), iso.from.as_fn()};
}

Lens gen_lawful_lens(std::uint64_t seed, const FiniteDomain& s,
                     const FiniteDomain& r, const FiniteDomain& a)
{
    require_size(s.size() == r.size() * a.size(), "|S| != |R|*|A|");
    auto rng = rng_for(seed);
    auto iso = random_iso_tables(rng, s, product_domain(r, a));
    return {[to = iso.to](const Value& x) { return to(x).second(); },
            [to = iso.to, from = iso.from](const Value& b, const Value& x) {
                return from(Value::pair(to(x).first(), b));
            }};
}

Prism gen_lawful_prism(std::uint64_t seed, const FiniteDomain& s,
                       const FiniteDomain& r, const FiniteDomain& a)
{
    require_size(s.size() == r.size() + a.size(), "|S| != |R|+|A|");
    auto rng = rng_for(seed);
    auto iso = random_iso_tables(rng, s, sum_domain(r, a));
    return {[to = iso.to](const Value& x) {
                auto e = to(x);
                return e.is(K::right) ? Either<Value>::right(e.inner())
                                      : Either<Value>::left(x);
            },
            [from = iso.from](const Value& b) {
                return from(Value::right(b));
            }};
}

AchLens gen_lawful_achlens(std::uint64_t seed, const FiniteDomain& s,
                           const FiniteDomain& r, const FiniteDomain& a)
{
    require_size(s.size() == r.size() * a.size(), "|S| != |R|*|A|");
    auto rng = rng_for(seed);
    auto iso = random_iso_tables(rng, s, product_domain(r, a));
    return {[to = iso.to](const Value& x) { return to(x).second(); },
            [to = iso.to, from = iso.from](const Value& b, const Value& x) {
                return from(Value::pair(to(x).first(), b));
            },
            [from = iso.from, point = r[0]](const Value& b) {
                return from(Value::pair(point, b));
            }};
}

Setter gen_setter(std::uint64_t seed, const FiniteDomain& s,
                  const FiniteDomain& r, const FiniteDomain& a,
                  std::size_t foci)
{
    require_size(foci >= 1, "setter needs at least one focus");
    require_size(s.size() == r.size() * pow_u64(a.size(), foci),
                 "|S| != |R|*|A|^foci");
    auto rng = rng_for(seed);
    auto iso = random_iso_tables(rng, s, product_domain(r, power_domain(a, foci)));
    return {[to = iso.to, from = iso.from, foci](const Fn& h) -> Fn {
        return [to, from, h, foci](const Value& x) {
            auto split = to(x);
            return from(Value::pair(split.first(),
                                    map_power(h, split.second(), foci)));
        };
    }};
}

Setter gen_setter(const Shape& shape)
{
    return {[shape](const Fn& h) { return shape.map(h); }};
}

Optional gen_lawful_optional(std::uint64_t seed, const FiniteDomain& s,
                             const FiniteDomain& m, const FiniteDomain& r,
                             const FiniteDomain& a)
{
    require_size(s.size() == m.size() + r.size() * a.size(),
                 "|S| != |M|+|R|*|A|");
    auto rng = rng_for(seed);
    auto iso = random_iso_tables(rng, s, sum_domain(m, product_domain(r, a)));
    return {[to = iso.to](const Value& x) {
                auto e = to(x);
                return e.is(K::right) ? Either<Value>::right(e.inner().second())
                                      : Either<Value>::left(x);
            },
            [to = iso.to, from = iso.from](const Value& b, const Value& x) {
                auto e = to(x);
                if (e.is(K::left))
                    return x;
                return from(Value::right(Value::pair(e.inner().first(), b)));
            }};
}

Adapter random_adapter(std::mt19937_64& rng, const Carriers& c)
{
    return {random_function(rng, c.s, c.a).as_fn(),
            random_function(rng, c.b, c.t).as_fn()};
}

Lens random_lens(std::mt19937_64& rng, const Carriers& c)
{
    auto put = random_function(rng, product_domain(c.b, c.s), c.t);
    return {random_function(rng, c.s, c.a).as_fn(),
            [put](const Value& b, const Value& s) {
                return put(Value::pair(b, s));
            }};
}

Prism random_prism(std::mt19937_64& rng, const Carriers& c)
{
    auto m = random_function(rng, c.s, sum_domain(c.t, c.a));
    return {[m](const Value& s) { return either_from_value(m(s)); },
            random_function(rng, c.b, c.t).as_fn()};
}

Setter random_setter(std::mt19937_64& rng, const Carriers& c)
{
    constexpr std::uint64_t max_probes = 4096;
    if (function_count(c.a, c.b) > max_probes)
        throw std::length_error{"too many functions a -> b for a table setter"};
    std::map<std::vector<Value>, FunctionTable> table;
    for (auto& h : all_functions(c.a, c.b))
        table.emplace(h.outputs(), random_function(rng, c.s, c.t));
    return {[a = c.a, table = std::move(table)](const Fn& h) -> Fn {
        auto key = FunctionTable::tabulate(a, h).outputs();
        auto it = table.find(key);
        if (it == table.end())
            throw std::out_of_range{"setter applied outside its focus domain"};
        return it->second.as_fn();
    }};
}

AchLens random_achlens(std::mt19937_64& rng, const Carriers& c)
{
    auto lens = random_lens(rng, c);
    return {lens.get, lens.put, random_function(rng, c.b, c.t).as_fn()};
}

Optional random_optional(std::mt19937_64& rng, const Carriers& c)
{
    auto m = random_function(rng, c.s, sum_domain(c.t, c.a));
    auto put = random_function(rng, product_domain(c.b, c.s), c.t);
    return {[m](const Value& s) { return either_from_value(m(s)); },
            [put](const Value& b, const Value& s) {
                return put(Value::pair(b, s));
            }};
}

IsoOptic random_iso(std::mt19937_64& rng, std::optional<FunctorFamily> family,
                    const Shape& shape, const Carriers& c)
{
    auto fwd = random_function(rng, c.s, payload_domain(shape, c.a));
    auto bwd = random_function(rng, payload_domain(shape, c.b), c.t);
    return IsoOptic{family, shape, fwd.as_fn(), bwd.as_fn()};
}

Lens unlawful_lens_ignoring_put()
{
    return {[](const Value& s) { return s.first(); },
            [](const Value&, const Value& s) { return s; }};
}

FiniteDomain payload_domain(const Shape& shape, const FiniteDomain& dom)
{
    return FiniteDomain{shape.name() + "(" + dom.name() + ")",
                        shape.enumerate(dom.elements())};
}

} // namespace optics::laws
