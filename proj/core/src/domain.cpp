#include <optics/domain.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace optics {

FiniteDomain::FiniteDomain(std::string name, std::vector<Value> elements)
{
    if (elements.empty())
        throw std::invalid_argument{"domain '" + name + "' is empty"};
    auto impl = std::make_shared<Impl>();
    for (std::size_t i = 0; i < elements.size(); ++i) {
        auto [_, fresh] = impl->index.emplace(elements[i], i);
        if (!fresh)
            throw std::invalid_argument{"domain '" + name +
                                        "' repeats element " +
                                        elements[i].to_string()};
    }
    impl->name = std::move(name);
    impl->elements = std::move(elements);
    impl_ = std::move(impl);
}

bool FiniteDomain::contains(const Value& v) const
{
    return impl_->index.contains(v);
}

std::size_t FiniteDomain::index_of(const Value& v) const
{
    auto it = impl_->index.find(v);
    if (it == impl_->index.end())
        throw std::out_of_range{v.to_string() + " is not in domain '" +
                                name() + "'"};
    return it->second;
}

FiniteDomain int_domain(std::string name, std::size_t n)
{
    std::vector<Value> xs;
    xs.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        xs.push_back(Value::integer(static_cast<std::int64_t>(i)));
    return {std::move(name), std::move(xs)};
}

FiniteDomain product_domain(const FiniteDomain& a, const FiniteDomain& b)
{
    std::vector<Value> xs;
    xs.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b)
            xs.push_back(Value::pair(x, y));
    return {"(" + a.name() + "," + b.name() + ")", std::move(xs)};
}

FiniteDomain sum_domain(const FiniteDomain& a, const FiniteDomain& b)
{
    std::vector<Value> xs;
    xs.reserve(a.size() + b.size());
    for (const auto& x : a)
        xs.push_back(Value::left(x));
    for (const auto& y : b)
        xs.push_back(Value::right(y));
    return {a.name() + "+" + b.name(), std::move(xs)};
}

FiniteDomain maybe_domain(const FiniteDomain& a)
{
    std::vector<Value> xs{Value::nothing()};
    for (const auto& x : a)
        xs.push_back(Value::just(x));
    return {"Maybe " + a.name(), std::move(xs)};
}

FiniteDomain unit_domain() { return {"()", {Value::unit()}}; }

FunctionTable::FunctionTable(FiniteDomain from, std::vector<Value> outputs)
    : from_{std::move(from)}
{
    if (outputs.size() != from_.size())
        throw std::invalid_argument{"function table size does not match "
                                    "domain '" +
                                    from_.name() + "'"};
    outputs_ = std::make_shared<const std::vector<Value>>(std::move(outputs));
}

FunctionTable FunctionTable::tabulate(const FiniteDomain& from, const Fn& f)
{
    std::vector<Value> out;
    out.reserve(from.size());
    for (const auto& x : from)
        out.push_back(f(x));
    return {from, std::move(out)};
}

Value FunctionTable::operator()(const Value& v) const
{
    return (*outputs_)[from_.index_of(v)];
}

Fn FunctionTable::as_fn() const
{
    return [t = *this](const Value& v) { return t(v); };
}

Value FunctionTable::as_value() const { return Value::function(as_fn()); }

std::string FunctionTable::to_string() const
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < from_.size(); ++i) {
        if (i)
            os << ", ";
        os << from_[i].to_string() << "->" << (*outputs_)[i].to_string();
    }
    os << '}';
    return os.str();
}

std::uint64_t function_count(const FiniteDomain& from, const FiniteDomain& to)
{
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < from.size(); ++i) {
        if (n > UINT64_MAX / to.size())
            return UINT64_MAX;
        n *= to.size();
    }
    return n;
}

std::vector<FunctionTable> all_functions(const FiniteDomain& from,
                                         const FiniteDomain& to,
                                         std::uint64_t limit)
{
    auto count = function_count(from, to);
    if (count > limit)
        throw std::length_error{"too many functions " + from.name() + " -> " +
                                to.name()};
    std::vector<FunctionTable> result;
    result.reserve(count);
    std::vector<std::size_t> digits(from.size(), 0);
    for (std::uint64_t k = 0; k < count; ++k) {
        std::vector<Value> out;
        out.reserve(from.size());
        for (auto d : digits)
            out.push_back(to[d]);
        result.emplace_back(from, std::move(out));
        // odometer increment, last position fastest
        for (std::size_t i = digits.size(); i-- > 0;) {
            if (++digits[i] < to.size())
                break;
            digits[i] = 0;
        }
    }
    return result;
}

FunctionTable random_function(std::mt19937_64& rng,
                              const FiniteDomain& from,
                              const FiniteDomain& to)
{
    std::uniform_int_distribution<std::size_t> pick(0, to.size() - 1);
    std::vector<Value> out;
    out.reserve(from.size());
    for (std::size_t i = 0; i < from.size(); ++i)
        out.push_back(to[pick(rng)]);
    return {from, std::move(out)};
}

FunctionTable random_bijection(std::mt19937_64& rng,
                               const FiniteDomain& from,
                               const FiniteDomain& to)
{
    if (from.size() != to.size())
        throw std::invalid_argument{"bijection needs equal sizes: " +
                                    from.name() + " vs " + to.name()};
    std::vector<std::size_t> perm(to.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Value> out;
    out.reserve(from.size());
    for (auto p : perm)
        out.push_back(to[p]);
    return {from, std::move(out)};
}

bool probes_are_exhaustive(const FiniteDomain& a,
                           const FiniteDomain& b,
                           std::size_t inputs)
{
    auto n = function_count(a, b);
    return n != UINT64_MAX && inputs > 0 &&
           n <= exhaustive_probe_cap / inputs;
}

std::vector<FunctionTable> probe_functions(const FiniteDomain& a,
                                           const FiniteDomain& b,
                                           std::size_t inputs,
                                           std::uint64_t seed)
{
    if (probes_are_exhaustive(a, b, inputs))
        return all_functions(a, b);
    std::mt19937_64 rng{seed};
    std::vector<FunctionTable> out;
    out.reserve(sampled_probe_count);
    for (std::size_t i = 0; i < sampled_probe_count; ++i)
        out.push_back(random_function(rng, a, b));
    return out;
}

} // namespace optics
