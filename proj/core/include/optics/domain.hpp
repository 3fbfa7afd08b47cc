#pragma once

#include <optics/value.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace optics {

/// A named, enumerated, non-empty set of distinct values.
class FiniteDomain
{
public:
    /// Throws std::invalid_argument on an empty list or duplicate elements.
    FiniteDomain(std::string name, std::vector<Value> elements);

    const std::string& name() const noexcept { return impl_->name; }
    std::size_t size() const noexcept { return impl_->elements.size(); }
    const std::vector<Value>& elements() const noexcept
    {
        return impl_->elements;
    }
    const Value& operator[](std::size_t i) const { return impl_->elements[i]; }
    auto begin() const noexcept { return impl_->elements.begin(); }
    auto end() const noexcept { return impl_->elements.end(); }

    bool contains(const Value& v) const;
    /// Position of `v`; throws std::out_of_range when absent.
    std::size_t index_of(const Value& v) const;

    friend bool operator==(const FiniteDomain& a, const FiniteDomain& b)
    {
        return a.impl_ == b.impl_ || a.elements() == b.elements();
    }

private:
    struct Impl
    {
        std::string name;
        std::vector<Value> elements;
        std::map<Value, std::size_t> index;
    };
    std::shared_ptr<const Impl> impl_;
};

/// {0, 1, ..., n-1} as integers.
FiniteDomain int_domain(std::string name, std::size_t n);
FiniteDomain product_domain(const FiniteDomain& a, const FiniteDomain& b);
/// Left-tagged elements of `a` followed by right-tagged elements of `b`.
FiniteDomain sum_domain(const FiniteDomain& a, const FiniteDomain& b);
FiniteDomain maybe_domain(const FiniteDomain& a);
FiniteDomain unit_domain();

/// A total function from a finite domain, stored as a lookup table.
class FunctionTable
{
public:
    FunctionTable(FiniteDomain from, std::vector<Value> outputs);

    /// Tabulates `f` over `from`.
    static FunctionTable tabulate(const FiniteDomain& from, const Fn& f);

    const FiniteDomain& domain() const noexcept { return from_; }
    const std::vector<Value>& outputs() const noexcept { return *outputs_; }

    /// Throws std::out_of_range outside the domain.
    Value operator()(const Value& v) const;
    Fn as_fn() const;
    /// The table wrapped as a function value (for continuation payloads).
    Value as_value() const;

    std::string to_string() const;

    friend bool operator==(const FunctionTable& a, const FunctionTable& b)
    {
        return a.outputs() == b.outputs();
    }

private:
    FiniteDomain from_;
    std::shared_ptr<const std::vector<Value>> outputs_;
};

/// Number of functions `from -> to`, saturating at UINT64_MAX.
std::uint64_t function_count(const FiniteDomain& from, const FiniteDomain& to);

/// Every function `from -> to` in lexicographic order of output tables.
/// Throws std::length_error when there are more than `limit`.
std::vector<FunctionTable> all_functions(const FiniteDomain& from,
                                         const FiniteDomain& to,
                                         std::uint64_t limit = 1'000'000);

FunctionTable random_function(std::mt19937_64& rng,
                              const FiniteDomain& from,
                              const FiniteDomain& to);

/// Uniformly random bijection `from -> to`; sizes must match.
FunctionTable random_bijection(std::mt19937_64& rng,
                               const FiniteDomain& from,
                               const FiniteDomain& to);

/// Evaluation cap under which probe sets are exhaustive.
inline constexpr std::uint64_t exhaustive_probe_cap = 100'000;
/// Number of probe tables sampled when exhaustion is too expensive.
inline constexpr std::size_t sampled_probe_count = 64;

/// Probe functions `a -> b` for observing optics evaluated at `inputs`
/// points: all functions when |b|^|a| * inputs <= exhaustive_probe_cap,
/// otherwise `sampled_probe_count` seeded random tables.
std::vector<FunctionTable> probe_functions(const FiniteDomain& a,
                                           const FiniteDomain& b,
                                           std::size_t inputs,
                                           std::uint64_t seed = 0x0971c5);

bool probes_are_exhaustive(const FiniteDomain& a,
                           const FiniteDomain& b,
                           std::size_t inputs);

} // namespace optics
