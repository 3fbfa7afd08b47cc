#pragma once

#include <optics/laws/report.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

/// The law catalogue and the suite runner.
///
/// A law id is a report name without its `[instance]` suffix. Every id in
/// the catalogue is claimed by exactly one group; run_suite reports a
/// failing `coverage.*` law when that does not hold or when a group emits
/// an id it did not claim.
namespace optics::laws {

struct SuiteOptions
{
    std::size_t samples = 100;     // per family-law / morphism instance
    std::size_t round_trips = 100; // per family, representation and encoding
    std::size_t derivations = 200; // per concrete family
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

struct LawGroup
{
    std::string name;
    std::vector<std::string> claims;
    std::function<std::vector<LawReport>(const SuiteOptions&)> run;
};

/// `lens.get_put[first]` -> `lens.get_put`.
std::string_view law_id(std::string_view report_name) noexcept;

/// Every law the library checks, sorted.
const std::vector<std::string>& law_catalogue();

/// The library's checkers, one group per theme.
const std::vector<LawGroup>& standard_groups();

struct Coverage
{
    std::vector<std::string> unclaimed; // in the catalogue, claimed by none
    std::vector<std::string> duplicated; // claimed by more than one group
    std::vector<std::string> unknown;   // claimed but not in the catalogue

    bool complete() const noexcept
    {
        return unclaimed.empty() && duplicated.empty() && unknown.empty();
    }
};

Coverage coverage(const std::vector<LawGroup>& groups,
                  const std::vector<std::string>& catalogue = law_catalogue());

/// Runs the groups (concurrently when `opts.threads > 1`) and returns the
/// reports sorted by name, followed by coverage failures if any.
std::vector<LawReport> run_suite(const std::vector<LawGroup>& groups,
                                 const SuiteOptions& opts,
                                 const std::vector<std::string>& catalogue =
                                     law_catalogue());

} // namespace optics::laws
