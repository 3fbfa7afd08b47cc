#pragma once

#include <optics/observe.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace optics::laws {

enum class LawStatus
{
    pass,
    fail,
    inconclusive,
};

std::string_view to_string(LawStatus s) noexcept;

struct LawReport
{
    std::string name;
    LawStatus status = LawStatus::pass;
    std::uint64_t cases = 0;
    std::vector<Counterexample> failures; // first in enumeration order

    bool passed() const noexcept { return status == LawStatus::pass; }
};

/// Evaluation cap per law.
inline constexpr std::uint64_t law_evaluation_cap = 100'000;

enum class CheckMode
{
    exhaustive, // hitting the cap makes the report inconclusive
    budgeted,   // hitting the cap just stops the check
};

/// Accumulates cases for one law. Checkers call `more()` before each
/// case and `check(...)` with its outcome.
class LawRun
{
public:
    explicit LawRun(std::string name, CheckMode mode = CheckMode::exhaustive,
                    std::uint64_t cap = law_evaluation_cap);

    /// False once a failure was recorded or the cap was reached.
    bool more() const noexcept;

    /// Records an observation; `context` prefixes the counterexample input.
    bool check(const Observation& obs, const std::string& context = {});
    bool check(bool ok, Counterexample counterexample);

    /// Observations that were not exhaustive make an exhaustive-mode law
    /// inconclusive, as does reaching the cap.
    LawReport finish() const;

private:
    std::string name_;
    CheckMode mode_;
    std::uint64_t cap_;
    std::uint64_t cases_ = 0;
    bool capped_ = false;
    bool sampled_ = false;
    std::vector<Counterexample> failures_;
};

/// Combines reports for the same law (cases add up, first failure wins).
LawReport merge(std::string name, const std::vector<LawReport>& parts);

/// One JSON object per line: name, status, cases, counterexample.
void write_jsonl(std::ostream& out, const std::vector<LawReport>& reports);

} // namespace optics::laws
