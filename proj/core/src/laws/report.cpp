#include <optics/laws/report.hpp>

#include <json.hpp>

#include <ostream>

namespace optics::laws {

std::string_view to_string(LawStatus s) noexcept
{
    switch (s) {
    case LawStatus::pass: return "PASS";
    case LawStatus::fail: return "FAIL";
    case LawStatus::inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

LawRun::LawRun(std::string name, CheckMode mode, std::uint64_t cap)
    : name_{std::move(name)}
    , mode_{mode}
    , cap_{cap}
{}

bool LawRun::more() const noexcept
{
    return failures_.empty() && !capped_;
}

bool LawRun::check(const Observation& obs, const std::string& context)
{
    cases_ += obs.cases;
    if (!obs.exhaustive)
        sampled_ = true;
    if (cases_ >= cap_)
        capped_ = true;
    if (obs.equal)
        return true;
    auto ce = obs.counterexample.value_or(Counterexample{"?", "", "", ""});
    if (!context.empty())
        ce.input = context + "; " + ce.input;
    failures_.push_back(std::move(ce));
    return false;
}

bool LawRun::check(bool ok, Counterexample counterexample)
{
    if (++cases_ >= cap_)
        capped_ = true;
    if (!ok)
        failures_.push_back(std::move(counterexample));
    return ok;
}

LawReport LawRun::finish() const
{
    LawReport r{name_, LawStatus::pass, cases_, failures_};
    if (!failures_.empty())
        r.status = LawStatus::fail;
    else if (mode_ == CheckMode::exhaustive && (capped_ || sampled_))
        r.status = LawStatus::inconclusive;
    return r;
}

LawReport merge(std::string name, const std::vector<LawReport>& parts)
{
    LawReport r{std::move(name), LawStatus::pass, 0, {}};
    for (const auto& p : parts) {
        r.cases += p.cases;
        if (p.status == LawStatus::fail) {
            if (r.failures.empty())
                r.failures = p.failures;
            r.status = LawStatus::fail;
        } else if (p.status == LawStatus::inconclusive &&
                   r.status == LawStatus::pass) {
            r.status = LawStatus::inconclusive;
        }
    }
    return r;
}

void write_jsonl(std::ostream& out, const std::vector<LawReport>& reports)
{
    for (const auto& r : reports) {
        nlohmann::json j{{"name", r.name},
                         {"status", to_string(r.status)},
                         {"cases", r.cases},
                         {"counterexample", nullptr}};
        if (!r.failures.empty()) {
            const auto& ce = r.failures.front();
            j["counterexample"] = {{"segment", ce.segment},
                                   {"input", ce.input},
                                   {"expected", ce.lhs},
                                   {"actual", ce.rhs}};
        }
        out << j.dump() << '\n';
    }
}

} // namespace optics::laws
