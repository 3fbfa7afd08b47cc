#include <optics/observe.hpp>

namespace optics {

std::string Counterexample::to_string() const
{
    return segment + " at " + input + ": " + lhs + " vs " + rhs;
}

Observation observe_functions(const Fn& l, const Fn& r,
                              const FiniteDomain& dom, const char* segment)
{
    Observation obs;
    for (const auto& x : dom)
        if (!detail::record(obs, segment, x.to_string(),
                            guarded([&] { return l(x); }),
                            guarded([&] { return r(x); })))
            break;
    return obs;
}

} // namespace optics
