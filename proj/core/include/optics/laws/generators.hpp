#pragma once

#include <optics/domain.hpp>
#include <optics/families.hpp>
#include <optics/functors.hpp>
#include <optics/iso.hpp>

#include <cstdint>
#include <random>

/// Seeded generators of optics over finite domains.
///
/// `gen_lawful_*` build an optic from a random decomposition of the whole
/// (S ≅ R × A for lenses, S ≅ R + A for prisms, ...), so the result is
/// lawful by construction. `random_*` fill every component with arbitrary
/// tables: the result obeys the optic-family laws but usually no
/// well-behavedness law. Same seed, same optic.
namespace optics::laws {

/// Domains of an `Optic<A,B,S,T>`.
struct Carriers
{
    FiniteDomain s, t, a, b;
};

/// Simple carriers: T = S, B = A.
inline Carriers simple(const FiniteDomain& s, const FiniteDomain& a)
{
    return {s, s, a, a};
}

Adapter gen_lawful_adapter(std::uint64_t seed, const FiniteDomain& s,
                           const FiniteDomain& a);
/// Throws std::invalid_argument unless |S| = |R| * |A|.
Lens gen_lawful_lens(std::uint64_t seed, const FiniteDomain& s,
                     const FiniteDomain& r, const FiniteDomain& a);
/// Throws std::invalid_argument unless |S| = |R| + |A|.
Prism gen_lawful_prism(std::uint64_t seed, const FiniteDomain& s,
                       const FiniteDomain& r, const FiniteDomain& a);
/// Lens over S ≅ R × A whose `create` uses the residual `r[0]`.
AchLens gen_lawful_achlens(std::uint64_t seed, const FiniteDomain& s,
                           const FiniteDomain& r, const FiniteDomain& a);
/// Setter over `foci` positions: S ≅ R × A^foci. Throws on a size mismatch.
Setter gen_setter(std::uint64_t seed, const FiniteDomain& s,
                  const FiniteDomain& r, const FiniteDomain& a,
                  std::size_t foci = 2);
/// Setter acting through a shape's map, whole = payloads of `shape`.
Setter gen_setter(const Shape& shape);
/// Throws unless |S| = |M| + |R| * |A|.
Optional gen_lawful_optional(std::uint64_t seed, const FiniteDomain& s,
                             const FiniteDomain& m, const FiniteDomain& r,
                             const FiniteDomain& a);

Adapter random_adapter(std::mt19937_64& rng, const Carriers& c);
Lens random_lens(std::mt19937_64& rng, const Carriers& c);
Prism random_prism(std::mt19937_64& rng, const Carriers& c);
/// Any map from functions `a -> b` to functions `s -> t`.
Setter random_setter(std::mt19937_64& rng, const Carriers& c);
AchLens random_achlens(std::mt19937_64& rng, const Carriers& c);
Optional random_optional(std::mt19937_64& rng, const Carriers& c);
/// Random tables `s -> shape(a)` and `shape(b) -> t`; `shape` must be
/// enumerable.
IsoOptic random_iso(std::mt19937_64& rng, std::optional<FunctorFamily> family,
                    const Shape& shape, const Carriers& c);

/// The negative control: `put` ignores the new focus.
Lens unlawful_lens_ignoring_put();

/// Payloads `shape(a)` for `a` in `dom`, as a domain.
FiniteDomain payload_domain(const Shape& shape, const FiniteDomain& dom);

/// Uniform pick from a non-empty vector.
template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& xs)
{
    std::uniform_int_distribution<std::size_t> d{0, xs.size() - 1};
    return xs[d(rng)];
}

} // namespace optics::laws
