#pragma once

#include <optics/laws/report.hpp>

#include <cstdint>
#include <vector>

/// Whole-library suites: each runs one group of laws over every family,
/// with report names of the form `law[instance]`.
namespace optics::laws {

/// Well-behavedness of generated lawful optics and of the canonical optics.
std::vector<LawReport> check_concrete_suite(std::size_t samples,
                                            std::uint64_t seed);

/// Optic-family axioms for the six concrete families, isomorphism optics
/// over every functor family, and profunctor optics.
std::vector<LawReport> check_family_axioms(std::size_t samples,
                                           std::uint64_t seed);

/// Morphism laws for every conversion between representations.
std::vector<LawReport> check_conversion_morphisms(std::size_t samples,
                                                  std::uint64_t seed);

/// Enhancing laws for the function arrow, Getting, Matching, Reviewing,
/// lenses and the isomorphism-optic capability of every functor family.
std::vector<LawReport> check_enhancing_suite(std::uint64_t seed);

/// Enhanceable laws of `enhance_iso` for every functor family.
std::vector<LawReport> check_enhanceable_suite(std::uint64_t seed);

/// Functorization laws for every concrete family.
std::vector<LawReport> check_functorization_suite(std::uint64_t seed);

/// Normal form, retraction and endomorphism rigidity for every family.
std::vector<LawReport> check_iso_suite(std::size_t samples, std::uint64_t seed);

/// Both round trips between isomorphism and profunctor optics, for
/// `samples` generated optics per functor family and the prebuilt optics.
std::vector<LawReport> check_representation_theorem(std::size_t samples,
                                                    std::uint64_t seed);

/// Both round trips between concrete and isomorphism optics for generated
/// lawful optics of every family.
std::vector<LawReport> check_derivation_theorem(std::size_t samples,
                                                std::uint64_t seed);

/// decode . encode and encode . decode for every family.
std::vector<LawReport> check_encoding_round_trips(std::size_t samples,
                                                  std::uint64_t seed);

/// Lawful composites stay lawful, multi_map/dimap are functorial, and the
/// family lattice is a join semilattice.
std::vector<LawReport> check_structural_suite(std::size_t samples,
                                              std::uint64_t seed);

/// `IsoOptic (phi . alpha) beta = IsoOptic alpha (beta . phi)` for every
/// registered natural transformation.
std::vector<LawReport> check_natural_slides(std::size_t samples,
                                            std::uint64_t seed);

/// Adapter functorizations are invertible on payloads; lawful lenses and
/// achromatic lenses convert through Pair and MaybePair shapes.
std::vector<LawReport> check_functorization_witnesses(std::size_t samples,
                                                      std::uint64_t seed);

/// Cross-family profunctor composites agree with the Optional oracle, and
/// iso_to_prof commutes with profunctor optics.
std::vector<LawReport> check_profunctor_agreement(std::size_t samples,
                                                  std::uint64_t seed);

/// Negative controls: reports pass when the planted defect is detected.
std::vector<LawReport> check_negative_controls();

} // namespace optics::laws
