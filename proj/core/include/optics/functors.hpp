#pragma once

#include <optics/domain.hpp>
#include <optics/value.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

/// Container shapes: runtime witnesses for one-parameter containers.
///
/// A shape knows how to map over its payloads and optionally carries
/// capability records that decompose a payload `F a`:
///
///   identity  F a ≅ a
///   product   F a ≅ (F (), a)
///   sum       F a ≅ residual + a      (residual usable at any element type)
///   affine    F a ≅ residual + (F (), a)
///   point     a distinguished F ()    (requires product)
///
/// Implied capabilities are filled in at construction: identity gives
/// product, sum and point; product or sum gives affine.
namespace optics {

struct IdentityCapability
{
    Fn unwrap; // F a -> a
    Fn wrap;   // a -> F a
    bool lawful = true;
};

struct ProductCapability
{
    Fn to_product;   // F a -> (F (), a)
    Fn from_product; // (F (), a) -> F a
    bool lawful = true;
};

struct SumCapability
{
    Fn to_sum;   // F a -> Left residual | Right a
    Fn from_sum; // inverse
    bool lawful = true;
};

struct AffineCapability
{
    Fn to_affine;   // F a -> Left residual | Right (F (), a)
    Fn from_affine; // inverse
    bool lawful = true;
};

struct PointCapability
{
    Value unit; // the distinguished F ()
    bool lawful = true;
};

/// Lists every `F a` for `a` drawn from the given elements.
using Enumerator =
    std::function<std::vector<Value>(const std::vector<Value>&)>;

struct ShapeSpec
{
    std::string name;
    std::function<Fn(const Fn&)> map;
    std::optional<IdentityCapability> identity;
    std::optional<ProductCapability> product;
    std::optional<SumCapability> sum;
    std::optional<AffineCapability> affine;
    std::optional<PointCapability> point;
    Enumerator enumerate; // empty when payloads are not enumerable
};

class Shape
{
public:
    /// Throws std::invalid_argument when `map` is missing or a point is
    /// given without a product capability.
    explicit Shape(ShapeSpec spec);

    const std::string& name() const noexcept { return impl_->name; }

    Fn map(const Fn& f) const { return impl_->map(f); }

    const IdentityCapability* identity() const { return get(impl_->identity); }
    const ProductCapability* product() const { return get(impl_->product); }
    const SumCapability* sum() const { return get(impl_->sum); }
    const AffineCapability* affine() const { return get(impl_->affine); }
    const PointCapability* point() const { return get(impl_->point); }

    bool enumerable() const noexcept { return bool(impl_->enumerate); }
    /// Throws std::logic_error for non-enumerable shapes.
    std::vector<Value> enumerate(const std::vector<Value>& elements) const;

    const ShapeSpec& spec() const noexcept { return *impl_; }

    friend bool operator==(const Shape& a, const Shape& b)
    {
        return a.impl_ == b.impl_ || a.name() == b.name();
    }

private:
    template <class T>
    static const T* get(const std::optional<T>& o)
    {
        return o ? &*o : nullptr;
    }

    std::shared_ptr<const ShapeSpec> impl_;
};

/// Payloads `Id a`.
Shape id_shape();
/// Payloads `Compose (f (g a))`; capabilities follow from both sides.
Shape compose_shapes(const Shape& f, const Shape& g);
/// The (C, -) container: payloads `(c, a)`.
Shape pair_shape(std::optional<FiniteDomain> residual = std::nullopt);
/// The (C + -) container: payloads `Left c | Right a`.
Shape sum_shape(std::optional<FiniteDomain> residual = std::nullopt);
/// The (Maybe C, -) container, pointed at `(Nothing, ())`.
Shape maybe_pair_shape(std::optional<FiniteDomain> residual = std::nullopt);
/// Continuations `(a -> b) -> t`; payloads are function values taking a
/// function value.
Shape cps_shape();
/// The (M + (C, -)) container: payloads `Left m | Right (c, a)`.
Shape affine_shape(std::optional<FiniteDomain> miss = std::nullopt,
                   std::optional<FiniteDomain> context = std::nullopt);

/// Which capability a functor family demands of its members.
enum class Requirement
{
    any,
    identity,
    product,
    pointed_product,
    sum,
    affine,
};

/// A family of shapes closed under `id_shape` and `compose_shapes`.
class FunctorFamily
{
public:
    explicit FunctorFamily(Requirement r) noexcept
        : req_{r}
    {}

    Requirement requirement() const noexcept { return req_; }
    const char* name() const noexcept;
    bool member(const Shape& shape) const;

    friend bool operator==(FunctorFamily, FunctorFamily) = default;

private:
    Requirement req_;
};

inline FunctorFamily any_functor() { return FunctorFamily{Requirement::any}; }
inline FunctorFamily id_only() { return FunctorFamily{Requirement::identity}; }
inline FunctorFamily is_product()
{
    return FunctorFamily{Requirement::product};
}
inline FunctorFamily is_pointed_product()
{
    return FunctorFamily{Requirement::pointed_product};
}
inline FunctorFamily is_sum() { return FunctorFamily{Requirement::sum}; }
inline FunctorFamily is_affine() { return FunctorFamily{Requirement::affine}; }

std::vector<FunctorFamily> all_functor_families();

/// Every member of `inner` is a member of `outer`.
bool family_includes(FunctorFamily outer, FunctorFamily inner) noexcept;
/// Smallest registered family including both.
FunctorFamily join(FunctorFamily a, FunctorFamily b) noexcept;

/// A payload conversion `F a -> G a` that never inspects the element.
struct NaturalTransformation
{
    std::string name;
    Shape from;
    Shape to;
    Fn component;
};

/// Standard shapes over residual domain `residual`, including composites.
std::vector<Shape> registered_shapes(const FiniteDomain& residual);

/// Standard natural transformations between shapes over `residual`
/// (which needs at least two elements).
std::vector<NaturalTransformation>
registered_naturals(const FiniteDomain& residual);

} // namespace optics
