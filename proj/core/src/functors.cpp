#include <optics/functors.hpp>

#include <stdexcept>

namespace optics {

namespace {

using K = Value::Kind;

std::string residual_name(const std::optional<FiniteDomain>& d)
{
    return d ? d->name() : "_";
}

Enumerator pairs_with(std::vector<Value> firsts)
{
    return [firsts = std::move(firsts)](const std::vector<Value>& xs) {
        std::vector<Value> out;
        out.reserve(firsts.size() * xs.size());
        for (const auto& c : firsts)
            for (const auto& x : xs)
                out.push_back(Value::pair(c, x));
        return out;
    };
}

void derive_capabilities(ShapeSpec& s)
{
    if (s.identity) {
        auto id = *s.identity;
        if (!s.product)
            s.product = ProductCapability{
                [id](const Value& fa) {
                    return Value::pair(id.wrap(Value::unit()), id.unwrap(fa));
                },
                [id](const Value& p) { return id.wrap(p.second()); },
                id.lawful};
        if (!s.sum)
            s.sum = SumCapability{
                [id](const Value& fa) { return Value::right(id.unwrap(fa)); },
                [id](const Value& e) {
                    return e.is(K::right) ? id.wrap(e.inner()) : e.inner();
                },
                id.lawful};
        if (!s.point)
            s.point = PointCapability{id.wrap(Value::unit()), id.lawful};
    }
    if (s.product && !s.affine) {
        auto p = *s.product;
        s.affine = AffineCapability{
            [p](const Value& fa) { return Value::right(p.to_product(fa)); },
            [p](const Value& e) {
                if (!e.is(K::right))
                    throw bad_value_access{"product shape has no residual: " +
                                           e.to_string()};
                return p.from_product(e.inner());
            },
            p.lawful};
    }
    if (s.sum && !s.affine) {
        auto sm = *s.sum;
        s.affine = AffineCapability{
            [sm](const Value& fa) {
                auto e = sm.to_sum(fa);
                if (e.is(K::left))
                    return e;
                auto ctx = sm.from_sum(Value::right(Value::unit()));
                return Value::right(Value::pair(ctx, e.inner()));
            },
            [sm](const Value& e) {
                if (e.is(K::left))
                    return e.inner();
                return sm.from_sum(Value::right(e.inner().second()));
            },
            sm.lawful};
    }
}

} // namespace

Shape::Shape(ShapeSpec spec)
{
    if (!spec.map)
        throw std::invalid_argument{"shape '" + spec.name + "' has no map"};
    if (spec.point && !spec.product && !spec.identity)
        throw std::invalid_argument{"shape '" + spec.name +
                                    "' has a point but no product"};
    derive_capabilities(spec);
    impl_ = std::make_shared<const ShapeSpec>(std::move(spec));
}

std::vector<Value> Shape::enumerate(const std::vector<Value>& elements) const
{
    if (!impl_->enumerate)
        throw std::logic_error{"shape '" + name() + "' is not enumerable"};
    return impl_->enumerate(elements);
}

Shape id_shape()
{
    ShapeSpec s;
    s.name = "Id";
    s.map = [](const Fn& f) -> Fn {
        return [f](const Value& v) { return Value::id(f(v.inner())); };
    };
    s.identity = IdentityCapability{[](const Value& v) { return v.inner(); },
                                    [](const Value& v) { return Value::id(v); }};
    s.enumerate = [](const std::vector<Value>& xs) {
        std::vector<Value> out;
        out.reserve(xs.size());
        for (const auto& x : xs)
            out.push_back(Value::id(x));
        return out;
    };
    return Shape{std::move(s)};
}

Shape compose_shapes(const Shape& f, const Shape& g)
{
    ShapeSpec s;
    s.name = "Compose(" + f.name() + "," + g.name() + ")";
    s.map = [f, g](const Fn& h) -> Fn {
        auto inner = f.map(g.map(h));
        return [inner](const Value& v) {
            return Value::compose(inner(v.inner()));
        };
    };

    if (f.identity() && g.identity()) {
        auto fi = *f.identity(), gi = *g.identity();
        s.identity = IdentityCapability{
            [fi, gi](const Value& v) { return gi.unwrap(fi.unwrap(v.inner())); },
            [fi, gi](const Value& a) {
                return Value::compose(fi.wrap(gi.wrap(a)));
            },
            fi.lawful && gi.lawful};
    }

    if (f.product() && g.product()) {
        auto fp = *f.product(), gp = *g.product();
        s.product = ProductCapability{
            [fp, gp](const Value& v) {
                auto outer = fp.to_product(v.inner()); // (f1, g x)
                auto inner = gp.to_product(outer.second()); // (g1, x)
                auto fg1 = fp.from_product(Value::pair(outer.first(),
                                                       inner.first()));
                return Value::pair(Value::compose(fg1), inner.second());
            },
            [fp, gp](const Value& p) {
                auto split = fp.to_product(p.first().inner()); // (f1, g1)
                auto gx = gp.from_product(Value::pair(split.second(),
                                                      p.second()));
                return Value::compose(
                    fp.from_product(Value::pair(split.first(), gx)));
            },
            fp.lawful && gp.lawful};
        if (f.point() && g.point()) {
            auto unit = Value::compose(fp.from_product(
                Value::pair(f.point()->unit, g.point()->unit)));
            s.point = PointCapability{unit,
                                      f.point()->lawful && g.point()->lawful};
        }
    }

    if (f.sum() && g.sum()) {
        auto fs = *f.sum(), gs = *g.sum();
        s.sum = SumCapability{
            [fs, gs](const Value& v) {
                auto outer = fs.to_sum(v.inner());
                if (outer.is(K::left))
                    return Value::left(Value::compose(outer.inner()));
                auto inner = gs.to_sum(outer.inner());
                if (inner.is(K::left))
                    return Value::left(Value::compose(
                        fs.from_sum(Value::right(inner.inner()))));
                return inner;
            },
            [fs, gs](const Value& e) {
                if (e.is(K::left))
                    return e.inner();
                auto gx = gs.from_sum(Value::right(e.inner()));
                return Value::compose(fs.from_sum(Value::right(gx)));
            },
            fs.lawful && gs.lawful};
    }

    if (f.affine() && g.affine()) {
        auto fa = *f.affine(), ga = *g.affine();
        s.affine = AffineCapability{
            [fa, ga](const Value& v) {
                auto outer = fa.to_affine(v.inner());
                if (outer.is(K::left))
                    return Value::left(Value::compose(outer.inner()));
                const auto& f1 = outer.inner().first();
                auto inner = ga.to_affine(outer.inner().second());
                if (inner.is(K::left))
                    return Value::left(Value::compose(fa.from_affine(
                        Value::right(Value::pair(f1, inner.inner())))));
                auto fg1 = fa.from_affine(
                    Value::right(Value::pair(f1, inner.inner().first())));
                return Value::right(Value::pair(Value::compose(fg1),
                                                inner.inner().second()));
            },
            [fa, ga](const Value& e) {
                if (e.is(K::left))
                    return e.inner();
                auto split = fa.to_affine(e.inner().first().inner());
                if (!split.is(K::right))
                    throw bad_value_access{"composite context has no focus: " +
                                           e.to_string()};
                auto gx = ga.from_affine(Value::right(
                    Value::pair(split.inner().second(), e.inner().second())));
                return Value::compose(fa.from_affine(
                    Value::right(Value::pair(split.inner().first(), gx))));
            },
            fa.lawful && ga.lawful};
    }

    if (f.enumerable() && g.enumerable()) {
        s.enumerate = [f, g](const std::vector<Value>& xs) {
            auto nested = f.enumerate(g.enumerate(xs));
            for (auto& v : nested)
                v = Value::compose(v);
            return nested;
        };
    }
    return Shape{std::move(s)};
}

Shape pair_shape(std::optional<FiniteDomain> residual)
{
    ShapeSpec s;
    s.name = "Pair<" + residual_name(residual) + ">";
    s.map = [](const Fn& f) -> Fn {
        return [f](const Value& v) {
            return Value::pair(v.first(), f(v.second()));
        };
    };
    s.product = ProductCapability{
        [](const Value& v) {
            return Value::pair(Value::pair(v.first(), Value::unit()),
                               v.second());
        },
        [](const Value& p) {
            return Value::pair(p.first().first(), p.second());
        }};
    if (residual)
        s.enumerate = pairs_with(residual->elements());
    return Shape{std::move(s)};
}

Shape maybe_pair_shape(std::optional<FiniteDomain> residual)
{
    ShapeSpec s;
    s.name = "MaybePair<" + residual_name(residual) + ">";
    s.map = [](const Fn& f) -> Fn {
        return [f](const Value& v) {
            return Value::pair(v.first(), f(v.second()));
        };
    };
    s.product = ProductCapability{
        [](const Value& v) {
            return Value::pair(Value::pair(v.first(), Value::unit()),
                               v.second());
        },
        [](const Value& p) {
            return Value::pair(p.first().first(), p.second());
        }};
    s.point = PointCapability{Value::pair(Value::nothing(), Value::unit())};
    if (residual)
        s.enumerate = pairs_with(maybe_domain(*residual).elements());
    return Shape{std::move(s)};
}

Shape sum_shape(std::optional<FiniteDomain> residual)
{
    ShapeSpec s;
    s.name = "Sum<" + residual_name(residual) + ">";
    s.map = [](const Fn& f) -> Fn {
        return [f](const Value& v) {
            return v.is(K::right) ? Value::right(f(v.inner())) : v;
        };
    };
    s.sum = SumCapability{
        [](const Value& v) {
            return v.is(K::left) ? Value::left(v) : v;
        },
        [](const Value& e) {
            return e.is(K::left) ? e.inner() : e;
        }};
    if (residual) {
        s.enumerate = [cs = residual->elements()](const std::vector<Value>& xs) {
            std::vector<Value> out;
            for (const auto& c : cs)
                out.push_back(Value::left(c));
            for (const auto& x : xs)
                out.push_back(Value::right(x));
            return out;
        };
    }
    return Shape{std::move(s)};
}

Shape cps_shape()
{
    ShapeSpec s;
    s.name = "Cps";
    // map f k = \g -> k (g . f)
    s.map = [](const Fn& f) -> Fn {
        return [f](const Value& k) {
            return Value::function([f, k](const Value& g) {
                return k(Value::function(
                    [f, g](const Value& x) { return g(f(x)); }));
            });
        };
    };
    return Shape{std::move(s)};
}

Shape affine_shape(std::optional<FiniteDomain> miss,
                   std::optional<FiniteDomain> context)
{
    ShapeSpec s;
    s.name = "Affine<" + residual_name(miss) + "," + residual_name(context) +
             ">";
    s.map = [](const Fn& f) -> Fn {
        return [f](const Value& v) {
            if (v.is(K::left))
                return v;
            const auto& p = v.inner();
            return Value::right(Value::pair(p.first(), f(p.second())));
        };
    };
    s.affine = AffineCapability{
        [](const Value& v) {
            if (v.is(K::left))
                return Value::left(v);
            const auto& p = v.inner();
            auto ctx = Value::right(Value::pair(p.first(), Value::unit()));
            return Value::right(Value::pair(ctx, p.second()));
        },
        [](const Value& e) {
            if (e.is(K::left))
                return e.inner();
            const auto& ctx = e.inner().first();
            return Value::right(
                Value::pair(ctx.inner().first(), e.inner().second()));
        }};
    if (miss && context) {
        s.enumerate = [ms = miss->elements(), cs = context->elements()](
                          const std::vector<Value>& xs) {
            std::vector<Value> out;
            for (const auto& m : ms)
                out.push_back(Value::left(m));
            for (const auto& c : cs)
                for (const auto& x : xs)
                    out.push_back(Value::right(Value::pair(c, x)));
            return out;
        };
    }
    return Shape{std::move(s)};
}

const char* FunctorFamily::name() const noexcept
{
    switch (req_) {
    case Requirement::any: return "AnyFunctor";
    case Requirement::identity: return "IdOnly";
    case Requirement::product: return "IsProduct";
    case Requirement::pointed_product: return "IsPointedProduct";
    case Requirement::sum: return "IsSum";
    case Requirement::affine: return "IsAffine";
    }
    return "?";
}

bool FunctorFamily::member(const Shape& shape) const
{
    auto lawful = [](const auto* cap) { return cap && cap->lawful; };
    switch (req_) {
    case Requirement::any: return true;
    case Requirement::identity: return lawful(shape.identity());
    case Requirement::product: return lawful(shape.product());
    case Requirement::pointed_product:
        return lawful(shape.product()) && lawful(shape.point());
    case Requirement::sum: return lawful(shape.sum());
    case Requirement::affine: return lawful(shape.affine());
    }
    return false;
}

std::vector<FunctorFamily> all_functor_families()
{
    return {id_only(),
            is_pointed_product(),
            is_product(),
            is_sum(),
            is_affine(),
            any_functor()};
}

bool family_includes(FunctorFamily outer, FunctorFamily inner) noexcept
{
    using R = Requirement;
    auto o = outer.requirement(), i = inner.requirement();
    if (o == i || o == R::any || i == R::identity)
        return true;
    switch (o) {
    case R::affine:
        return i == R::product || i == R::pointed_product || i == R::sum;
    case R::product: return i == R::pointed_product;
    default: return false;
    }
}

FunctorFamily join(FunctorFamily a, FunctorFamily b) noexcept
{
    auto best = any_functor();
    for (auto c : all_functor_families())
        if (family_includes(c, a) && family_includes(c, b) &&
            family_includes(best, c))
            best = c;
    return best;
}

std::vector<Shape> registered_shapes(const FiniteDomain& residual)
{
    auto id = id_shape();
    auto pr = pair_shape(residual);
    auto sm = sum_shape(residual);
    auto mp = maybe_pair_shape(residual);
    auto af = affine_shape(residual, residual);
    return {id,
            pr,
            sm,
            mp,
            af,
            cps_shape(),
            compose_shapes(id, id),
            compose_shapes(id, pr),
            compose_shapes(pr, id),
            compose_shapes(pr, pr),
            compose_shapes(sm, sm),
            compose_shapes(mp, mp),
            compose_shapes(pr, sm),
            compose_shapes(sm, pr),
            compose_shapes(af, pr),
            compose_shapes(cps_shape(), pr)};
}

std::vector<NaturalTransformation>
registered_naturals(const FiniteDomain& residual)
{
    if (residual.size() < 2)
        throw std::invalid_argument{"registered_naturals needs a residual "
                                    "domain with at least two elements"};
    auto c0 = residual[0];
    // a non-trivial relabelling of residuals: swap the first two elements
    auto relabel = [residual](const Value& c) {
        auto i = residual.index_of(c);
        return i == 0 ? residual[1] : i == 1 ? residual[0] : c;
    };
    auto id = id_shape();
    auto pr = pair_shape(residual);
    auto sm = sum_shape(residual);
    auto mp = maybe_pair_shape(residual);
    auto pr_maybe = pair_shape(maybe_domain(residual));
    auto pr_pair = pair_shape(product_domain(residual, residual));
    auto af = affine_shape(residual, unit_domain());
    auto af_pair = affine_shape(residual, residual);

    return {
        {"Id=>Pair", id, pr,
         [c0](const Value& v) { return Value::pair(c0, v.inner()); }},
        {"Pair=>Id", pr, id,
         [](const Value& v) { return Value::id(v.second()); }},
        {"Pair=>Pair(relabel)", pr, pr,
         [relabel](const Value& v) {
             return Value::pair(relabel(v.first()), v.second());
         }},
        {"Pair=>MaybePair", pr, mp,
         [](const Value& v) {
             return Value::pair(Value::just(v.first()), v.second());
         }},
        {"MaybePair=>Pair<Maybe>", mp, pr_maybe,
         [](const Value& v) { return v; }},
        {"Id=>Sum", id, sm,
         [](const Value& v) { return Value::right(v.inner()); }},
        {"Sum=>Sum(relabel)", sm, sm,
         [relabel](const Value& v) {
             return v.is(K::left) ? Value::left(relabel(v.inner())) : v;
         }},
        {"Compose(Id,Pair)=>Pair", compose_shapes(id, pr), pr,
         [](const Value& v) { return v.inner().inner(); }},
        {"Pair=>Compose(Id,Pair)", pr, compose_shapes(id, pr),
         [](const Value& v) { return Value::compose(Value::id(v)); }},
        {"Compose(Pair,Pair)=>Pair<Pair>", compose_shapes(pr, pr), pr_pair,
         [](const Value& v) {
             const auto& outer = v.inner();
             return Value::pair(
                 Value::pair(outer.first(), outer.second().first()),
                 outer.second().second());
         }},
        {"Sum=>Affine", sm, af,
         [](const Value& v) {
             return v.is(K::left)
                        ? v
                        : Value::right(Value::pair(Value::unit(), v.inner()));
         }},
        {"Pair=>Affine", pr, af_pair,
         [](const Value& v) { return Value::right(v); }},
    };
}

} // namespace optics
