#include <doctest.h>

#include <oracles.hpp>

#include <optics/encode.hpp>
#include <optics/laws/generators.hpp>

using namespace optics;

namespace {

const FiniteDomain c2 = int_domain("C", 2);
const FiniteDomain d3 = int_domain("D", 3);
const Value hello = str("hello");

Fn plus(std::int64_t k)
{
    return [k](const Value& v) { return Value::integer(v.as_int() + k); };
}

} // namespace

TEST_CASE("each family lifts through its functor family")
{
    CHECK(functorize<Adapter>().family == id_only());
    CHECK(functorize<Lens>().family == is_product());
    CHECK(functorize<Prism>().family == is_sum());
    CHECK(functorize<Setter>().family == any_functor());
    CHECK(functorize<AchLens>().family == is_pointed_product());
    CHECK(functorize<Optional>().family == is_affine());
    for (auto tag : all_family_tags)
        CHECK(functor_family_of(tag).name() != std::string{});
    CHECK(functor_family_of(FamilyTag::lens) == is_product());
}

TEST_CASE("enhancement operators at concrete shapes")
{
    auto lens = functorize<Lens>().enhance_op(pair_shape(c2));
    CHECK(lens.get(pair(1_i, 7_i)) == 7_i);
    CHECK(lens.put(9_i, pair(1_i, 7_i)) == pair(1_i, 9_i));

    auto setter = functorize<Setter>().enhance_op(id_shape());
    CHECK(setter.over(plus(1))(Value::id(4_i)) == Value::id(5_i));

    auto ach = functorize<AchLens>().enhance_op(maybe_pair_shape(c2));
    CHECK(ach.create(5_i) == pair(Value::nothing(), 5_i));
    CHECK(ach.get(pair(Value::just(1_i), 5_i)) == 5_i);

    auto prism = functorize<Prism>().enhance_op(sum_shape(c2));
    CHECK(prism.build(3_i) == Value::right(3_i));
    CHECK(to_value(prism.match(Value::left(1_i))).is(Value::Kind::left));

    auto adapter = functorize<Adapter>().enhance_op(id_shape());
    CHECK(adapter.fwd(Value::id(2_i)) == 2_i);
    CHECK(adapter.bwd(2_i) == Value::id(2_i));

    CHECK_THROWS_AS(unfunctorize<Lens>(enhance_iso(is_sum(), sum_shape(c2))),
                    family_mismatch);
}

TEST_CASE("concrete_to_iso forward and backward")
{
    auto l = concrete_to_iso(first());
    CHECK(l.forward()(pair(4_i, hello)) == pair(pair(4_i, hello), 4_i));
    CHECK(l.backward()(pair(pair(4_i, hello), 12_i)) == pair(12_i, hello));

    auto p = concrete_to_iso(just());
    CHECK(p.forward()(Value::nothing()) == Value::left(Value::nothing()));
    CHECK(p.forward()(Value::just(42_i)) == Value::right(42_i));
    CHECK(p.backward()(Value::right(42_i)) == Value::just(42_i));

    // an adapter needs no shape at all
    auto swap = Adapter{swap_fn(), swap_fn()};
    auto a = concrete_to_iso(swap);
    CHECK(a.shape() == id_shape());
    CHECK(iso_map_optic(a, identity_fn())(pair(1_i, 2_i)) == pair(1_i, 2_i));
}

TEST_CASE("unfunctorize . concrete_to_iso on the canonical optics")
{
    auto l = unfunctorize<Lens>(concrete_to_iso(first()));
    CHECK(l.get(pair(4_i, hello)) == 4_i);
    CHECK(l.put(12_i, pair(4_i, hello)) == pair(12_i, hello));

    auto jj = unfunctorize<Prism>(concrete_to_iso(compose(just(), just())));
    CHECK(jj.build(42_i) == Value::just(Value::just(42_i)));
    CHECK(to_value(jj.match(Value::just(Value::nothing()))) ==
          Value::left(Value::just(Value::nothing())));
}

TEST_CASE("profunctor encoding round trips")
{
    auto enc = prof_encoding<Lens>();
    auto back = enc.decode(enc.encode(first()));
    CHECK(back.get(pair(4_i, hello)) == 4_i);
    CHECK(back.put(12_i, pair(4_i, hello)) == pair(12_i, hello));

    auto penc = prof_encoding<Prism>();
    auto just_back = penc.decode(penc.encode(just()));
    CHECK(to_value(just_back.match(Value::nothing())) == Value::left(Value::nothing()));

    auto oenc = prof_encoding<Optional>();
    auto opt = compose(as_optional(second()), as_optional(just()));
    auto opt_back = oenc.decode(oenc.encode(opt));
    for (const auto& s : product_domain(d3, maybe_domain(d3))) {
        CHECK(to_value(opt_back.match(s)) == to_value(opt.match(s)));
        for (const auto& b : d3)
            CHECK(opt_back.put(b, s) == opt.put(b, s));
    }

    auto senc = prof_encoding<Setter>();
    auto set_back = senc.decode(senc.encode(as_setter(first())));
    CHECK(set_back.over(plus(1))(pair(1_i, hello)) == pair(2_i, hello));
}

TEST_CASE("generated lawful achromatic lenses survive the round trip")
{
    auto r = int_domain("R", 2);
    auto s = int_domain("S", 6);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto o = laws::gen_lawful_achlens(seed, s, r, d3);
        auto back = unfunctorize<AchLens>(concrete_to_iso(o));
        for (const auto& b : d3)
            CHECK(back.create(b) == o.create(b));
        for (const auto& x : s) {
            CHECK(back.get(x) == o.get(x));
            for (const auto& b : d3)
                CHECK(back.put(b, x) == o.put(b, x));
        }
    }
}

TEST_CASE("family capability lifts a lens through a pair")
{
    auto cap = family_capability<Lens>("Lens");
    auto lifted = std::any_cast<Lens>(cap.enhance(pair_shape(c2), std::any{first()}));
    auto x = pair(0_i, pair(4_i, hello));
    CHECK(lifted.get(x) == 4_i);
    CHECK(lifted.put(5_i, x) == pair(0_i, pair(5_i, hello)));
    CHECK_THROWS_AS(cap.enhance(sum_shape(c2), std::any{first()}), unsupported_shape);
}
