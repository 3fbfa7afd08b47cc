#include <doctest.h>

#include <oracles.hpp>

#include <optics/encode.hpp>
#include <optics/iso.hpp>
#include <optics/laws/generators.hpp>

#include <random>

using namespace optics;

namespace {

const FiniteDomain d3 = int_domain("D", 3);
const FiniteDomain c2 = int_domain("C", 2);

Fn plus(std::int64_t k)
{
    return [k](const Value& v) { return Value::integer(v.as_int() + k); };
}

} // namespace

TEST_CASE("iso_inj acts as g . h . f")
{
    auto f = [](const Value& v) { return Value::integer((v.as_int() + 1) % 3); };
    auto g = [](const Value& v) { return Value::integer((v.as_int() * 2) % 3); };
    auto l = iso_inj(f, g);
    CHECK(l.shape() == id_shape());
    CHECK_FALSE(l.family().has_value());
    for (const auto& row : oracle::tables(d3, d3)) {
        auto h = oracle::table_fn(d3, row);
        CHECK(oracle::same(iso_map_optic(l, h), compose_fn(g, compose_fn(h, f)), d3));
    }
}

TEST_CASE("the lens first as an isomorphism optic")
{
    auto l = concrete_to_iso(first());
    auto s = pair(4_i, str("hello"));
    CHECK(iso_map_optic(l, constant_fn(12_i))(s) == pair(12_i, str("hello")));
    CHECK(iso_map_optic(l, plus(8))(s) == pair(12_i, str("hello")));
    CHECK(is_product().member(l.shape()));
}

TEST_CASE("normal form is observationally the optic itself")
{
    std::mt19937_64 rng{3};
    for (const auto& shape : {pair_shape(c2), sum_shape(c2), maybe_pair_shape(c2),
                              compose_shapes(pair_shape(c2), sum_shape(c2))}) {
        CAPTURE(shape.name());
        auto l = laws::random_iso(rng, is_affine().member(shape)
                                           ? std::optional{is_affine()}
                                           : std::nullopt,
                                  shape, laws::simple(d3, c2));
        auto n = normal_form(l);
        CHECK(observational_eq(n, l, Signature{d3, c2, c2}));
    }
}

TEST_CASE("distinct lawful lenses stay distinguishable")
{
    auto s = product_domain(d3, d3);
    Signature sig{s, d3, d3};
    auto a = concrete_to_iso(first());
    auto b = concrete_to_iso(second());
    auto obs = observe_iso(a, b, sig);
    CHECK_FALSE(obs.equal);
    REQUIRE(obs.counterexample);
    CHECK(obs.counterexample->segment == "map");
    CHECK(observational_eq(a, concrete_to_iso(first()), sig));
}

TEST_CASE("composition through two pairs")
{
    auto l = iso_compose(concrete_to_iso(first()), concrete_to_iso(second()));
    auto s = pair(pair(1_i, 2_i), 3_i);
    CHECK(iso_map_optic(l, plus(40))(s) == pair(pair(1_i, 42_i), 3_i));
    CHECK(l.shape().product() != nullptr);
}

TEST_CASE("enhance_to_arrow recovers the concrete optic")
{
    auto lens = enhance_to_arrow<Lens>(concrete_to_iso(first()),
                                       functorize<Lens>().enhance_op);
    CHECK(lens.get(pair(4_i, str("hello"))) == 4_i);
    CHECK(lens.put(12_i, pair(4_i, str("hello"))) == pair(12_i, str("hello")));

    auto prism = enhance_to_arrow<Prism>(concrete_to_iso(just()),
                                         functorize<Prism>().enhance_op);
    CHECK(to_value(prism.match(Value::just(42_i))) == Value::right(42_i));
    CHECK(prism.build(42_i) == Value::just(42_i));
}

TEST_CASE("family membership is enforced")
{
    CHECK_THROWS_AS(enhance_iso(is_product(), sum_shape(c2)), family_mismatch);
    CHECK_THROWS_AS(IsoOptic(is_sum(), pair_shape(c2), identity_fn(), identity_fn()),
                    family_mismatch);
    auto p = enhance_iso(is_product(), pair_shape(c2));
    auto s = enhance_iso(is_sum(), sum_shape(c2));
    CHECK_THROWS_AS(iso_compose(p, s), family_mismatch);
    CHECK(iso_compose(p, p.in_family(is_product())).family() == is_product());
}

TEST_CASE("enhance_iso maps through the shape")
{
    auto shape = pair_shape(c2);
    auto l = enhance_iso(is_product(), shape);
    for (const auto& x : shape.enumerate(d3.elements()))
        CHECK(iso_map_optic(l, plus(1))(x) == shape.map(plus(1))(x));
}
