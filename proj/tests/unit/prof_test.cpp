#include <doctest.h>

#include <oracles.hpp>

#include <optics/encode.hpp>
#include <optics/prof.hpp>

using namespace optics;

namespace {

Fn plus(std::int64_t k)
{
    return [k](const Value& v) { return Value::integer(v.as_int() + k); };
}

const Value hello = str("hello");

} // namespace

TEST_CASE("prof_first at the function arrow")
{
    auto over = prof_first().apply_as<Fn>(function_arrow(), plus(8));
    CHECK(over(pair(4_i, hello)) == pair(12_i, hello));
    CHECK(prof_first().family() == is_product());
}

TEST_CASE("operators of prebuilt profunctor optics")
{
    CHECK(get_operator(prof_first())(pair(4_i, hello)) == 4_i);
    CHECK(get_operator(prof_second())(pair(4_i, hello)) == hello);

    auto m = match_operator(prof_just());
    CHECK(m(Value::just(42_i)) == Value::right(42_i));
    CHECK(m(Value::nothing()) == Value::left(Value::nothing()));

    auto jj = prof_compose(prof_just(), prof_just());
    CHECK(match_operator(jj)(Value::just(Value::nothing())) ==
          Value::left(Value::just(Value::nothing())));
    CHECK(match_operator(jj)(Value::just(Value::just(42_i))) == Value::right(42_i));
    CHECK(build_operator(jj)(42_i) == Value::just(Value::just(42_i)));

    auto first_of_4 =
        prof_compose(prof_first(), prof_compose(prof_first(), prof_first()));
    auto s = pair(pair(pair(1_i, 2_i), str("hi")), 4_i);
    CHECK(first_of_4.apply_as<Fn>(function_arrow(), constant_fn(42_i))(s) ==
          pair(pair(pair(42_i, 2_i), str("hi")), 4_i));
}

TEST_CASE("operators beyond the family are refused")
{
    auto setter = prof_encoding<Setter>().encode(as_setter(first()));
    CHECK_THROWS_AS(get_operator(setter), unsupported_operator);
    CHECK_THROWS_AS(match_operator(setter), unsupported_operator);
    CHECK_THROWS_AS(build_operator(prof_first()), unsupported_operator);
    CHECK_THROWS_AS(get_operator(prof_just()), unsupported_operator);
    // the arrow still works for a setter
    CHECK(setter.apply_as<Fn>(function_arrow(), plus(1))(pair(1_i, hello)) ==
          pair(2_i, hello));
}

TEST_CASE("cross-family composite agrees with the Optional oracle")
{
    auto d = int_domain("D", 3);
    auto oracle_opt = compose(as_optional(second()), as_optional(just()));
    auto l = prof_compose(prof_second(), prof_just());
    CHECK(l.family() == is_affine());
    auto m = match_operator(l);
    for (const auto& s : product_domain(d, maybe_domain(d))) {
        CHECK(m(s) == to_value(oracle_opt.match(s)));
        CHECK(l.apply_as<Fn>(function_arrow(), plus(1))(s) ==
              map_optic(oracle_opt, plus(1))(s));
    }
}

TEST_CASE("getting refuses sum shapes")
{
    auto c2 = int_domain("C", 2);
    CHECK(getting().supports(pair_shape(c2)));
    CHECK_FALSE(getting().supports(sum_shape(c2)));
    CHECK_THROWS_AS(getting().enhance(sum_shape(c2), std::any{Getting{identity_fn()}}),
                    unsupported_shape);
    CHECK(matching().supports(affine_shape(c2, c2)));
    CHECK(reviewing().supports(maybe_pair_shape(c2)));
    CHECK_FALSE(reviewing().supports(pair_shape(c2)));
}

TEST_CASE("iso and profunctor forms convert both ways")
{
    auto iso = concrete_to_iso(first());
    auto p = iso_to_prof(iso);
    CHECK(get_operator(p)(pair(4_i, hello)) == 4_i);
    auto back = prof_to_iso(prof_first());
    CHECK(iso_map_optic(back, plus(8))(pair(4_i, hello)) == pair(12_i, hello));

    auto d = int_domain("D", 3);
    auto sig = Signature{product_domain(d, d), d, d};
    CHECK(observe_prof(iso_to_prof(prof_to_iso(prof_first())), prof_first(), sig));
    CHECK_FALSE(observe_prof(prof_first(), prof_second(), sig));
}

TEST_CASE("dimap and identity")
{
    auto l = prof_dimap(plus(1), plus(10));
    CHECK(l.apply_as<Fn>(function_arrow(), plus(100))(0_i) == 111_i);
    CHECK(prof_identity().apply_as<Fn>(function_arrow(), plus(5))(1_i) == 6_i);
}
