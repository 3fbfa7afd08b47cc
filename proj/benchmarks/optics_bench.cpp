#include <opticat/document.hpp>
#include <opticat/path.hpp>

#include <optics/encode.hpp>
#include <optics/laws/checks.hpp>
#include <optics/laws/generators.hpp>

#include <benchmark/benchmark.h>

using namespace optics;

namespace {

const Value nested = pair(pair(pair(1_i, 2_i), str("hi")), 4_i);

Lens first_of_4() { return compose(first(), compose(first(), first())); }

void concrete_put(benchmark::State& state)
{
    auto l = first_of_4();
    for (auto _ : state)
        benchmark::DoNotOptimize(l.put(42_i, nested));
}
BENCHMARK(concrete_put);

void iso_map(benchmark::State& state)
{
    auto over = iso_map_optic(concrete_to_iso(first_of_4()), constant_fn(42_i));
    for (auto _ : state)
        benchmark::DoNotOptimize(over(nested));
}
BENCHMARK(iso_map);

void prof_arrow(benchmark::State& state)
{
    auto l = prof_compose(prof_first(), prof_compose(prof_first(), prof_first()));
    auto over = l.apply_as<Fn>(function_arrow(), constant_fn(42_i));
    for (auto _ : state)
        benchmark::DoNotOptimize(over(nested));
}
BENCHMARK(prof_arrow);

// instantiating the profunctor optic is part of the cost
void prof_get_operator(benchmark::State& state)
{
    auto l = prof_compose(prof_first(), prof_compose(prof_first(), prof_first()));
    for (auto _ : state)
        benchmark::DoNotOptimize(get_operator(l)(nested));
}
BENCHMARK(prof_get_operator);

void encode_decode_lens(benchmark::State& state)
{
    auto enc = prof_encoding<Lens>();
    for (auto _ : state)
        benchmark::DoNotOptimize(enc.decode(enc.encode(first_of_4())).get(nested));
}
BENCHMARK(encode_decode_lens);

void lens_laws(benchmark::State& state)
{
    auto n = static_cast<std::size_t>(state.range(0));
    auto a = int_domain("A", n);
    auto r = int_domain("R", 2);
    auto s = int_domain("S", 2 * n);
    auto l = laws::gen_lawful_lens(1, s, r, a);
    for (auto _ : state)
        benchmark::DoNotOptimize(laws::check_lens_laws(l, s, a));
}
BENCHMARK(lens_laws)->Arg(2)->Arg(4)->Arg(8);

void opticat_set(benchmark::State& state)
{
    auto path = opticat::compile(opticat::parse_path("key(users).each.key(name)"));
    opticat::Document doc = {{"users", opticat::Document::array()}};
    for (int i = 0; i < state.range(0); ++i)
        doc["users"].push_back({{"name", "user" + std::to_string(i)}, {"id", i}});
    auto upper = opticat::named_function("upper");
    for (auto _ : state)
        benchmark::DoNotOptimize(opticat::over(path, upper, doc));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(opticat_set)->Arg(10)->Arg(1000);

void parse_path(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(
            opticat::parse_path(R"(key(users).idx(12).some.fst.key("a b").each)"));
}
BENCHMARK(parse_path);

} // namespace

BENCHMARK_MAIN();
