#include <benchmark/benchmark.h>

#include <computon/build.hpp>
#include <computon/compose.hpp>
#include <computon/dsl.hpp>
#include <computon/interface.hpp>
#include <computon/morphism.hpp>
#include <computon/semantics.hpp>

using namespace computon;

namespace {

// Glue chain of the requested depth, built by repeated sequencing.
Computon chain(int depth) {
    Computon acc = make_glue();
    for (int i = 1; i < depth; ++i)
        acc = sequential_compose(acc, make_glue()).pushout.result;
    return acc;
}

void BM_SequentialCompose(benchmark::State& state) {
    Computon left = chain(static_cast<int>(state.range(0)));
    Computon right = make_glue();
    for (auto _ : state)
        benchmark::DoNotOptimize(sequential_compose(left, right));
}
BENCHMARK(BM_SequentialCompose)->Arg(2)->Arg(8)->Arg(16);

void BM_ParallelCompose(benchmark::State& state) {
    Computon a = make_functional({Colour{1}, Colour{2}}, {Colour{3}, Colour{4}});
    Computon b = make_functional({Colour{3}, Colour{4}}, {Colour{5}});
    for (auto _ : state)
        benchmark::DoNotOptimize(parallel_compose(a, b));
}
BENCHMARK(BM_ParallelCompose);

void BM_Isomorphism(benchmark::State& state) {
    Computon a = make_functional({Colour{1}, Colour{2}}, {Colour{3}, Colour{4}});
    Computon b = make_functional({Colour{3}, Colour{4}}, {Colour{5}});
    Computon ab = parallel_compose(a, b).result;
    Computon ba = parallel_compose(b, a).result;
    for (auto _ : state)
        benchmark::DoNotOptimize(find_isomorphism(ab, ba));
}
BENCHMARK(BM_Isomorphism);

void BM_TokenGame(benchmark::State& state) {
    Computon c = chain(static_cast<int>(state.range(0)));
    MarkedComputon start = make_marking(c, {{*interface_of(c).e_inports.begin(), 1}});
    for (auto _ : state)
        benchmark::DoNotOptimize(run(start));
}
BENCHMARK(BM_TokenGame)->Arg(8)->Arg(32);

void BM_ParseSerialize(benchmark::State& state) {
    Computon c = chain(static_cast<int>(state.range(0)));
    std::string text = dsl::serialize(c, "Chain");
    for (auto _ : state) {
        auto parsed = dsl::parse(text);
        benchmark::DoNotOptimize(parsed);
    }
}
BENCHMARK(BM_ParseSerialize)->Arg(8)->Arg(32);

} // namespace

BENCHMARK_MAIN();
