// Serial vs OpenMP versions of the heavy kernels. Arg 0 = serial, 1 = parallel.

#include "polyolab/identities/identities.hpp"
#include "polyolab/macdonald/macdonald.hpp"
#include "polyolab/polyomino/polyomino.hpp"
#include "polyolab/sl2/sl2.hpp"

#include <benchmark/benchmark.h>

using namespace polyolab;

namespace {

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void BM_shape_histogram(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(polyomino::shape_histogram(7, 7, mode(s)));
}
BENCHMARK(BM_shape_histogram)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_double_histogram(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(polyomino::double_histogram(7, 7, mode(s)));
}
BENCHMARK(BM_double_histogram)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_rank_check(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(sl2::rank_check(3, 6, mode(s)));
}
BENCHMARK(BM_rank_check)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_kostka_qt(benchmark::State& s) {
    const symfunc::Partition mu{3, 2, 1};
    for (auto _ : s) benchmark::DoNotOptimize(macdonald::compute_kostka_qt(mu, mode(s)));
}
BENCHMARK(BM_kostka_qt)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_verify(benchmark::State& s) {
    identities::VerifyOptions opt;
    opt.ids = {"eqFrob", "labelled2", "Frob2star", "pathArea"};
    opt.exec = mode(s);
    for (auto _ : s) benchmark::DoNotOptimize(identities::verify(opt));
}
BENCHMARK(BM_verify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
