// Low-weight enumeration on the length-68 extension code: serial reference
// against the OpenMP kernel.

#include "sdc/report.hpp"
#include "sdc/tables.hpp"

#include <benchmark/benchmark.h>

namespace {

const sdc::Code& code68() {
    static sdc::TableBook book(SDC_DATA_DIR);
    static const sdc::Code bin = sdc::binary_image(book.code("F1"));
    return bin;
}

void BM_serial(benchmark::State& state) {
    const auto& c = code68();
    const int w_max = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sdc::partial_weights_serial(c, w_max));
}

void BM_openmp(benchmark::State& state) {
    const auto& c = code68();
    const int w_max = static_cast<int>(state.range(0));
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(sdc::partial_weights(c, w_max, threads));
}

}  // namespace

BENCHMARK(BM_serial)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_openmp)->ArgsProduct({{12, 14}, {1, 2, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
