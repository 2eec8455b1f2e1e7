#include "crg/context.hpp"
#include "crg/kernels.hpp"
#include "crg/lfunc.hpp"

#include <benchmark/benchmark.h>

namespace {

std::vector<std::uint32_t> unramified_primes(std::uint32_t limit)
{
    const auto& poly = crg::SplittingPolynomial::ell0();
    std::vector<std::uint32_t> out;
    for (std::uint32_t p : crg::sieve_primes(limit)) {
        if (!poly.is_ramified(p)) {
            out.push_back(p);
        }
    }
    return out;
}

void BM_ClassifySerial(benchmark::State& state)
{
    const auto primes = unramified_primes(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(crg::classify_primes_serial(crg::SplittingPolynomial::ell0(), primes));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * primes.size()));
}

void BM_ClassifyParallel(benchmark::State& state)
{
    const auto primes = unramified_primes(static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(crg::classify_primes_parallel(crg::SplittingPolynomial::ell0(), primes));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * primes.size()));
}

const std::vector<crg::LocalFactor>& factors()
{
    static const auto f = crg::classify_primes_serial(crg::SplittingPolynomial::ell0(), unramified_primes(1000000));
    return f;
}

void BM_EulerSerial(benchmark::State& state)
{
    const auto& f = factors();
    for (auto _ : state) {
        benchmark::DoNotOptimize(crg::euler_product_serial(f, static_cast<int>(state.range(0)), 128));
    }
}

void BM_EulerParallel(benchmark::State& state)
{
    const auto& f = factors();
    for (auto _ : state) {
        benchmark::DoNotOptimize(crg::euler_product_parallel(f, static_cast<int>(state.range(0)), 128));
    }
}

} // namespace

BENCHMARK(BM_ClassifySerial)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyParallel)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EulerSerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EulerParallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
