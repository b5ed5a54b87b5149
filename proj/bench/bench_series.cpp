#include <benchmark/benchmark.h>

#include <cmath>

#include "klab/fukaya.hpp"
#include "klab/shell_sum.hpp"

namespace {

using klab::cplx;

const klab::Modulus kTau(cplx{0.0, 1.0});

void BM_F_series(benchmark::State& state, klab::Execution exec) {
    const auto cfg = klab::build_quad_config({klab::Rational(0), klab::Rational(1, 3), klab::Rational(-1),
                                              klab::Rational(3, 2)});
    const std::array<cplx, 4> z{cplx{0.13, 0.21}, cplx{0.37, 0.42}, cplx{0.71, 0.18}, cplx{0.05, 0.33}};
    klab::SummationBudget budget;
    budget.target_tol = std::pow(10.0, -static_cast<double>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(klab::F_series(cfg, {0, 0}, z, kTau, budget, std::nullopt, exec));
    }
}

// A plain Gaussian double sum, large enough that shells exceed the parallel threshold early.
void BM_gaussian_2d(benchmark::State& state, klab::Execution exec) {
    const double t = 1.0 / static_cast<double>(state.range(0));
    klab::SummationBudget budget;
    budget.max_shell = 2000;
    klab::ShellOptions opt;
    opt.exec = exec;
    auto term = [t](long m, long n) {
        return klab::e_of(cplx{0.0, t} * static_cast<double>(m * m + m * n + n * n) + 0.1 * m + 0.3 * n);
    };
    for (auto _ : state) benchmark::DoNotOptimize(klab::sum_by_shells_2d(term, budget, opt));
}

}  // namespace

BENCHMARK_CAPTURE(BM_F_series, serial, klab::Execution::serial)->Arg(12);
BENCHMARK_CAPTURE(BM_F_series, parallel, klab::Execution::parallel)->Arg(12);
BENCHMARK_CAPTURE(BM_gaussian_2d, serial, klab::Execution::serial)->Arg(1)->Arg(20)->Arg(100);
BENCHMARK_CAPTURE(BM_gaussian_2d, parallel, klab::Execution::parallel)->Arg(1)->Arg(20)->Arg(100);

BENCHMARK_MAIN();
