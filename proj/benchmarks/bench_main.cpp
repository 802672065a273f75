#include <benchmark/benchmark.h>

#include <cmath>

#include "smplab/maxprinciple.hpp"
#include "smplab/parabolic.hpp"
#include "smplab/solver1d.hpp"

namespace {

using namespace smplab;

PiecewiseForcing band_forcing(double a) {
    return PiecewiseForcing(
        {
            {-a, -1.0, ConstantPiece{-1.0}},
            {-1.0, 1.0, ConstantPiece{1.0}},
            {1.0, a, ConstantPiece{-1.0}},
        },
        -a, a);
}

void BM_IntegrateSingularTail(benchmark::State& state) {
    const PiecewiseForcing f(
        {
            {0.0, 0.9, ConstantPiece{10.0}},
            {0.9, 1.0, PowerSingularityPiece{0.1, 1.5, 1.0}},
        },
        0.0, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(double_tail_integral(f.negative_part(), 0.9, 0.95, 1.0));
    }
}
BENCHMARK(BM_IntegrateSingularTail);

void BM_ExactSolveEval(benchmark::State& state) {
    const auto u = solve_exact(band_forcing(2.0));
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        double acc = 0.0;
        for (int i = 0; i <= n; ++i) acc += u.eval(-2.0 + 4.0 * i / n);
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * (n + 1));
}
BENCHMARK(BM_ExactSolveEval)->Arg(256)->Arg(1024);

void BM_Classify(benchmark::State& state) {
    const auto f = band_forcing(2.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(f, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_Classify)->Arg(512)->Arg(2048);

void BM_ConditionChecks(benchmark::State& state) {
    const auto f = band_forcing(2.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_conditions(f));
    }
}
BENCHMARK(BM_ConditionChecks);

void BM_SolveDirichletRadial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto mesh = Mesh::radial_disk(n, 1.0, 2);
    const PiecewiseForcing f(
        {
            {0.0, 0.75, ConstantPiece{4.0}},
            {0.75, 1.0, ConstantPiece{-0.05}},
        },
        0.0, 1.0);
    const auto fh = sample_forcing(mesh, f);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_dirichlet(fh));
    }
}
BENCHMARK(BM_SolveDirichletRadial)->Arg(128)->Arg(512)->Arg(2048);

void BM_SolveDirichletRectangle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto mesh = Mesh::rectangle(n, n, 1.0, 1.0);
    auto f = field_from(mesh, [](double x, double y) {
        return std::sin(M_PI * x) * std::sin(M_PI * y);
    });
    f.zero_boundary();
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_dirichlet(f));
    }
}
BENCHMARK(BM_SolveDirichletRectangle)->Arg(32)->Arg(64)->Arg(128);

void BM_FirstEigenpairDisk(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto mesh = Mesh::radial_disk(n, 1.0, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(first_eigenpair(mesh));
    }
}
BENCHMARK(BM_FirstEigenpairDisk)->Arg(128)->Arg(512);

void BM_PositivityCertificate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto mesh = Mesh::radial_disk(n, 1.0, 2);
    const auto K = CompactSet::radial_ball(mesh, 0.62);
    const PiecewiseForcing f(
        {
            {0.0, 0.75, ConstantPiece{4.0}},
            {0.75, 1.0, ConstantPiece{-0.05}},
        },
        0.0, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_positivity(NdForcing{f}, mesh, K, 0.1));
    }
}
BENCHMARK(BM_PositivityCertificate)->Arg(64)->Arg(256);

void BM_ThetaStep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto mesh = Mesh::interval(n, -1.0, 1.0);
    const auto eig1 = first_eigenpair(mesh);
    ParabolicProblem p(mesh, eig1.field, ScalarField(mesh), 1e-4, 0.5, 1.0);
    const ThetaScheme scheme(p);
    ScalarField state_field = eig1.field;
    double t = 0.0;
    for (auto _ : state) {
        scheme.step(state_field, t);
        t += p.dt;
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_ThetaStep)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
