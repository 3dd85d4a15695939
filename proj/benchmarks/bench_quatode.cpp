#include <random>

#include <benchmark/benchmark.h>

#include "quatode/quatode.hpp"

using namespace quatode;

namespace {

QMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  QMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = Quaternion(u(rng), u(rng), u(rng), u(rng));
    }
    m(r, r) += 2.0 * static_cast<double>(n);
  }
  return m;
}

void BM_DetP(benchmark::State& state) {
  const QMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(det_p(a));
  }
}
BENCHMARK(BM_DetP)->DenseRange(2, 8);

void BM_ChenInverse(benchmark::State& state) {
  const QMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(inverse(a));
  }
}
BENCHMARK(BM_ChenInverse)->DenseRange(2, 4);

void BM_AdjointInverse(benchmark::State& state) {
  const QMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(inverse_via_adjoint(a));
  }
}
BENCHMARK(BM_AdjointInverse)->DenseRange(2, 8, 2);

void BM_Expm(benchmark::State& state) {
  const QMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expm(a, 0.3));
  }
}
BENCHMARK(BM_Expm)->DenseRange(1, 4);

void BM_RightEigenpairs(benchmark::State& state) {
  const QMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(right_eigenpairs(a));
  }
}
BENCHMARK(BM_RightEigenpairs)->DenseRange(1, 4);

Problem lower_triangular() {
  Problem p;
  p.n = 2;
  p.a = parse_matrix({{"i", "0"}, {"1", "1+i"}});
  p.f = parse_vector({"i", "t*k"});
  p.x0 = {Quaternion::unit_i(), -Quaternion::unit_i()};
  return p;
}

void BM_SolveIvpConstant(benchmark::State& state) {
  const Problem p = lower_triangular();
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_ivp(p));
  }
}
BENCHMARK(BM_SolveIvpConstant)->Unit(benchmark::kMillisecond);

void BM_SolveIvpTimeVarying(benchmark::State& state) {
  Problem p = lower_triangular();
  p.a = parse_matrix({{"t*i", "1"}, {"-1", "j"}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_ivp(p));
  }
}
BENCHMARK(BM_SolveIvpTimeVarying)->Unit(benchmark::kMillisecond);

void BM_ParseEval(benchmark::State& state) {
  const Expr e = parse("2*t*i + exp(j*t)*j - (t^2 + exp(j*t) - 1)*k");
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval(e, t));
    t += 1e-3;
  }
}
BENCHMARK(BM_ParseEval);

}  // namespace
