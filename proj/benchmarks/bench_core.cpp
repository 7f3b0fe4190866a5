#include <benchmark/benchmark.h>

#include "jgap/certificate.hpp"
#include "jgap/hard_body.hpp"
#include "jgap/hypergeometric.hpp"
#include "jgap/net_approx.hpp"
#include "jgap/polytope.hpp"
#include "jgap/random.hpp"

using namespace jgap;

static void BM_SupportValue(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  Rng rng = make_stream(1);
  const HPolytope K = random_body(n, 4.0, static_cast<std::size_t>(state.range(1)), rng);
  const Vector d = random_unit_vector(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(support_value(K, d));
}
BENCHMARK(BM_SupportValue)->Args({2, 50})->Args({3, 200})->Args({10, 500});

static void BM_ExactTail(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const std::int64_t k = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(log_exact_tail(n, k, (k + 1) / 2));
}
BENCHMARK(BM_ExactTail)->Args({1000000, 120})->Args({100000000, 5000});

static void BM_BuildInstance(benchmark::State& state) {
  const auto n = state.range(0);
  const auto m = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    HardBodyInstance inst = build_instance(params_from_k(n, 16, m, 7));
    benchmark::DoNotOptimize(inst.facet_dirs.data());
  }
}
BENCHMARK(BM_BuildInstance)->Args({1000, 64})->Args({4000, 256})->Unit(benchmark::kMillisecond);

static void BM_VerifyHypotheses(benchmark::State& state) {
  const HardBodyInstance inst = build_instance(params_from_k(state.range(0), 16, 256, 7));
  const HPolytope K = inst.body();
  const Certificate cert = extract_certificate(inst);
  for (auto _ : state) benchmark::DoNotOptimize(verify_hypotheses(cert, K).pass);
}
BENCHMARK(BM_VerifyHypotheses)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

static void BM_PolarDecompose(benchmark::State& state) {
  const HardBodyInstance inst = build_instance(params_from_k(4000, 16, 256, 7));
  const Certificate cert = extract_certificate(inst);
  const PolarDecomposer decompose(cert);
  Rng rng = make_stream(3);
  const PolarSample s = sample_polar_point(cert, rng);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(s.w).size());
}
BENCHMARK(BM_PolarDecompose)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
