#include <benchmark/benchmark.h>

#include "skewdual/basis.hpp"
#include "skewdual/kernels.hpp"
#include "skewdual/linalg.hpp"
#include "skewdual/skewrs.hpp"

using namespace skewdual;

namespace {

// Generator of a [n, k] skew RS code; q^k codewords are enumerated.
Mat rs_generator(unsigned m, std::size_t delta) {
  const Field f = Field::create(2, m);
  std::uint32_t alpha = 1;
  while (!normal_basis_check(f, FieldAut{1}, Felt{alpha})) ++alpha;
  return rs_create(f, FieldAut{1}, Felt{alpha}, delta).code().canonical();
}

Mat random_generator(unsigned p, std::size_t k, std::size_t n) {
  const Field f = Field::create(p, 1);
  Mat g(f, k, n);
  std::uint64_t state = 12345;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      g(i, j) = Felt{static_cast<std::uint32_t>((state >> 33) % p)};
    }
  }
  return row_space(g);
}

void BM_MinWeightSerial(benchmark::State& state, Mat g) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::min_weight_serial(g));
}

void BM_MinWeightParallel(benchmark::State& state, Mat g) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::min_weight_parallel(g));
}

void BM_SelfDualNormalSerial(benchmark::State& state, unsigned p, unsigned m) {
  const Field f = Field::create(p, m);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::first_self_dual_normal_serial(f, 1));
}

void BM_SelfDualNormalParallel(benchmark::State& state, unsigned p, unsigned m) {
  const Field f = Field::create(p, m);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::first_self_dual_normal_parallel(f, 1));
}

}  // namespace

BENCHMARK_CAPTURE(BM_MinWeightSerial, gf16_rs_k3, rs_generator(4, 2))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MinWeightParallel, gf16_rs_k3, rs_generator(4, 2))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MinWeightSerial, gf2_k18_n40, random_generator(2, 18, 40))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MinWeightParallel, gf2_k18_n40, random_generator(2, 18, 40))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SelfDualNormalSerial, gf2_15, 2u, 15u)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SelfDualNormalParallel, gf2_15, 2u, 15u)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SelfDualNormalSerial, gf3_9, 3u, 9u)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SelfDualNormalParallel, gf3_9, 3u, 9u)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
