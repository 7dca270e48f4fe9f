// Copyright 2026 The gutzmer Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "gutzmer/diagnostics.hpp"
#include "gutzmer/sobolev.hpp"

using namespace gutzmer;

namespace {

SpaceModel space_of(std::int64_t k) {
  return make_space(k == 0 ? SpaceKind::Circle : k == 1 ? SpaceKind::Sphere2 : SpaceKind::Su2Zonal);
}

void BM_MatrixCoefficients(benchmark::State& state) {
  const auto sp = space_of(state.range(0));
  const int lmax = static_cast<int>(state.range(1));
  std::vector<cplx> out(SlotLayout(sp, lmax).size());
  const ComplexPoint z{unit_cube_to_U(sp, {0.3, 0.4, 0.5}), 1.2};
  for (auto _ : state) {
    matrix_coefficients_scaled(sp, lmax, z, 0.5, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_MatrixCoefficients)->ArgsProduct({{0, 1, 2}, {8, 32}});

void BM_HoloEval(benchmark::State& state) {
  const auto sp = space_of(state.range(0));
  const auto img = bargmann_forward(random_coeffs(sp, 16, 1), 0.25);
  const ComplexPoint z{unit_cube_to_U(sp, {0.1, 0.7, 0.2}), 0.8};
  for (auto _ : state) benchmark::DoNotOptimize(holo_eval_scaled(img, z, 0.3));
}
BENCHMARK(BM_HoloEval)->DenseRange(0, 2);

void BM_DualHeatKernel(benchmark::State& state) {
  const auto sp = space_of(state.range(0));
  clear_kernel_cache();
  set_kernel_cache_enabled(false);
  double r = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dual_heat_kernel_scaled(sp, 0.5, r, 2));
    r = r > 10.0 ? 0.0 : r + 0.013;
  }
  set_kernel_cache_enabled(true);
}
BENCHMARK(BM_DualHeatKernel)->DenseRange(0, 2);

void BM_GaussJacobi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_jacobi(n, 0.0, 0.5, 0.0, 1.0));
}
BENCHMARK(BM_GaussJacobi)->RangeMultiplier(4)->Range(16, 256);

void BM_SandwichRatio(benchmark::State& state) {
  double b = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sandwich_ratio(0.5, 0.25, b));
    b = b > 1000.0 ? 1.0 : b * 1.1;
  }
}
BENCHMARK(BM_SandwichRatio);

void BM_BergmanNorm(benchmark::State& state) {
  const auto sp = space_of(state.range(0));
  const auto img = bargmann_forward(random_coeffs(sp, 6, 2), 0.25);
  BergmanOptions opts;
  opts.orbit_lmax = 6;
  const WeightFunction w{WeightFamily::PT, 0.25, 0.0, 0.0, sp};
  for (auto _ : state) benchmark::DoNotOptimize(bergman_norm_sq(sp, holo_from_image(img), w, opts));
}
BENCHMARK(BM_BergmanNorm)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_GrowthProfile(benchmark::State& state) {
  const auto sp = space_of(state.range(0));
  const auto img = builtin_image(sp, "delta", 32, 0.25);
  GrowthGrid grid;
  grid.h_max = resolved_extent(0.25, 32);
  for (auto _ : state) benchmark::DoNotOptimize(growth_profile(sp, holo_from_image(img), 0.25, grid));
}
BENCHMARK(BM_GrowthProfile)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
