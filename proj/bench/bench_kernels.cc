// Copyright 2026 The chromasub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// OpenMP kernels against their serial reference versions. Run with
// OMP_NUM_THREADS set to compare scaling.

#include <benchmark/benchmark.h>

#include <random>

#include "chromasub/baseline.h"
#include "chromasub/cfa.h"
#include "chromasub/colorspace.h"
#include "chromasub/distortion.h"
#include "chromasub/metrics.h"
#include "chromasub/reference.h"
#include "chromasub/solver.h"
#include "chromasub/upsample.h"

namespace chromasub {
namespace {

ImagePlane noise_plane(int w, int h, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> dist(0, 255);
  ImagePlane p(w, h);
  for (double& s : p.samples()) s = dist(gen);
  return p;
}

RgbImage noise_rgb(int n) {
  return RgbImage(noise_plane(n, n, 1), noise_plane(n, n, 2), noise_plane(n, n, 3));
}

DistortionModel sample_model() {
  const YuvImage yuv = convert_image(noise_rgb(16));
  const SubsampledChromaImage sub(subsample_baseline(BaselineMethod::kA, yuv.u),
                                  subsample_baseline(BaselineMethod::kA, yuv.v));
  return build_model(
      gather_context(yuv, pattern_for(CfaKind::kBayer, "a"), sub, sub, {3, 3}));
}

void BM_ConvertParallel(benchmark::State& state) {
  const RgbImage img = noise_rgb(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(convert_image(img));
}
void BM_ConvertSerial(benchmark::State& state) {
  const RgbImage img = noise_rgb(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::convert_image(img));
}

void BM_BaselineParallel(benchmark::State& state) {
  const ImagePlane p = noise_plane(static_cast<int>(state.range(0)),
                                   static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(subsample_baseline(BaselineMethod::kMpegB, p));
}
void BM_BaselineSerial(benchmark::State& state) {
  const ImagePlane p = noise_plane(static_cast<int>(state.range(0)),
                                   static_cast<int>(state.range(0)), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::subsample_baseline(BaselineMethod::kMpegB, p));
  }
}

void BM_UpsampleParallel(benchmark::State& state) {
  const ImagePlane p = noise_plane(static_cast<int>(state.range(0)) / 2,
                                   static_cast<int>(state.range(0)) / 2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(upsample(UpsampleMethod::kBicubic, p));
}
void BM_UpsampleSerial(benchmark::State& state) {
  const ImagePlane p = noise_plane(static_cast<int>(state.range(0)) / 2,
                                   static_cast<int>(state.range(0)) / 2, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::upsample(UpsampleMethod::kBicubic, p));
  }
}

void BM_DemosaicParallel(benchmark::State& state) {
  const CfaImage cfa =
      mosaic(noise_rgb(static_cast<int>(state.range(0))), pattern_for(CfaKind::kBayer, "a"));
  for (auto _ : state) benchmark::DoNotOptimize(demosaic_bilinear(cfa));
}
void BM_DemosaicSerial(benchmark::State& state) {
  const CfaImage cfa =
      mosaic(noise_rgb(static_cast<int>(state.range(0))), pattern_for(CfaKind::kBayer, "a"));
  for (auto _ : state) benchmark::DoNotOptimize(reference::demosaic_bilinear(cfa));
}

void BM_SsimParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ImagePlane a = noise_plane(n, n, 6), b = noise_plane(n, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(ssim(a, b));
}
void BM_SsimSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ImagePlane a = noise_plane(n, n, 6), b = noise_plane(n, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(reference::ssim(a, b));
}

void BM_BruteForceParallel(benchmark::State& state) {
  const DistortionModel model = sample_model();
  for (auto _ : state) benchmark::DoNotOptimize(brute_force(model));
}
void BM_BruteForceSerial(benchmark::State& state) {
  const DistortionModel model = sample_model();
  for (auto _ : state) benchmark::DoNotOptimize(reference::brute_force(model));
}

void BM_Solve(benchmark::State& state) {
  const DistortionModel model = sample_model();
  for (auto _ : state) benchmark::DoNotOptimize(solve(model));
}

BENCHMARK(BM_ConvertParallel)->Arg(512);
BENCHMARK(BM_ConvertSerial)->Arg(512);
BENCHMARK(BM_BaselineParallel)->Arg(512);
BENCHMARK(BM_BaselineSerial)->Arg(512);
BENCHMARK(BM_UpsampleParallel)->Arg(512);
BENCHMARK(BM_UpsampleSerial)->Arg(512);
BENCHMARK(BM_DemosaicParallel)->Arg(512);
BENCHMARK(BM_DemosaicSerial)->Arg(512);
BENCHMARK(BM_SsimParallel)->Arg(512);
BENCHMARK(BM_SsimSerial)->Arg(512);
BENCHMARK(BM_BruteForceParallel);
BENCHMARK(BM_BruteForceSerial);
BENCHMARK(BM_Solve);

}  // namespace
}  // namespace chromasub

BENCHMARK_MAIN();
