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

#ifndef CHROMASUB_METRICS_H_
#define CHROMASUB_METRICS_H_

#include <limits>
#include <span>
#include <string>

#include "chromasub/cfa.h"
#include "chromasub/image.h"

namespace chromasub {

inline constexpr double kInfinitePsnr = std::numeric_limits<double>::infinity();

// 10 log10(255^2 / mse); +inf when mse == 0.
double psnr_from_mse(double mse);

// Color PSNR: one MSE over the three channels and all pixels.
double cpsnr(const RgbImage& ref, const RgbImage& rec);

// PSNR over every recorded CFA sample (DTDI counts both values per pixel).
double psnr_gray(const CfaImage& ref, const CfaImage& rec);
double psnr_plane(const ImagePlane& ref, const ImagePlane& rec);

struct SsimParams {
  int window = 8;
  double c1 = (0.01 * 255) * (0.01 * 255);
  double c2 = (0.03 * 255) * (0.03 * 255);
  double zero_variance = 1e-12;
};

// Mean SSIM over every window position (uniform window, stride 1). Throws
// MetricError if either dimension is smaller than the window.
double ssim(const ImagePlane& ref, const ImagePlane& rec,
            const SsimParams& params = {});
// Mean of the three per-channel values.
double ssim(const RgbImage& ref, const RgbImage& rec,
            const SsimParams& params = {});
// Mean over the CFA planes.
double ssim(const CfaImage& ref, const CfaImage& rec,
            const SsimParams& params = {});

// Mean of finite values; infinite entries are skipped and counted.
struct DatasetMean {
  double mean = 0.0;
  int used = 0;
  int skipped_infinite = 0;
};
DatasetMean dataset_mean(std::span<const double> values);

// "inf" for +inf, fixed 4-decimal notation otherwise.
std::string format_db(double db);

}  // namespace chromasub

#endif  // CHROMASUB_METRICS_H_
