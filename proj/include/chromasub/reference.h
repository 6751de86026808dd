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

#ifndef CHROMASUB_REFERENCE_H_
#define CHROMASUB_REFERENCE_H_

// Serial reference versions of the OpenMP kernels. They are written the
// plain way (generic formulas, single accumulators, direct window sums) and
// exist for tests and the benchmark; the library never calls them.

#include "chromasub/baseline.h"
#include "chromasub/cfa.h"
#include "chromasub/distortion.h"
#include "chromasub/image.h"
#include "chromasub/metrics.h"
#include "chromasub/solver.h"
#include "chromasub/upsample.h"

namespace chromasub::reference {

YuvImage convert_image(const RgbImage& img);
RgbImage convert_image(const YuvImage& img);
ImagePlane subsample_baseline(BaselineMethod method, const ImagePlane& chroma);
ImagePlane upsample(UpsampleMethod method, const ImagePlane& sub);
RgbImage demosaic_bilinear(const CfaImage& cfa);
double cpsnr(const RgbImage& ref, const RgbImage& rec);
double ssim(const ImagePlane& ref, const ImagePlane& rec,
            const SsimParams& params = {});
LatticeMinimum brute_force(const DistortionModel& model);

}  // namespace chromasub::reference

#endif  // CHROMASUB_REFERENCE_H_
