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

#ifndef CHROMASUB_COLORSPACE_H_
#define CHROMASUB_COLORSPACE_H_

#include <array>

#include "chromasub/image.h"

namespace chromasub {

using Triple = std::array<double, 3>;

// BT.601 studio-range coefficients.
inline constexpr std::array<Triple, 3> kRgbToYuv = {{
    {0.257, 0.504, 0.098},
    {-0.148, -0.291, 0.439},
    {0.439, -0.368, -0.071},
}};
inline constexpr Triple kYuvOffset = {16.0, 128.0, 128.0};
inline constexpr std::array<Triple, 3> kYuvToRgb = {{
    {1.164, 0.0, 1.596},
    {1.164, -0.391, -0.813},
    {1.164, 2.018, 0.0},
}};

// Exact affine maps; no clamping and no rounding.
Triple rgb_to_yuv(const Triple& rgb);
Triple yuv_to_rgb(const Triple& yuv);

// Per-pixel conversion, OpenMP-parallel over rows.
YuvImage convert_image(const RgbImage& img);
RgbImage convert_image(const YuvImage& img);

// Round half away from zero, then clamp to [0, 255].
double quantize_sample(double x);
ImagePlane clamp_quantize(const ImagePlane& plane);
RgbImage clamp_quantize(const RgbImage& img);

}  // namespace chromasub

#endif  // CHROMASUB_COLORSPACE_H_
