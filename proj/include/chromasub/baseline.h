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

#ifndef CHROMASUB_BASELINE_H_
#define CHROMASUB_BASELINE_H_

#include <array>
#include <string_view>

#include "chromasub/image.h"

namespace chromasub {

// The traditional 4:2:0 subsamplers.
enum class BaselineMethod { kA, kL, kR, kDirect, kMpegB };

std::string_view baseline_name(BaselineMethod m);
// Accepts A, L, R, DIRECT, MPEG_B (and MPEG-B). Throws ConfigError.
BaselineMethod parse_baseline(std::string_view name);

inline constexpr std::array<int, 13> kMpegBTaps = {2, 0, -4, -3, 5, 19, 26,
                                                   19, 5, -3, -4, 0, 2};
inline constexpr int kMpegBNorm = 64;

// Unquantized per-block value of one chroma plane.
//   A      mean of the four samples
//   L / R  mean of the left / right column
//   DIRECT top-left sample
//   MPEG_B 13-tap horizontal filter centred on the top-left sample, edge
//          samples replicated past the borders
double baseline_block_value(BaselineMethod method, const ImagePlane& chroma,
                            BlockIndex idx);

// Half-resolution plane of clamp_quantize'd block values. The input must be
// even-sized (GeometryError otherwise).
ImagePlane subsample_baseline(BaselineMethod method, const ImagePlane& chroma);

}  // namespace chromasub

#endif  // CHROMASUB_BASELINE_H_
