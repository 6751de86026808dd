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

#ifndef CHROMASUB_UPSAMPLE_H_
#define CHROMASUB_UPSAMPLE_H_

#include <string_view>

#include "chromasub/image.h"

namespace chromasub {

enum class UpsampleMethod { kCopy, kBilinear, kBicubic };

std::string_view upsample_name(UpsampleMethod m);
// Accepts COPY, BILI (or BILINEAR), BICUBIC. Throws ConfigError.
UpsampleMethod parse_upsample(std::string_view name);

// Doubles both dimensions. Subsampled sites sit at 2x2 block centres and
// borders replicate. BILI uses 3/4-1/4 weights per axis; BICUBIC uses the
// Catmull-Rom kernel (a = -0.5) over 4x4 sites. Output is not quantized.
ImagePlane upsample(UpsampleMethod method, const ImagePlane& sub);

// As above, checking that the result has the given full-resolution size
// (GeometryError otherwise).
ImagePlane upsample(UpsampleMethod method, const ImagePlane& sub, int width,
                    int height);

// Catmull-Rom weight at distance x.
double cubic_weight(double x);

}  // namespace chromasub

#endif  // CHROMASUB_UPSAMPLE_H_
