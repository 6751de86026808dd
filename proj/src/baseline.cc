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

#include "chromasub/baseline.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "chromasub/colorspace.h"

namespace chromasub {

static_assert(std::accumulate(kMpegBTaps.begin(), kMpegBTaps.end(), 0) ==
                  kMpegBNorm,
              "MPEG-B taps must sum to the normalization");

std::string_view baseline_name(BaselineMethod m) {
  switch (m) {
    case BaselineMethod::kA: return "A";
    case BaselineMethod::kL: return "L";
    case BaselineMethod::kR: return "R";
    case BaselineMethod::kDirect: return "DIRECT";
    case BaselineMethod::kMpegB: return "MPEG_B";
  }
  return "?";
}

BaselineMethod parse_baseline(std::string_view name) {
  std::string n(name);
  std::transform(n.begin(), n.end(), n.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  std::replace(n.begin(), n.end(), '-', '_');
  if (n == "A") return BaselineMethod::kA;
  if (n == "L") return BaselineMethod::kL;
  if (n == "R") return BaselineMethod::kR;
  if (n == "DIRECT") return BaselineMethod::kDirect;
  if (n == "MPEG_B") return BaselineMethod::kMpegB;
  throw ConfigError("unknown baseline subsampler '" + std::string(name) + "'");
}

double baseline_block_value(BaselineMethod method, const ImagePlane& chroma,
                            BlockIndex idx) {
  const Quad q = block_at(chroma, idx);
  switch (method) {
    case BaselineMethod::kA: return (q[0] + q[1] + q[2] + q[3]) / 4.0;
    case BaselineMethod::kL: return (q[0] + q[2]) / 2.0;
    case BaselineMethod::kR: return (q[1] + q[3]) / 2.0;
    case BaselineMethod::kDirect: return q[0];
    case BaselineMethod::kMpegB: {
      const int x0 = 2 * idx.bx;
      const int y0 = 2 * idx.by;
      const int half = static_cast<int>(kMpegBTaps.size()) / 2;
      double acc = 0.0;
      for (int k = 0; k < static_cast<int>(kMpegBTaps.size()); ++k) {
        acc += kMpegBTaps[k] * chroma.clamped(x0 + k - half, y0);
      }
      return acc / kMpegBNorm;
    }
  }
  return 0.0;
}

ImagePlane subsample_baseline(BaselineMethod method, const ImagePlane& chroma) {
  require_even(chroma.width(), chroma.height());
  ImagePlane out(chroma.block_cols(), chroma.block_rows());
  const int rows = out.height();
  const int cols = out.width();
#pragma omp parallel for schedule(static)
  for (int by = 0; by < rows; ++by) {
    auto dst = out.row(by);
    for (int bx = 0; bx < cols; ++bx) {
      dst[bx] = quantize_sample(baseline_block_value(method, chroma, {bx, by}));
    }
  }
  return out;
}

}  // namespace chromasub
