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

#include "chromasub/colorspace.h"

#include <algorithm>
#include <cmath>

namespace chromasub {

Triple rgb_to_yuv(const Triple& rgb) {
  Triple out;
  for (int k = 0; k < 3; ++k) {
    out[k] = kRgbToYuv[k][0] * rgb[0] + kRgbToYuv[k][1] * rgb[1] +
             kRgbToYuv[k][2] * rgb[2] + kYuvOffset[k];
  }
  return out;
}

Triple yuv_to_rgb(const Triple& yuv) {
  const double y = yuv[0] - kYuvOffset[0];
  const double u = yuv[1] - kYuvOffset[1];
  const double v = yuv[2] - kYuvOffset[2];
  Triple out;
  for (int k = 0; k < 3; ++k) {
    out[k] = kYuvToRgb[k][0] * y + kYuvToRgb[k][1] * u + kYuvToRgb[k][2] * v;
  }
  return out;
}

YuvImage convert_image(const RgbImage& img) {
  YuvImage out(img.width(), img.height());
  const int h = img.height();
  const int w = img.width();
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    auto r = img.r.row(y), g = img.g.row(y), b = img.b.row(y);
    auto oy = out.y.row(y), ou = out.u.row(y), ov = out.v.row(y);
    for (int x = 0; x < w; ++x) {
      const Triple yuv = rgb_to_yuv({r[x], g[x], b[x]});
      oy[x] = yuv[0];
      ou[x] = yuv[1];
      ov[x] = yuv[2];
    }
  }
  return out;
}

RgbImage convert_image(const YuvImage& img) {
  RgbImage out(img.width(), img.height());
  const int h = img.height();
  const int w = img.width();
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    auto iy = img.y.row(y), iu = img.u.row(y), iv = img.v.row(y);
    auto r = out.r.row(y), g = out.g.row(y), b = out.b.row(y);
    for (int x = 0; x < w; ++x) {
      const Triple rgb = yuv_to_rgb({iy[x], iu[x], iv[x]});
      r[x] = rgb[0];
      g[x] = rgb[1];
      b[x] = rgb[2];
    }
  }
  return out;
}

double quantize_sample(double x) {
  return std::clamp(std::round(x), 0.0, 255.0);  // std::round: half away from zero
}

ImagePlane clamp_quantize(const ImagePlane& plane) {
  ImagePlane out = plane;
  auto s = out.samples();
  const auto n = static_cast<long>(s.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) s[i] = quantize_sample(s[i]);
  return out;
}

RgbImage clamp_quantize(const RgbImage& img) {
  return RgbImage(clamp_quantize(img.r), clamp_quantize(img.g),
                  clamp_quantize(img.b));
}

}  // namespace chromasub
