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

#include "chromasub/upsample.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace chromasub {

namespace {

// Sample 2j sits a quarter site before site j, sample 2j+1 a quarter after.
// taps[parity] lists (site offset, weight) pairs.
struct Tap {
  int offset;
  double weight;
};

constexpr std::array<std::array<Tap, 2>, 2> kBilinearTaps = {{
    {{{-1, 0.25}, {0, 0.75}}},
    {{{0, 0.75}, {1, 0.25}}},
}};

std::array<std::array<Tap, 4>, 2> bicubic_taps() {
  std::array<std::array<Tap, 4>, 2> taps{};
  // Fractional position of the output sample past site floor(x / 2 - 1/4).
  const std::array<double, 2> frac = {0.75, 0.25};
  const std::array<int, 2> base = {-1, 0};
  for (int parity = 0; parity < 2; ++parity) {
    for (int k = 0; k < 4; ++k) {
      const int off = base[parity] + k - 1;
      taps[parity][k] = {off, cubic_weight(frac[parity] - (k - 1))};
    }
  }
  return taps;
}

template <std::size_t N>
ImagePlane separable(const ImagePlane& sub,
                     const std::array<std::array<Tap, N>, 2>& taps) {
  const int sw = sub.width();
  const int sh = sub.height();
  const int w = 2 * sw;
  const int h = 2 * sh;

  // Horizontal pass into a (w x sh) buffer, then vertical.
  ImagePlane horiz(w, sh);
#pragma omp parallel for schedule(static)
  for (int sy = 0; sy < sh; ++sy) {
    auto src = sub.row(sy);
    auto dst = horiz.row(sy);
    for (int x = 0; x < w; ++x) {
      const int site = x >> 1;
      double acc = 0.0;
      for (const Tap& t : taps[x & 1]) {
        acc += t.weight * src[std::clamp(site + t.offset, 0, sw - 1)];
      }
      dst[x] = acc;
    }
  }
  ImagePlane out(w, h);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    const int site = y >> 1;
    auto dst = out.row(y);
    for (int x = 0; x < w; ++x) dst[x] = 0.0;
    for (const Tap& t : taps[y & 1]) {
      auto src = horiz.row(std::clamp(site + t.offset, 0, sh - 1));
      for (int x = 0; x < w; ++x) dst[x] += t.weight * src[x];
    }
  }
  return out;
}

}  // namespace

std::string_view upsample_name(UpsampleMethod m) {
  switch (m) {
    case UpsampleMethod::kCopy: return "COPY";
    case UpsampleMethod::kBilinear: return "BILI";
    case UpsampleMethod::kBicubic: return "BICUBIC";
  }
  return "?";
}

UpsampleMethod parse_upsample(std::string_view name) {
  std::string n(name);
  std::transform(n.begin(), n.end(), n.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  if (n == "COPY") return UpsampleMethod::kCopy;
  if (n == "BILI" || n == "BILINEAR") return UpsampleMethod::kBilinear;
  if (n == "BICUBIC") return UpsampleMethod::kBicubic;
  throw ConfigError("unknown upsampler '" + std::string(name) + "'");
}

double cubic_weight(double x) {
  constexpr double a = -0.5;
  x = std::abs(x);
  if (x <= 1.0) return ((a + 2.0) * x - (a + 3.0)) * x * x + 1.0;
  if (x < 2.0) return ((a * x - 5.0 * a) * x + 8.0 * a) * x - 4.0 * a;
  return 0.0;
}

ImagePlane upsample(UpsampleMethod method, const ImagePlane& sub) {
  if (sub.empty()) throw GeometryError("cannot upsample an empty plane");
  switch (method) {
    case UpsampleMethod::kCopy: {
      const int w = 2 * sub.width();
      const int h = 2 * sub.height();
      ImagePlane out(w, h);
#pragma omp parallel for schedule(static)
      for (int y = 0; y < h; ++y) {
        auto src = sub.row(y >> 1);
        auto dst = out.row(y);
        for (int x = 0; x < w; ++x) dst[x] = src[x >> 1];
      }
      return out;
    }
    case UpsampleMethod::kBilinear:
      return separable(sub, kBilinearTaps);
    case UpsampleMethod::kBicubic: {
      static const auto taps = bicubic_taps();
      return separable(sub, taps);
    }
  }
  throw ConfigError("unknown upsampler");
}

ImagePlane upsample(UpsampleMethod method, const ImagePlane& sub, int width,
                    int height) {
  if (2 * sub.width() != width || 2 * sub.height() != height) {
    throw GeometryError("cannot upsample " + std::to_string(sub.width()) + "x" +
                        std::to_string(sub.height()) + " to " +
                        std::to_string(width) + "x" + std::to_string(height));
  }
  return upsample(method, sub);
}

}  // namespace chromasub
