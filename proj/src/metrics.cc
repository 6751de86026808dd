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

#include "chromasub/metrics.h"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace chromasub {

namespace {

void require_same(const ImagePlane& a, const ImagePlane& b) {
  if (!a.same_geometry(b)) {
    throw ComparisonError("images differ in size: " + std::to_string(a.width()) +
                          "x" + std::to_string(a.height()) + " vs " +
                          std::to_string(b.width()) + "x" +
                          std::to_string(b.height()));
  }
}

// Sum of squared differences, accumulated per row so the result does not
// depend on the thread count.
double sse(const ImagePlane& a, const ImagePlane& b) {
  const int h = a.height();
  const int w = a.width();
  std::vector<double> rows(static_cast<std::size_t>(h));
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    auto ra = a.row(y), rb = b.row(y);
    double acc = 0.0;
    for (int x = 0; x < w; ++x) {
      const double d = ra[x] - rb[x];
      acc += d * d;
    }
    rows[y] = acc;
  }
  double total = 0.0;
  for (double r : rows) total += r;
  return total;
}

}  // namespace

double psnr_from_mse(double mse) {
  if (mse <= 0.0) return kInfinitePsnr;
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double cpsnr(const RgbImage& ref, const RgbImage& rec) {
  for (int c = 0; c < 3; ++c) require_same(ref.channel(c), rec.channel(c));
  double total = 0.0;
  for (int c = 0; c < 3; ++c) total += sse(ref.channel(c), rec.channel(c));
  const double n = 3.0 * ref.width() * ref.height();
  return psnr_from_mse(total / n);
}

double psnr_plane(const ImagePlane& ref, const ImagePlane& rec) {
  require_same(ref, rec);
  return psnr_from_mse(sse(ref, rec) /
                       (static_cast<double>(ref.width()) * ref.height()));
}

double psnr_gray(const CfaImage& ref, const CfaImage& rec) {
  if (!(ref.pattern == rec.pattern) || ref.planes.size() != rec.planes.size()) {
    throw ComparisonError("CFA patterns differ");
  }
  double total = 0.0;
  double n = 0.0;
  for (std::size_t k = 0; k < ref.planes.size(); ++k) {
    require_same(ref.planes[k], rec.planes[k]);
    total += sse(ref.planes[k], rec.planes[k]);
    n += static_cast<double>(ref.width()) * ref.height();
  }
  return psnr_from_mse(total / n);
}

double ssim(const ImagePlane& ref, const ImagePlane& rec,
            const SsimParams& params) {
  require_same(ref, rec);
  const int win = params.window;
  const int w = ref.width();
  const int h = ref.height();
  if (w < win || h < win) {
    throw MetricError("image " + std::to_string(w) + "x" + std::to_string(h) +
                      " smaller than the SSIM window");
  }
  const int out_w = w - win + 1;
  const int out_h = h - win + 1;
  const double n = static_cast<double>(win) * win;
  std::vector<double> row_sums(static_cast<std::size_t>(out_h));

#pragma omp parallel for schedule(static)
  for (int y0 = 0; y0 < out_h; ++y0) {
    // Column sums over the window rows: x, y, x^2, y^2, xy.
    std::vector<double> sx(w), sy(w), sxx(w), syy(w), sxy(w);
    for (int x = 0; x < w; ++x) {
      double a = 0, b = 0, aa = 0, bb = 0, ab = 0;
      for (int k = 0; k < win; ++k) {
        const double p = ref.at(x, y0 + k);
        const double q = rec.at(x, y0 + k);
        a += p;
        b += q;
        aa += p * p;
        bb += q * q;
        ab += p * q;
      }
      sx[x] = a;
      sy[x] = b;
      sxx[x] = aa;
      syy[x] = bb;
      sxy[x] = ab;
    }
    double acc = 0.0;
    for (int x0 = 0; x0 < out_w; ++x0) {
      double a = 0, b = 0, aa = 0, bb = 0, ab = 0;
      for (int k = 0; k < win; ++k) {
        a += sx[x0 + k];
        b += sy[x0 + k];
        aa += sxx[x0 + k];
        bb += syy[x0 + k];
        ab += sxy[x0 + k];
      }
      const double mx = a / n, my = b / n;
      const double vx = aa / n - mx * mx;
      const double vy = bb / n - my * my;
      const double cov = ab / n - mx * my;
      const double lum = (2 * mx * my + params.c1) / (mx * mx + my * my + params.c1);
      const double cs = (vx < params.zero_variance && vy < params.zero_variance)
                            ? 1.0
                            : (2 * cov + params.c2) / (vx + vy + params.c2);
      acc += lum * cs;
    }
    row_sums[y0] = acc;
  }
  double total = 0.0;
  for (double r : row_sums) total += r;
  return total / (static_cast<double>(out_w) * out_h);
}

double ssim(const RgbImage& ref, const RgbImage& rec, const SsimParams& params) {
  return (ssim(ref.r, rec.r, params) + ssim(ref.g, rec.g, params) +
          ssim(ref.b, rec.b, params)) /
         3.0;
}

double ssim(const CfaImage& ref, const CfaImage& rec, const SsimParams& params) {
  if (!(ref.pattern == rec.pattern) || ref.planes.size() != rec.planes.size()) {
    throw ComparisonError("CFA patterns differ");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < ref.planes.size(); ++k) {
    total += ssim(ref.planes[k], rec.planes[k], params);
  }
  return total / static_cast<double>(ref.planes.size());
}

DatasetMean dataset_mean(std::span<const double> values) {
  DatasetMean m;
  double sum = 0.0;
  for (double v : values) {
    if (std::isinf(v)) {
      ++m.skipped_infinite;
      continue;
    }
    sum += v;
    ++m.used;
  }
  m.mean = m.used > 0 ? sum / m.used : 0.0;
  return m;
}

std::string format_db(double db) {
  if (std::isinf(db)) return db > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", db);
  return buf;
}

}  // namespace chromasub
