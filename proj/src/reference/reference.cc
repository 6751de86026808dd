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

#include "chromasub/reference.h"

#include <algorithm>
#include <cmath>

#include "chromasub/colorspace.h"

namespace chromasub::reference {

YuvImage convert_image(const RgbImage& img) {
  YuvImage out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const Triple yuv =
          rgb_to_yuv({img.r.at(x, y), img.g.at(x, y), img.b.at(x, y)});
      out.y.at(x, y) = yuv[0];
      out.u.at(x, y) = yuv[1];
      out.v.at(x, y) = yuv[2];
    }
  }
  return out;
}

RgbImage convert_image(const YuvImage& img) {
  RgbImage out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const Triple rgb =
          yuv_to_rgb({img.y.at(x, y), img.u.at(x, y), img.v.at(x, y)});
      out.r.at(x, y) = rgb[0];
      out.g.at(x, y) = rgb[1];
      out.b.at(x, y) = rgb[2];
    }
  }
  return out;
}

ImagePlane subsample_baseline(BaselineMethod method, const ImagePlane& chroma) {
  require_even(chroma.width(), chroma.height());
  ImagePlane out(chroma.block_cols(), chroma.block_rows());
  for (int by = 0; by < out.height(); ++by) {
    for (int bx = 0; bx < out.width(); ++bx) {
      out.at(bx, by) =
          quantize_sample(baseline_block_value(method, chroma, {bx, by}));
    }
  }
  return out;
}

// Generic resampling: output sample x maps to source coordinate x/2 - 1/4.
ImagePlane upsample(UpsampleMethod method, const ImagePlane& sub) {
  const int sw = sub.width();
  const int sh = sub.height();
  ImagePlane out(2 * sw, 2 * sh);
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      const double fx = x / 2.0 - 0.25;
      const double fy = y / 2.0 - 0.25;
      double value = 0.0;
      switch (method) {
        case UpsampleMethod::kCopy:
          value = sub.at(x / 2, y / 2);
          break;
        case UpsampleMethod::kBilinear: {
          const int x0 = static_cast<int>(std::floor(fx));
          const int y0 = static_cast<int>(std::floor(fy));
          const double tx = fx - x0;
          const double ty = fy - y0;
          value = (1 - tx) * (1 - ty) * sub.clamped(x0, y0) +
                  tx * (1 - ty) * sub.clamped(x0 + 1, y0) +
                  (1 - tx) * ty * sub.clamped(x0, y0 + 1) +
                  tx * ty * sub.clamped(x0 + 1, y0 + 1);
          break;
        }
        case UpsampleMethod::kBicubic: {
          const int x0 = static_cast<int>(std::floor(fx));
          const int y0 = static_cast<int>(std::floor(fy));
          for (int j = y0 - 1; j <= y0 + 2; ++j) {
            for (int i = x0 - 1; i <= x0 + 2; ++i) {
              value += cubic_weight(fx - i) * cubic_weight(fy - j) *
                       sub.clamped(i, j);
            }
          }
          break;
        }
      }
      out.at(x, y) = value;
    }
  }
  return out;
}

RgbImage demosaic_bilinear(const CfaImage& cfa) {
  const int w = cfa.width();
  const int h = cfa.height();
  RgbImage out(w, h);
  for (int c = 0; c < 3; ++c) {
    const Channel ch = static_cast<Channel>(c);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        double sum = 0.0;
        int count = 0;
        bool own = false;
        const ColorSet& here = cfa.pattern.at_pixel(x, y);
        for (std::size_t k = 0; k < here.size(); ++k) {
          if (here[k] == ch) {
            out.channel(c).at(x, y) = cfa.planes[k].at(x, y);
            own = true;
          }
        }
        if (own) continue;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            const int nx = std::clamp(x + dx, 0, w - 1);
            const int ny = std::clamp(y + dy, 0, h - 1);
            const ColorSet& there = cfa.pattern.at_pixel(nx, ny);
            for (std::size_t k = 0; k < there.size(); ++k) {
              if (there[k] == ch) {
                sum += cfa.planes[k].at(nx, ny);
                ++count;
              }
            }
          }
        }
        out.channel(c).at(x, y) = count > 0 ? sum / count : 0.0;
      }
    }
  }
  return out;
}

double cpsnr(const RgbImage& ref, const RgbImage& rec) {
  double total = 0.0;
  for (int c = 0; c < 3; ++c) {
    for (int y = 0; y < ref.height(); ++y) {
      for (int x = 0; x < ref.width(); ++x) {
        const double d = ref.channel(c).at(x, y) - rec.channel(c).at(x, y);
        total += d * d;
      }
    }
  }
  return psnr_from_mse(total / (3.0 * ref.width() * ref.height()));
}

double ssim(const ImagePlane& ref, const ImagePlane& rec,
            const SsimParams& params) {
  const int win = params.window;
  const double n = static_cast<double>(win) * win;
  double total = 0.0;
  int count = 0;
  for (int y0 = 0; y0 + win <= ref.height(); ++y0) {
    for (int x0 = 0; x0 + win <= ref.width(); ++x0) {
      double mx = 0, my = 0;
      for (int y = y0; y < y0 + win; ++y) {
        for (int x = x0; x < x0 + win; ++x) {
          mx += ref.at(x, y);
          my += rec.at(x, y);
        }
      }
      mx /= n;
      my /= n;
      double vx = 0, vy = 0, cov = 0;
      for (int y = y0; y < y0 + win; ++y) {
        for (int x = x0; x < x0 + win; ++x) {
          const double dx = ref.at(x, y) - mx;
          const double dy = rec.at(x, y) - my;
          vx += dx * dx;
          vy += dy * dy;
          cov += dx * dy;
        }
      }
      vx /= n;
      vy /= n;
      cov /= n;
      const double lum = (2 * mx * my + params.c1) / (mx * mx + my * my + params.c1);
      const double cs = (vx < params.zero_variance && vy < params.zero_variance)
                            ? 1.0
                            : (2 * cov + params.c2) / (vx + vy + params.c2);
      total += lum * cs;
      ++count;
    }
  }
  if (count == 0) throw MetricError("image smaller than the SSIM window");
  return total / count;
}

LatticeMinimum brute_force(const DistortionModel& model) {
  LatticeMinimum best{0, 0, model.evaluate(0, 0)};
  for (int u = 0; u <= 255; ++u) {
    for (int v = 0; v <= 255; ++v) {
      const double d = model.evaluate(u, v);
      if (d < best.distortion) best = {u, v, d};
    }
  }
  return best;
}

}  // namespace chromasub::reference
