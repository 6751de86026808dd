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

#include "chromasub/cfa.h"

#include <fstream>
#include <string>

#include "json.hpp"

#include "chromasub/colorspace.h"
#include "chromasub/error.h"
#include "chromasub/pnm.h"

namespace chromasub {

namespace {

int slot_of(const ColorSet& set, Channel c) {
  for (std::size_t k = 0; k < set.size(); ++k)
    if (set[k] == c) return static_cast<int>(k);
  return -1;
}

void require_comparable(const CfaImage& a, const CfaImage& b) {
  if (!(a.pattern == b.pattern)) {
    throw ComparisonError("CFA patterns differ: " + a.pattern.name() + " vs " +
                          b.pattern.name());
  }
  if (a.planes.size() != b.planes.size() || a.width() != b.width() ||
      a.height() != b.height()) {
    throw ComparisonError("CFA geometries differ");
  }
}

}  // namespace

CfaImage mosaic(const RgbImage& img, const CfaPattern& pattern) {
  require_even(img.width(), img.height());
  CfaImage out;
  out.pattern = pattern;
  const std::size_t slots = pattern.samples_per_pixel();
  out.planes.assign(slots, ImagePlane(img.width(), img.height()));
  const int w = img.width();
  const int h = img.height();
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const ColorSet& set = pattern.at_pixel(x, y);
      for (std::size_t k = 0; k < slots; ++k) {
        out.planes[k].at(x, y) = img.channel(static_cast<int>(set[k])).at(x, y);
      }
    }
  }
  return out;
}

RgbImage demosaic_bilinear(const CfaImage& cfa) {
  const int w = cfa.width();
  const int h = cfa.height();
  require_even(w, h);
  const CfaPattern& pattern = cfa.pattern;
  RgbImage out(w, h);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const ColorSet& here = pattern.at_pixel(x, y);
      for (int c = 0; c < 3; ++c) {
        const Channel ch = static_cast<Channel>(c);
        const int own = slot_of(here, ch);
        if (own >= 0) {
          out.channel(c).at(x, y) = cfa.planes[own].at(x, y);
          continue;
        }
        double sum = 0.0;
        int count = 0;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            const int nx = std::clamp(x + dx, 0, w - 1);
            const int ny = std::clamp(y + dy, 0, h - 1);
            const int k = slot_of(pattern.at_pixel(nx, ny), ch);
            if (k < 0) continue;
            sum += cfa.planes[k].at(nx, ny);
            ++count;
          }
        }
        out.channel(c).at(x, y) = count > 0 ? sum / count : 0.0;
      }
    }
  }
  return out;
}

CfaImage reconstruct_cfa(const YuvImage& upsampled, const CfaPattern& pattern,
                         bool quantize) {
  const int w = upsampled.width();
  const int h = upsampled.height();
  require_even(w, h);
  CfaImage out;
  out.pattern = pattern;
  const std::size_t slots = pattern.samples_per_pixel();
  out.planes.assign(slots, ImagePlane(w, h));
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const Triple rgb = yuv_to_rgb(
          {upsampled.y.at(x, y), upsampled.u.at(x, y), upsampled.v.at(x, y)});
      const ColorSet& set = pattern.at_pixel(x, y);
      for (std::size_t k = 0; k < slots; ++k) {
        const double value = rgb[static_cast<std::size_t>(set[k])];
        out.planes[k].at(x, y) = quantize ? quantize_sample(value) : value;
      }
    }
  }
  return out;
}

double cfa_block_distortion(const CfaImage& ref, const CfaImage& rec,
                            BlockIndex idx) {
  require_comparable(ref, rec);
  double d = 0.0;
  for (std::size_t k = 0; k < ref.planes.size(); ++k) {
    const Quad a = block_at(ref.planes[k], idx);
    const Quad b = block_at(rec.planes[k], idx);
    for (int i = 0; i < 4; ++i) d += (a[i] - b[i]) * (a[i] - b[i]);
  }
  return d;
}

namespace {

std::filesystem::path plane_path(const std::filesystem::path& stem,
                                 std::size_t k, std::size_t count) {
  std::string name = stem.filename().string();
  name += count == 1 ? ".pgm" : "." + std::to_string(k) + ".pgm";
  return stem.parent_path() / name;
}

std::filesystem::path sidecar_path(const std::filesystem::path& stem) {
  return stem.parent_path() / (stem.filename().string() + ".json");
}

}  // namespace

void write_cfa(const std::filesystem::path& stem, const CfaImage& cfa) {
  nlohmann::json side;
  side["kind"] = std::string(kind_name(cfa.pattern.kind));
  side["variant"] = cfa.pattern.variant;
  side["width"] = cfa.width();
  side["height"] = cfa.height();
  nlohmann::json planes = nlohmann::json::array();
  for (std::size_t k = 0; k < cfa.planes.size(); ++k) {
    const auto path = plane_path(stem, k, cfa.planes.size());
    write_pgm(path, cfa.planes[k]);
    planes.push_back(path.filename().string());
  }
  side["planes"] = planes;
  std::ofstream os(sidecar_path(stem));
  if (!os) throw IoError("cannot write " + sidecar_path(stem).string());
  os << side.dump(2) << '\n';
}

CfaImage read_cfa(const std::filesystem::path& stem) {
  const auto side_path = sidecar_path(stem);
  std::ifstream is(side_path);
  if (!is) throw IoError("cannot open " + side_path.string());
  nlohmann::json side;
  try {
    is >> side;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed CFA sidecar " + side_path.string() + ": " + e.what());
  }
  CfaImage cfa;
  try {
    cfa.pattern = pattern_for(parse_kind(side.at("kind").get<std::string>()),
                              side.at("variant").get<std::string>());
    const int w = side.at("width").get<int>();
    const int h = side.at("height").get<int>();
    const std::size_t count = cfa.pattern.samples_per_pixel();
    for (std::size_t k = 0; k < count; ++k) {
      ImagePlane plane = read_pgm(plane_path(stem, k, count));
      if (plane.width() != w || plane.height() != h) {
        throw GeometryError("CFA plane size disagrees with sidecar");
      }
      cfa.planes.push_back(std::move(plane));
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed CFA sidecar " + side_path.string() + ": " + e.what());
  }
  return cfa;
}

}  // namespace chromasub
