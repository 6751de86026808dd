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

#include "chromasub/image.h"

#include <algorithm>
#include <string>

namespace chromasub {

namespace {

void require_positive(int width, int height) {
  if (width <= 0 || height <= 0) {
    throw GeometryError("plane dimensions must be positive, got " +
                        std::to_string(width) + "x" + std::to_string(height));
  }
}

}  // namespace

void require_even(int width, int height) {
  if (width <= 0 || height <= 0 || width % 2 != 0 || height % 2 != 0) {
    throw GeometryError("image dimensions must be positive and even, got " +
                        std::to_string(width) + "x" + std::to_string(height));
  }
}

ImagePlane::ImagePlane(int width, int height, double fill)
    : width_(width), height_(height) {
  require_positive(width, height);
  samples_.assign(static_cast<std::size_t>(width) * height, fill);
}

ImagePlane::ImagePlane(int width, int height, std::vector<double> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
  require_positive(width, height);
  if (samples_.size() != static_cast<std::size_t>(width) * height) {
    throw GeometryError("sample count does not match " + std::to_string(width) +
                        "x" + std::to_string(height));
  }
}

double ImagePlane::clamped(int x, int y) const {
  x = std::clamp(x, 0, width_ - 1);
  y = std::clamp(y, 0, height_ - 1);
  return samples_[index(x, y)];
}

Quad block_at(const ImagePlane& plane, BlockIndex idx) {
  if (idx.bx < 0 || idx.by < 0 || idx.bx >= plane.block_cols() ||
      idx.by >= plane.block_rows()) {
    throw AddressingError("block (" + std::to_string(idx.bx) + "," +
                          std::to_string(idx.by) + ") outside " +
                          std::to_string(plane.block_cols()) + "x" +
                          std::to_string(plane.block_rows()) + " block grid");
  }
  const int x = 2 * idx.bx;
  const int y = 2 * idx.by;
  return {plane.at(x, y), plane.at(x + 1, y), plane.at(x, y + 1),
          plane.at(x + 1, y + 1)};
}

void set_block(ImagePlane& plane, BlockIndex idx, const Quad& quad) {
  block_at(plane, idx);  // bounds check
  const int x = 2 * idx.bx;
  const int y = 2 * idx.by;
  plane.at(x, y) = quad[0];
  plane.at(x + 1, y) = quad[1];
  plane.at(x, y + 1) = quad[2];
  plane.at(x + 1, y + 1) = quad[3];
}

RgbImage::RgbImage(ImagePlane r_plane, ImagePlane g_plane, ImagePlane b_plane)
    : r(std::move(r_plane)), g(std::move(g_plane)), b(std::move(b_plane)) {
  if (!r.same_geometry(g) || !r.same_geometry(b)) {
    throw GeometryError("RGB planes differ in size");
  }
  require_even(r.width(), r.height());
}

YuvImage::YuvImage(ImagePlane y_plane, ImagePlane u_plane, ImagePlane v_plane)
    : y(std::move(y_plane)), u(std::move(u_plane)), v(std::move(v_plane)) {
  if (!y.same_geometry(u) || !y.same_geometry(v)) {
    throw GeometryError("YUV planes differ in size");
  }
  require_even(y.width(), y.height());
}

SubsampledChromaImage::SubsampledChromaImage(ImagePlane u_plane,
                                             ImagePlane v_plane)
    : u_s(std::move(u_plane)), v_s(std::move(v_plane)) {
  if (!u_s.same_geometry(v_s)) {
    throw GeometryError("subsampled chroma planes differ in size");
  }
}

}  // namespace chromasub
