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

#ifndef CHROMASUB_IMAGE_H_
#define CHROMASUB_IMAGE_H_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "chromasub/error.h"

namespace chromasub {

// Block coordinates: pixel coordinates divided by two.
struct BlockIndex {
  int bx = 0;
  int by = 0;

  friend bool operator==(const BlockIndex&, const BlockIndex&) = default;
};

// Four samples of a 2x2 block in zigzag order: top-left, top-right,
// bottom-left, bottom-right.
using Quad = std::array<double, 4>;

// One channel of an image. Samples are kept at full precision; quantization
// to 8-bit integers only happens through clamp_quantize.
class ImagePlane {
 public:
  ImagePlane() = default;
  // Throws GeometryError unless both dimensions are positive. Evenness is
  // required of full-resolution planes only (see require_even), since a
  // subsampled plane of a 300x450 image is 150x225.
  ImagePlane(int width, int height, double fill = 0.0);
  ImagePlane(int width, int height, std::vector<double> samples);

  int width() const { return width_; }
  int height() const { return height_; }
  int block_cols() const { return width_ / 2; }
  int block_rows() const { return height_ / 2; }
  bool empty() const { return samples_.empty(); }

  double at(int x, int y) const { return samples_[index(x, y)]; }
  double& at(int x, int y) { return samples_[index(x, y)]; }

  // Replicates the nearest edge sample for out-of-range coordinates.
  double clamped(int x, int y) const;

  std::span<const double> row(int y) const {
    return {samples_.data() + static_cast<std::size_t>(y) * width_,
            static_cast<std::size_t>(width_)};
  }
  std::span<double> row(int y) {
    return {samples_.data() + static_cast<std::size_t>(y) * width_,
            static_cast<std::size_t>(width_)};
  }
  std::span<const double> samples() const { return samples_; }
  std::span<double> samples() { return samples_; }

  bool same_geometry(const ImagePlane& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const ImagePlane&, const ImagePlane&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * width_ + x;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<double> samples_;
};

// Extracts the block at idx in zigzag order. Throws AddressingError when idx
// lies outside the block grid.
Quad block_at(const ImagePlane& plane, BlockIndex idx);

// Writes a zigzag quad back into the block at idx.
void set_block(ImagePlane& plane, BlockIndex idx, const Quad& quad);

struct RgbImage {
  ImagePlane r, g, b;

  RgbImage() = default;
  // Throws GeometryError if the planes differ in size or are odd-sized.
  RgbImage(ImagePlane r_plane, ImagePlane g_plane, ImagePlane b_plane);
  RgbImage(int width, int height, double fill = 0.0)
      : r(width, height, fill), g(width, height, fill), b(width, height, fill) {}

  int width() const { return r.width(); }
  int height() const { return r.height(); }
  const ImagePlane& channel(int c) const { return c == 0 ? r : (c == 1 ? g : b); }
  ImagePlane& channel(int c) { return c == 0 ? r : (c == 1 ? g : b); }

  friend bool operator==(const RgbImage&, const RgbImage&) = default;
};

struct YuvImage {
  ImagePlane y, u, v;

  YuvImage() = default;
  YuvImage(ImagePlane y_plane, ImagePlane u_plane, ImagePlane v_plane);
  YuvImage(int width, int height, double fill = 0.0)
      : y(width, height, fill), u(width, height, fill), v(width, height, fill) {}

  int width() const { return y.width(); }
  int height() const { return y.height(); }

  friend bool operator==(const YuvImage&, const YuvImage&) = default;
};

// 4:2:0 chroma: one (U, V) pair per 2x2 luma block.
struct SubsampledChromaImage {
  ImagePlane u_s, v_s;

  SubsampledChromaImage() = default;
  SubsampledChromaImage(ImagePlane u_plane, ImagePlane v_plane);

  int width() const { return u_s.width(); }
  int height() const { return u_s.height(); }

  friend bool operator==(const SubsampledChromaImage&,
                         const SubsampledChromaImage&) = default;
};

// Throws GeometryError unless the dimensions tile exactly into 2x2 blocks.
void require_even(int width, int height);

}  // namespace chromasub

#endif  // CHROMASUB_IMAGE_H_
