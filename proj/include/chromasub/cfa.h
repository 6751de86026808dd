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

#ifndef CHROMASUB_CFA_H_
#define CHROMASUB_CFA_H_

#include <filesystem>
#include <vector>

#include "chromasub/cfa_pattern.h"
#include "chromasub/image.h"

namespace chromasub {

// Color-filter-array image. planes[k] holds, at every pixel, the k-th channel
// of that pixel's color set, so Bayer has one plane, DTDI two (G, then R/B)
// and RGB three.
struct CfaImage {
  CfaPattern pattern;
  std::vector<ImagePlane> planes;

  int width() const { return planes.empty() ? 0 : planes[0].width(); }
  int height() const { return planes.empty() ? 0 : planes[0].height(); }
  double value(int slot, int x, int y) const { return planes[slot].at(x, y); }

  friend bool operator==(const CfaImage&, const CfaImage&) = default;
};

CfaImage mosaic(const RgbImage& img, const CfaPattern& pattern);

// Fills each missing channel with the mean of the nearest samples of that
// channel (3x3 neighbourhood, borders replicated). Recorded channels pass
// through unchanged.
RgbImage demosaic_bilinear(const CfaImage& cfa);

// Converts the upsampled YUV image back to RGB and keeps the channels the
// pattern records. With quantize set the result is clamp_quantize'd.
CfaImage reconstruct_cfa(const YuvImage& upsampled, const CfaPattern& pattern,
                         bool quantize = true);

// Sum of squared differences over the recorded channels of one 2x2 block.
// Throws ComparisonError on pattern or geometry mismatch.
double cfa_block_distortion(const CfaImage& ref, const CfaImage& rec,
                            BlockIndex idx);

// CFA persistence: one PGM per plane plus a JSON sidecar
// {"kind", "variant", "width", "height", "planes"}. `stem` gets ".json",
// planes get ".pgm" (single plane) or ".<k>.pgm". Samples are written
// clamp_quantize'd.
void write_cfa(const std::filesystem::path& stem, const CfaImage& cfa);
CfaImage read_cfa(const std::filesystem::path& stem);

}  // namespace chromasub

#endif  // CHROMASUB_CFA_H_
