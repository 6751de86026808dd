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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "chromasub/baseline.h"
#include "chromasub/reference.h"
#include "test_support.h"

namespace chromasub {
namespace {

const ImagePlane kBlock(2, 2, std::vector<double>{10, 20, 30, 40});

TEST(BaselineTest, BlockExamples) {
  EXPECT_EQ(baseline_block_value(BaselineMethod::kA, kBlock, {0, 0}), 25.0);
  EXPECT_EQ(baseline_block_value(BaselineMethod::kL, kBlock, {0, 0}), 20.0);
  EXPECT_EQ(baseline_block_value(BaselineMethod::kR, kBlock, {0, 0}), 30.0);
  EXPECT_EQ(baseline_block_value(BaselineMethod::kDirect, kBlock, {0, 0}), 10.0);
}

TEST(BaselineTest, MpegBKernelSumsToNormalization) {
  EXPECT_EQ(std::accumulate(kMpegBTaps.begin(), kMpegBTaps.end(), 0), kMpegBNorm);
  EXPECT_EQ(kMpegBTaps.size(), 13u);
}

TEST(BaselineTest, MpegBFiltersTopRowHorizontally) {
  // Impulse at column 8 of the top row; block 4 is centred on column 8.
  ImagePlane p(16, 2, 0.0);
  p.at(8, 0) = 64.0;
  EXPECT_DOUBLE_EQ(baseline_block_value(BaselineMethod::kMpegB, p, {4, 0}), 26.0);
  EXPECT_DOUBLE_EQ(baseline_block_value(BaselineMethod::kMpegB, p, {3, 0}), 5.0);
  EXPECT_DOUBLE_EQ(baseline_block_value(BaselineMethod::kMpegB, p, {2, 0}), -4.0);
  // The bottom row never contributes.
  ImagePlane q(16, 2, 0.0);
  q.at(8, 1) = 64.0;
  EXPECT_DOUBLE_EQ(baseline_block_value(BaselineMethod::kMpegB, q, {4, 0}), 0.0);
}

TEST(BaselineTest, MpegBReplicatesEdges) {
  // A step at the left border: replicated samples equal the edge value.
  ImagePlane p(4, 2, 0.0);
  p.at(0, 0) = 64.0;
  // Taps at offsets -6..0 all read column 0: 2+0-4-3+5+19+26 = 45.
  EXPECT_DOUBLE_EQ(baseline_block_value(BaselineMethod::kMpegB, p, {0, 0}), 45.0);
}

TEST(BaselineTest, ConstantPlanesArePreserved) {
  const ImagePlane p(10, 6, 128.0);
  for (BaselineMethod m : {BaselineMethod::kA, BaselineMethod::kL, BaselineMethod::kR,
                           BaselineMethod::kDirect, BaselineMethod::kMpegB}) {
    const ImagePlane out = subsample_baseline(m, p);
    EXPECT_EQ(out, ImagePlane(5, 3, 128.0)) << baseline_name(m);
  }
}

TEST(BaselineTest, AveragingMethodsStayWithinBlockRange) {
  testing::Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const ImagePlane p = testing::random_plane(rng, 2, 2);
    const Quad q = block_at(p, {0, 0});
    const auto [lo, hi] = std::minmax_element(q.begin(), q.end());
    for (BaselineMethod m : {BaselineMethod::kA, BaselineMethod::kL,
                             BaselineMethod::kR, BaselineMethod::kDirect}) {
      const double v = baseline_block_value(m, p, {0, 0});
      EXPECT_GE(v, *lo);
      EXPECT_LE(v, *hi);
    }
  }
}

TEST(BaselineTest, OutputIsQuantizedHalfResolution) {
  testing::Rng rng(2);
  const ImagePlane p = testing::random_plane(rng, 8, 6);
  const ImagePlane out = subsample_baseline(BaselineMethod::kA, p);
  EXPECT_EQ(out.width(), 4);
  EXPECT_EQ(out.height(), 3);
  for (double s : out.samples()) EXPECT_EQ(s, std::round(s));
  EXPECT_THROW(subsample_baseline(BaselineMethod::kA, ImagePlane(3, 2)), GeometryError);
}

TEST(BaselineTest, ParallelMatchesSerialReference) {
  testing::Rng rng(4);
  const ImagePlane p = testing::random_plane(rng, 40, 22);
  for (BaselineMethod m : {BaselineMethod::kA, BaselineMethod::kL, BaselineMethod::kR,
                           BaselineMethod::kDirect, BaselineMethod::kMpegB}) {
    EXPECT_EQ(subsample_baseline(m, p), reference::subsample_baseline(m, p));
  }
}

TEST(BaselineTest, ParsesNames) {
  EXPECT_EQ(parse_baseline("mpeg-b"), BaselineMethod::kMpegB);
  EXPECT_EQ(parse_baseline("Direct"), BaselineMethod::kDirect);
  EXPECT_THROW(parse_baseline("B"), ConfigError);
}

}  // namespace
}  // namespace chromasub
