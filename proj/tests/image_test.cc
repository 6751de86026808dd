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

#include <set>

#include "chromasub/cfa_pattern.h"
#include "chromasub/image.h"
#include "test_support.h"

namespace chromasub {
namespace {

TEST(BlockAtTest, ExtractsZigzagQuad) {
  ImagePlane p(2, 2, std::vector<double>{10, 20, 30, 40});
  EXPECT_EQ(block_at(p, {0, 0}), (Quad{10, 20, 30, 40}));
}

TEST(BlockAtTest, OffsetsByTwoPixelsPerBlock) {
  ImagePlane p(4, 2, std::vector<double>{1, 2, 3, 4, 5, 6, 7, 8});
  EXPECT_EQ(block_at(p, {1, 0}), (Quad{3, 4, 7, 8}));
}

TEST(BlockAtTest, RejectsOutOfRangeIndex) {
  ImagePlane p(4, 2);
  EXPECT_THROW(block_at(p, {2, 0}), AddressingError);
  EXPECT_THROW(block_at(p, {0, 1}), AddressingError);
  EXPECT_THROW(block_at(p, {-1, 0}), AddressingError);
}

TEST(BlockAtTest, BlocksPartitionThePlane) {
  testing::Rng rng(7);
  const ImagePlane p = testing::random_plane(rng, 12, 8);
  ImagePlane rebuilt(12, 8, -1.0);
  std::multiset<double> seen;
  for (int by = 0; by < p.block_rows(); ++by) {
    for (int bx = 0; bx < p.block_cols(); ++bx) {
      const Quad q = block_at(p, {bx, by});
      seen.insert(q.begin(), q.end());
      set_block(rebuilt, {bx, by}, q);
    }
  }
  EXPECT_EQ(rebuilt, p);
  EXPECT_EQ(seen.size(), p.samples().size());
}

TEST(ImageTest, OddImagesAreRejectedAtIngestion) {
  EXPECT_THROW(RgbImage(ImagePlane(3, 2), ImagePlane(3, 2), ImagePlane(3, 2)),
               GeometryError);
  EXPECT_THROW(require_even(4, 5), GeometryError);
  EXPECT_THROW(ImagePlane(0, 2), GeometryError);
  EXPECT_THROW(ImagePlane(2, 2, std::vector<double>{1, 2, 3}), GeometryError);
  // Half-resolution planes of even images may be odd.
  EXPECT_NO_THROW(ImagePlane(3, 5));
}

TEST(ImageTest, MismatchedPlanesAreRejected) {
  EXPECT_THROW(YuvImage(ImagePlane(4, 4), ImagePlane(4, 2), ImagePlane(4, 4)),
               GeometryError);
}

TEST(PatternTest, BayerVariantA) {
  const CfaPattern p = pattern_for(CfaKind::kBayer, "a");
  EXPECT_EQ(p.color_sets[0], ColorSet{Channel::kG});
  EXPECT_EQ(p.color_sets[1], ColorSet{Channel::kR});
  EXPECT_EQ(p.color_sets[2], ColorSet{Channel::kB});
  EXPECT_EQ(p.color_sets[3], ColorSet{Channel::kG});
}

TEST(PatternTest, DtdiVariantA) {
  const CfaPattern p = pattern_for(CfaKind::kDtdi, "a");
  const ColorSet gb{Channel::kG, Channel::kB};
  const ColorSet gr{Channel::kG, Channel::kR};
  EXPECT_EQ(p.color_sets, (std::array<ColorSet, 4>{gb, gr, gb, gr}));
}

TEST(PatternTest, RgbIsFullColor) {
  const CfaPattern p = pattern_for(CfaKind::kRgb);
  for (const ColorSet& s : p.color_sets) {
    EXPECT_EQ(s, (ColorSet{Channel::kR, Channel::kG, Channel::kB}));
  }
}

TEST(PatternTest, UnknownVariantIsConfigError) {
  EXPECT_THROW(pattern_for(CfaKind::kBayer, "e"), ConfigError);
  EXPECT_THROW(pattern_for(CfaKind::kDtdi, "c"), ConfigError);
  EXPECT_THROW(pattern_for(CfaKind::kRgb, "b"), ConfigError);
  EXPECT_THROW(parse_kind("xyz"), ConfigError);
}

TEST(PatternTest, InvariantsHoldForEveryLayout) {
  for (const CfaPattern& p : all_patterns()) {
    SCOPED_TRACE(p.name());
    std::array<int, 3> pixels_with{};
    for (const ColorSet& s : p.color_sets) {
      for (Channel c : s.channels()) ++pixels_with[static_cast<int>(c)];
    }
    switch (p.kind) {
      case CfaKind::kRgb:
        EXPECT_EQ(pixels_with, (std::array<int, 3>{4, 4, 4}));
        break;
      case CfaKind::kBayer:
        for (const ColorSet& s : p.color_sets) EXPECT_EQ(s.size(), 1u);
        EXPECT_EQ(pixels_with, (std::array<int, 3>{1, 2, 1}));
        break;
      case CfaKind::kDtdi:
        for (const ColorSet& s : p.color_sets) {
          EXPECT_EQ(s.size(), 2u);
          EXPECT_TRUE(s.contains(Channel::kG));
        }
        EXPECT_EQ(pixels_with, (std::array<int, 3>{2, 4, 2}));
        break;
    }
  }
}

TEST(PatternTest, TileRepeatsEveryTwoPixels) {
  const CfaPattern p = pattern_for(CfaKind::kBayer, "b");
  EXPECT_EQ(p.at_pixel(0, 0), p.color_sets[0]);
  EXPECT_EQ(p.at_pixel(3, 0), p.color_sets[1]);
  EXPECT_EQ(p.at_pixel(4, 5), p.color_sets[2]);
  EXPECT_EQ(p.at_pixel(7, 7), p.color_sets[3]);
}

}  // namespace
}  // namespace chromasub
