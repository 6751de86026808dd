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

#ifndef CHROMASUB_CFA_PATTERN_H_
#define CHROMASUB_CFA_PATTERN_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chromasub {

enum class Channel : std::uint8_t { kR = 0, kG = 1, kB = 2 };

enum class CfaKind : std::uint8_t { kRgb, kBayer, kDtdi };

char channel_name(Channel c);
std::string_view kind_name(CfaKind kind);
// Accepts "rgb", "bayer", "dtdi" (case-insensitive). Throws ConfigError.
CfaKind parse_kind(std::string_view name);

// The channels recorded at one pixel of a 2x2 tile. DTDI sets list G first.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr ColorSet(std::initializer_list<Channel> channels) {
    for (Channel c : channels) channels_[size_++] = c;
  }

  std::span<const Channel> channels() const { return {channels_.data(), size_}; }
  std::size_t size() const { return size_; }
  Channel operator[](std::size_t i) const { return channels_[i]; }
  bool contains(Channel c) const;

  friend bool operator==(const ColorSet& a, const ColorSet& b) {
    if (a.size_ != b.size_) return false;
    for (std::size_t i = 0; i < a.size_; ++i)
      if (a.channels_[i] != b.channels_[i]) return false;
    return true;
  }

 private:
  std::array<Channel, 3> channels_{};
  std::size_t size_ = 0;
};

// Per-pixel color sets S_1..S_4 of a 2x2 tile in zigzag order.
//
//   Bayer a: G R / B G    b: R G / G B    c: B G / G R    d: G B / R G
//   DTDI  a: GB GR / GB GR                b: GR GB / GR GB
//   RGB:     every pixel carries R, G and B
struct CfaPattern {
  CfaKind kind = CfaKind::kRgb;
  std::string variant = "default";
  std::array<ColorSet, 4> color_sets;

  // Number of stored values per pixel (1 for Bayer, 2 for DTDI, 3 for RGB).
  std::size_t samples_per_pixel() const { return color_sets[0].size(); }
  // Total squared-error terms a 2x2 block contributes.
  std::size_t terms_per_block() const;
  // Color set of the pixel at (x, y); the tile repeats every two pixels.
  const ColorSet& at_pixel(int x, int y) const {
    return color_sets[static_cast<std::size_t>((y & 1) * 2 + (x & 1))];
  }
  std::string name() const;

  friend bool operator==(const CfaPattern&, const CfaPattern&) = default;
};

// RGB takes "default" (or "a"); Bayer takes a..d; DTDI takes a..b.
// Throws ConfigError for an unknown variant.
CfaPattern pattern_for(CfaKind kind, std::string_view variant = "default");

// The seven supported layouts: RGB, Bayer a-d, DTDI a-b.
std::vector<CfaPattern> all_patterns();

}  // namespace chromasub

#endif  // CHROMASUB_CFA_PATTERN_H_
