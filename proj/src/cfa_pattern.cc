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

#include "chromasub/cfa_pattern.h"

#include <algorithm>
#include <cctype>

#include "chromasub/error.h"

namespace chromasub {

namespace {

constexpr Channel R = Channel::kR;
constexpr Channel G = Channel::kG;
constexpr Channel B = Channel::kB;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

char channel_name(Channel c) {
  switch (c) {
    case Channel::kR: return 'R';
    case Channel::kG: return 'G';
    case Channel::kB: return 'B';
  }
  return '?';
}

std::string_view kind_name(CfaKind kind) {
  switch (kind) {
    case CfaKind::kRgb: return "rgb";
    case CfaKind::kBayer: return "bayer";
    case CfaKind::kDtdi: return "dtdi";
  }
  return "?";
}

CfaKind parse_kind(std::string_view name) {
  const std::string n = lower(name);
  if (n == "rgb") return CfaKind::kRgb;
  if (n == "bayer") return CfaKind::kBayer;
  if (n == "dtdi") return CfaKind::kDtdi;
  throw ConfigError("unknown image kind '" + std::string(name) + "'");
}

bool ColorSet::contains(Channel c) const {
  for (std::size_t i = 0; i < size_; ++i)
    if (channels_[i] == c) return true;
  return false;
}

std::size_t CfaPattern::terms_per_block() const {
  std::size_t n = 0;
  for (const ColorSet& s : color_sets) n += s.size();
  return n;
}

std::string CfaPattern::name() const {
  if (kind == CfaKind::kRgb) return "rgb";
  return std::string(kind_name(kind)) + "-" + variant;
}

CfaPattern pattern_for(CfaKind kind, std::string_view variant) {
  const std::string v = lower(variant);
  CfaPattern p;
  p.kind = kind;
  switch (kind) {
    case CfaKind::kRgb:
      if (v != "default" && v != "a" && !v.empty()) break;
      p.variant = "default";
      p.color_sets = {ColorSet{R, G, B}, ColorSet{R, G, B}, ColorSet{R, G, B},
                      ColorSet{R, G, B}};
      return p;
    case CfaKind::kBayer:
      p.variant = v == "default" || v.empty() ? "a" : v;
      if (p.variant == "a") {
        p.color_sets = {ColorSet{G}, ColorSet{R}, ColorSet{B}, ColorSet{G}};
      } else if (p.variant == "b") {
        p.color_sets = {ColorSet{R}, ColorSet{G}, ColorSet{G}, ColorSet{B}};
      } else if (p.variant == "c") {
        p.color_sets = {ColorSet{B}, ColorSet{G}, ColorSet{G}, ColorSet{R}};
      } else if (p.variant == "d") {
        p.color_sets = {ColorSet{G}, ColorSet{B}, ColorSet{R}, ColorSet{G}};
      } else {
        break;
      }
      return p;
    case CfaKind::kDtdi:
      p.variant = v == "default" || v.empty() ? "a" : v;
      if (p.variant == "a") {
        p.color_sets = {ColorSet{G, B}, ColorSet{G, R}, ColorSet{G, B},
                        ColorSet{G, R}};
      } else if (p.variant == "b") {
        p.color_sets = {ColorSet{G, R}, ColorSet{G, B}, ColorSet{G, R},
                        ColorSet{G, B}};
      } else {
        break;
      }
      return p;
  }
  throw ConfigError("unknown variant '" + std::string(variant) + "' for " +
                    std::string(kind_name(kind)));
}

std::vector<CfaPattern> all_patterns() {
  return {pattern_for(CfaKind::kRgb),        pattern_for(CfaKind::kBayer, "a"),
          pattern_for(CfaKind::kBayer, "b"), pattern_for(CfaKind::kBayer, "c"),
          pattern_for(CfaKind::kBayer, "d"), pattern_for(CfaKind::kDtdi, "a"),
          pattern_for(CfaKind::kDtdi, "b")};
}

}  // namespace chromasub
