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

#ifndef CHROMASUB_DISTORTION_H_
#define CHROMASUB_DISTORTION_H_

#include <array>
#include <utility>

#include "chromasub/cfa_pattern.h"
#include "chromasub/image.h"

namespace chromasub {

// Chroma-to-color gains of the YUV-to-RGB conversion: a channel c changes by
// a_c * dU + b_c * dV when the chroma moves by (dU, dV).
struct ChannelCoeffs {
  double a = 0.0;
  double b = 0.0;
};

inline constexpr std::array<ChannelCoeffs, 3> kChannelCoeffs = {{
    {0.0, 1.596},     // R
    {-0.391, -0.813}, // G
    {2.018, 0.0},     // B
}};

inline constexpr ChannelCoeffs coeffs_for(Channel c) {
  return kChannelCoeffs[static_cast<std::size_t>(c)];
}

// Bilinear weights estimating the four chroma samples of a block from its own
// subsampled value and three surrounding subsampled sites. Sites sit at block
// centres, so every output sample is a quarter block away from the nearest
// one on each axis.
struct BilinearWeights {
  static constexpr double kSelf = 9.0 / 16.0;
  static constexpr double kCorner = 1.0 / 16.0;
  static constexpr double kEdge = 3.0 / 16.0;
};

struct ChromaPair {
  double u = 0.0;
  double v = 0.0;

  friend bool operator==(const ChromaPair&, const ChromaPair&) = default;
};

// The eight subsampled neighbours of a block. The first four are already
// final when blocks are processed in row-major order; the other four come
// from a baseline pre-pass.
struct NeighborChroma {
  ChromaPair tl, t, tr, l;  // known
  ChromaPair r, bl, b, br;  // future
};

struct BlockContext {
  CfaPattern pattern;
  Quad y{}, u{}, v{};  // zigzag order
  NeighborChroma neighbors;
};

// Neighbour-only part of each estimate: U'_i = 9/16 U_s + ubar_i.
struct ResidualTerms {
  Quad ubar{}, vbar{};
};

ResidualTerms residual_terms(const NeighborChroma& n);

// Quadratic block distortion
//
//   D(U_s, V_s) = sum_i sum_{c in S_i} [a_c (w U_s + ubar_i - U_i)
//                                       + b_c (w V_s + vbar_i - V_i)]^2
//
// with w = 9/16. It is the squared error, over the channels the pattern
// records at each pixel, between the block and its reconstruction from
// bilinearly upsampled chroma.
class DistortionModel {
 public:
  DistortionModel(const CfaPattern& pattern, const ResidualTerms& residuals,
                  const Quad& target_u, const Quad& target_v);

  const CfaPattern& pattern() const { return pattern_; }
  const ResidualTerms& residuals() const { return residuals_; }
  const Quad& target_u() const { return target_u_; }
  const Quad& target_v() const { return target_v_; }

  // Estimated chroma at block position i for candidate pair (u_s, v_s).
  ChromaPair estimate(int i, double u_s, double v_s) const;

  double evaluate(double u_s, double v_s) const;
  std::pair<double, double> gradient(double u_s, double v_s) const;

  // Sums over all (i, c in S_i) of a_c^2, b_c^2 and a_c b_c.
  double sum_aa() const { return sum_aa_; }
  double sum_bb() const { return sum_bb_; }
  double sum_ab() const { return sum_ab_; }

 private:
  CfaPattern pattern_;
  ResidualTerms residuals_;
  Quad target_u_{}, target_v_{};
  double sum_aa_ = 0.0, sum_bb_ = 0.0, sum_ab_ = 0.0;
};

// Throws ModelError when the pattern's Hessian is singular.
DistortionModel build_model(const BlockContext& ctx);

struct HessianSums {
  double aa = 0.0, bb = 0.0, ab = 0.0;
};
HessianSums hessian_sums(const CfaPattern& pattern);

// 4 w^4 (sum a^2 * sum b^2 - (sum ab)^2), w = 9/16.
double hessian_det(const CfaPattern& pattern);
// d^2 D / dU_s^2 = 2 w^2 sum a^2.
double hessian_uu(const CfaPattern& pattern);

// Real-valued minimizer of the model (the critical point of D). Throws
// ModelError if the denominator is below 1e-12 in magnitude.
ChromaPair closed_form(const DistortionModel& model);

}  // namespace chromasub

#endif  // CHROMASUB_DISTORTION_H_
