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

#include "chromasub/distortion.h"

#include <cmath>

#include "chromasub/error.h"

namespace chromasub {

namespace {

constexpr double kW = BilinearWeights::kSelf;
constexpr double kDegenerate = 1e-12;

}  // namespace

ResidualTerms residual_terms(const NeighborChroma& n) {
  constexpr double c = BilinearWeights::kCorner;
  constexpr double e = BilinearWeights::kEdge;
  ResidualTerms r;
  r.ubar = {c * n.tl.u + e * n.t.u + e * n.l.u,  //
            c * n.tr.u + e * n.t.u + e * n.r.u,  //
            c * n.bl.u + e * n.b.u + e * n.l.u,  //
            c * n.br.u + e * n.b.u + e * n.r.u};
  r.vbar = {c * n.tl.v + e * n.t.v + e * n.l.v,  //
            c * n.tr.v + e * n.t.v + e * n.r.v,  //
            c * n.bl.v + e * n.b.v + e * n.l.v,  //
            c * n.br.v + e * n.b.v + e * n.r.v};
  return r;
}

HessianSums hessian_sums(const CfaPattern& pattern) {
  HessianSums s;
  for (const ColorSet& set : pattern.color_sets) {
    for (Channel c : set.channels()) {
      const ChannelCoeffs k = coeffs_for(c);
      s.aa += k.a * k.a;
      s.bb += k.b * k.b;
      s.ab += k.a * k.b;
    }
  }
  return s;
}

double hessian_det(const CfaPattern& pattern) {
  const HessianSums s = hessian_sums(pattern);
  return 4.0 * std::pow(kW, 4) * (s.aa * s.bb - s.ab * s.ab);
}

double hessian_uu(const CfaPattern& pattern) {
  return 2.0 * kW * kW * hessian_sums(pattern).aa;
}

DistortionModel::DistortionModel(const CfaPattern& pattern,
                                 const ResidualTerms& residuals,
                                 const Quad& target_u, const Quad& target_v)
    : pattern_(pattern),
      residuals_(residuals),
      target_u_(target_u),
      target_v_(target_v) {
  const HessianSums s = hessian_sums(pattern);
  sum_aa_ = s.aa;
  sum_bb_ = s.bb;
  sum_ab_ = s.ab;
  if (std::abs(sum_ab_ * sum_ab_ - sum_aa_ * sum_bb_) < kDegenerate) {
    throw ModelError("pattern " + pattern.name() +
                     " gives a singular block-distortion Hessian");
  }
}

ChromaPair DistortionModel::estimate(int i, double u_s, double v_s) const {
  return {kW * u_s + residuals_.ubar[i], kW * v_s + residuals_.vbar[i]};
}

double DistortionModel::evaluate(double u_s, double v_s) const {
  double d = 0.0;
  for (int i = 0; i < 4; ++i) {
    const ChromaPair est = estimate(i, u_s, v_s);
    const double du = est.u - target_u_[i];
    const double dv = est.v - target_v_[i];
    for (Channel c : pattern_.color_sets[i].channels()) {
      const ChannelCoeffs k = coeffs_for(c);
      const double e = k.a * du + k.b * dv;
      d += e * e;
    }
  }
  return d;
}

std::pair<double, double> DistortionModel::gradient(double u_s,
                                                    double v_s) const {
  double gu = 0.0, gv = 0.0;
  for (int i = 0; i < 4; ++i) {
    const ChromaPair est = estimate(i, u_s, v_s);
    const double du = est.u - target_u_[i];
    const double dv = est.v - target_v_[i];
    for (Channel c : pattern_.color_sets[i].channels()) {
      const ChannelCoeffs k = coeffs_for(c);
      const double e = k.a * du + k.b * dv;
      gu += k.a * e;
      gv += k.b * e;
    }
  }
  return {2.0 * kW * gu, 2.0 * kW * gv};
}

DistortionModel build_model(const BlockContext& ctx) {
  return DistortionModel(ctx.pattern, residual_terms(ctx.neighbors), ctx.u,
                         ctx.v);
}

ChromaPair closed_form(const DistortionModel& model) {
  // p = sum a^2 (ubar - U) + ab (vbar - V), q = sum b^2 (vbar - V) + ab (ubar - U)
  double p = 0.0, q = 0.0;
  const ResidualTerms& r = model.residuals();
  for (int i = 0; i < 4; ++i) {
    const double du = r.ubar[i] - model.target_u()[i];
    const double dv = r.vbar[i] - model.target_v()[i];
    for (Channel c : model.pattern().color_sets[i].channels()) {
      const ChannelCoeffs k = coeffs_for(c);
      p += k.a * k.a * du + k.a * k.b * dv;
      q += k.b * k.b * dv + k.a * k.b * du;
    }
  }
  const double aa = model.sum_aa();
  const double bb = model.sum_bb();
  const double ab = model.sum_ab();
  const double denom = kW * (ab * ab - aa * bb);
  if (std::abs(denom) < kDegenerate) {
    throw ModelError("closed form denominator vanishes");
  }
  return {(bb * p - ab * q) / denom, (aa * q - ab * p) / denom};
}

}  // namespace chromasub
