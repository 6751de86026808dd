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

#ifndef CHROMASUB_TESTS_TEST_SUPPORT_H_
#define CHROMASUB_TESTS_TEST_SUPPORT_H_

// Generators and independent oracles shared by the unit and acceptance
// tests. Nothing here calls into the code paths it is used to check.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "chromasub/cfa_pattern.h"
#include "chromasub/distortion.h"
#include "chromasub/image.h"

namespace chromasub::testing {

inline std::filesystem::path data_dir() { return CHROMASUB_TEST_DATA_DIR; }

inline std::vector<std::filesystem::path> fixture_images() {
  return {data_dir() / "astronaut.ppm", data_dir() / "coffee.ppm",
          data_dir() / "chelsea.ppm", data_dir() / "motorcycle.ppm"};
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// Chroma values scattered around a common centre, the way neighbouring
// blocks of a natural image look. `spread` bounds the deviation.
inline BlockContext random_context(Rng& rng, const CfaPattern& pattern,
                                   double spread = 30.0) {
  const double cu = rng.uniform(40, 215);
  const double cv = rng.uniform(40, 215);
  auto pair = [&] {
    return ChromaPair{cu + rng.uniform(-spread, spread),
                      cv + rng.uniform(-spread, spread)};
  };
  BlockContext ctx;
  ctx.pattern = pattern;
  for (int i = 0; i < 4; ++i) {
    const ChromaPair p = pair();
    ctx.u[i] = p.u;
    ctx.v[i] = p.v;
    ctx.y[i] = rng.uniform(16, 235);
  }
  NeighborChroma& n = ctx.neighbors;
  n.tl = pair(); n.t = pair(); n.tr = pair(); n.l = pair();
  n.r = pair(); n.bl = pair(); n.b = pair(); n.br = pair();
  return ctx;
}

// Anything in [0, 255] for every value, no spatial correlation.
inline BlockContext wild_context(Rng& rng, const CfaPattern& pattern) {
  BlockContext ctx;
  ctx.pattern = pattern;
  auto pair = [&] { return ChromaPair{rng.uniform(0, 255), rng.uniform(0, 255)}; };
  for (int i = 0; i < 4; ++i) {
    ctx.u[i] = rng.uniform(0, 255);
    ctx.v[i] = rng.uniform(0, 255);
    ctx.y[i] = rng.uniform(16, 235);
  }
  NeighborChroma& n = ctx.neighbors;
  n.tl = pair(); n.t = pair(); n.tr = pair(); n.l = pair();
  n.r = pair(); n.bl = pair(); n.b = pair(); n.br = pair();
  return ctx;
}

// Chroma-to-color gains read off the YUV-to-RGB matrix rows.
inline std::pair<double, double> gains(Channel c) {
  switch (c) {
    case Channel::kR: return {0.0, 1.596};
    case Channel::kG: return {-0.391, -0.813};
    case Channel::kB: return {2.018, 0.0};
  }
  return {0.0, 0.0};
}

// Estimates written out from bilinear interpolation on the 3x3 site grid,
// independent of the library's residual bookkeeping. Sites are indexed
// [row][col] with the block itself at [1][1].
inline std::array<std::array<double, 2>, 4> estimates_by_interpolation(
    const BlockContext& ctx, double u_s, double v_s) {
  const NeighborChroma& n = ctx.neighbors;
  const std::array<std::array<ChromaPair, 3>, 3> site = {{
      {n.tl, n.t, n.tr},
      {n.l, ChromaPair{u_s, v_s}, n.r},
      {n.bl, n.b, n.br},
  }};
  std::array<std::array<double, 2>, 4> est{};
  // Pixel i of the block sits at site coordinate (1 -/+ 1/4, 1 -/+ 1/4).
  const std::array<std::array<double, 2>, 4> pos = {{
      {0.75, 0.75}, {1.25, 0.75}, {0.75, 1.25}, {1.25, 1.25}}};
  for (int i = 0; i < 4; ++i) {
    const double fx = pos[i][0], fy = pos[i][1];
    const int x0 = static_cast<int>(std::floor(fx));
    const int y0 = static_cast<int>(std::floor(fy));
    const double tx = fx - x0, ty = fy - y0;
    for (int k = 0; k < 2; ++k) {
      auto get = [&](int r, int c) { return k == 0 ? site[r][c].u : site[r][c].v; };
      est[i][k] = (1 - tx) * (1 - ty) * get(y0, x0) + tx * (1 - ty) * get(y0, x0 + 1) +
                  (1 - tx) * ty * get(y0 + 1, x0) + tx * ty * get(y0 + 1, x0 + 1);
    }
  }
  return est;
}

// Block distortion summed term by term from the interpolated estimates.
inline double oracle_distortion(const BlockContext& ctx, double u_s, double v_s) {
  const auto est = estimates_by_interpolation(ctx, u_s, v_s);
  double d = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (Channel c : ctx.pattern.color_sets[i].channels()) {
      const auto [a, b] = gains(c);
      const double e = a * (est[i][0] - ctx.u[i]) + b * (est[i][1] - ctx.v[i]);
      d += e * e;
    }
  }
  return d;
}

// The Bayer (a) distortion spelled out channel by channel:
// (G1-G1')^2 + (R2-R2')^2 + (B3-B3')^2 + (G4-G4')^2.
inline double bayer_a_distortion(const BlockContext& ctx, double u_s, double v_s) {
  const auto est = estimates_by_interpolation(ctx, u_s, v_s);
  auto du = [&](int i) { return ctx.u[i] - est[i][0]; };
  auto dv = [&](int i) { return ctx.v[i] - est[i][1]; };
  const double g1 = -0.391 * du(0) - 0.813 * dv(0);
  const double r2 = 1.596 * dv(1);
  const double b3 = 2.018 * du(2);
  const double g4 = -0.391 * du(3) - 0.813 * dv(3);
  return g1 * g1 + r2 * r2 + b3 * b3 + g4 * g4;
}

// Minimizer from the least-squares normal equations of the linear residuals
// r = alpha U_s + beta V_s + gamma, solved with Eigen.
inline ChromaPair least_squares_minimizer(const BlockContext& ctx) {
  std::vector<std::array<double, 3>> rows;
  const auto at0 = estimates_by_interpolation(ctx, 0.0, 0.0);
  const auto at1u = estimates_by_interpolation(ctx, 1.0, 0.0);
  const auto at1v = estimates_by_interpolation(ctx, 0.0, 1.0);
  for (int i = 0; i < 4; ++i) {
    for (Channel c : ctx.pattern.color_sets[i].channels()) {
      const auto [a, b] = gains(c);
      const double gamma = a * (at0[i][0] - ctx.u[i]) + b * (at0[i][1] - ctx.v[i]);
      const double alpha = a * (at1u[i][0] - at0[i][0]) + b * (at1u[i][1] - at0[i][1]);
      const double beta = a * (at1v[i][0] - at0[i][0]) + b * (at1v[i][1] - at0[i][1]);
      rows.push_back({alpha, beta, gamma});
    }
  }
  Eigen::MatrixXd a(rows.size(), 2);
  Eigen::VectorXd rhs(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    a(static_cast<Eigen::Index>(k), 0) = rows[k][0];
    a(static_cast<Eigen::Index>(k), 1) = rows[k][1];
    rhs(static_cast<Eigen::Index>(k)) = -rows[k][2];
  }
  const Eigen::Vector2d x = a.colPivHouseholderQr().solve(rhs);
  return {x(0), x(1)};
}

// Central differences of the oracle distortion.
inline std::pair<double, double> finite_difference_gradient(const BlockContext& ctx,
                                                            double u, double v,
                                                            double h = 1e-4) {
  return {(oracle_distortion(ctx, u + h, v) - oracle_distortion(ctx, u - h, v)) / (2 * h),
          (oracle_distortion(ctx, u, v + h) - oracle_distortion(ctx, u, v - h)) / (2 * h)};
}

// Exhaustive lattice minimum of the oracle distortion (ties: smallest u, v).
struct OracleMinimum {
  int u = 0, v = 0;
  double d = 0.0;
};
inline OracleMinimum oracle_lattice_minimum(const BlockContext& ctx) {
  OracleMinimum best{0, 0, oracle_distortion(ctx, 0, 0)};
  for (int u = 0; u <= 255; ++u) {
    for (int v = 0; v <= 255; ++v) {
      const double d = oracle_distortion(ctx, u, v);
      if (d < best.d) best = {u, v, d};
    }
  }
  return best;
}

inline ImagePlane random_plane(Rng& rng, int w, int h, double lo = 0, double hi = 255) {
  ImagePlane p(w, h);
  for (double& s : p.samples()) s = rng.uniform(lo, hi);
  return p;
}

inline ImagePlane random_int_plane(Rng& rng, int w, int h) {
  ImagePlane p(w, h);
  for (double& s : p.samples()) s = rng.integer(0, 255);
  return p;
}

inline RgbImage random_rgb(Rng& rng, int w, int h) {
  return RgbImage(random_int_plane(rng, w, h), random_int_plane(rng, w, h),
                  random_int_plane(rng, w, h));
}

// Smooth image with texture: sums of low-frequency sinusoids, integer valued.
inline RgbImage smooth_rgb(Rng& rng, int w, int h) {
  RgbImage img(w, h);
  for (int c = 0; c < 3; ++c) {
    const double fx = rng.uniform(0.02, 0.2), fy = rng.uniform(0.02, 0.2);
    const double ph = rng.uniform(0, 6.28);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const double s = 128 + 90 * std::sin(fx * x + ph) * std::cos(fy * y) +
                         20 * std::sin(0.7 * x + 0.3 * y + c);
        img.channel(c).at(x, y) = std::round(std::clamp(s, 0.0, 255.0));
      }
    }
  }
  return img;
}

}  // namespace chromasub::testing

#endif  // CHROMASUB_TESTS_TEST_SUPPORT_H_
