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

#include "chromasub/solver.h"

#include <algorithm>
#include <array>
#include <iomanip>
#include <string>

#include "chromasub/colorspace.h"

namespace chromasub {

namespace {

constexpr int kLatticeMax = 255;
constexpr int kLatticeSize = kLatticeMax + 1;

bool in_lattice(int u, int v) {
  return u >= 0 && u <= kLatticeMax && v >= 0 && v <= kLatticeMax;
}

}  // namespace

SolverResult solve(const DistortionModel& model, const SolverConfig& cfg) {
  const ChromaPair start = closed_form(model);
  SolverResult res;
  res.u_s = static_cast<int>(quantize_sample(start.u));
  res.v_s = static_cast<int>(quantize_sample(start.v));
  res.distortion = model.evaluate(res.u_s, res.v_s);
  if (cfg.emit_trace) res.trace.push_back({0, res.u_s, res.v_s, res.distortion});

  while (true) {
    int best_u = res.u_s, best_v = res.v_s;
    bool found = false;
    double best_d = 0.0;
    for (const auto& [m, n] : kNeighborOffsets) {
      const int u = res.u_s + m;
      const int v = res.v_s + n;
      if (!in_lattice(u, v)) continue;
      const double d = model.evaluate(u, v);
      if (!found || d < best_d) {
        found = true;
        best_d = d;
        best_u = u;
        best_v = v;
      }
    }
    if (!found || best_d >= res.distortion) return res;
    if (res.iterations >= cfg.max_iterations) {
      throw SolverError("descent exceeded " + std::to_string(cfg.max_iterations) +
                            " iterations",
                        res);
    }
    res.u_s = best_u;
    res.v_s = best_v;
    res.distortion = best_d;
    ++res.iterations;
    if (cfg.emit_trace) {
      res.trace.push_back({res.iterations, res.u_s, res.v_s, res.distortion});
    }
  }
}

LatticeMinimum brute_force(const DistortionModel& model) {
  std::array<int, kLatticeSize> row_v{};
  std::array<double, kLatticeSize> row_d{};
#pragma omp parallel for schedule(static)
  for (int u = 0; u < kLatticeSize; ++u) {
    int best_v = 0;
    double best_d = model.evaluate(u, 0);
    for (int v = 1; v < kLatticeSize; ++v) {
      const double d = model.evaluate(u, v);
      if (d < best_d) {
        best_d = d;
        best_v = v;
      }
    }
    row_v[u] = best_v;
    row_d[u] = best_d;
  }
  LatticeMinimum best{0, row_v[0], row_d[0]};
  for (int u = 1; u < kLatticeSize; ++u) {
    if (row_d[u] < best.distortion) best = {u, row_v[u], row_d[u]};
  }
  return best;
}

std::vector<double> distortion_surface(const DistortionModel& model) {
  std::vector<double> grid(static_cast<std::size_t>(kLatticeSize) * kLatticeSize);
#pragma omp parallel for schedule(static)
  for (int u = 0; u < kLatticeSize; ++u) {
    for (int v = 0; v < kLatticeSize; ++v) {
      grid[static_cast<std::size_t>(u) * kLatticeSize + v] = model.evaluate(u, v);
    }
  }
  return grid;
}

void write_trace(std::ostream& os, const std::vector<TraceStep>& trace) {
  const auto flags = os.flags();
  const auto prec = os.precision();
  os << std::setprecision(10);
  for (const TraceStep& s : trace) {
    os << s.k << ' ' << s.u << ' ' << s.v << ' ' << s.distortion << '\n';
  }
  os.flags(flags);
  os.precision(prec);
}

BlockContext gather_context(const YuvImage& yuv, const CfaPattern& pattern,
                            const SubsampledChromaImage& finalized,
                            const SubsampledChromaImage& prepass,
                            BlockIndex idx) {
  BlockContext ctx;
  ctx.pattern = pattern;
  ctx.y = block_at(yuv.y, idx);
  ctx.u = block_at(yuv.u, idx);
  ctx.v = block_at(yuv.v, idx);

  const int cols = prepass.width();
  const int rows = prepass.height();
  auto pick = [&](int dx, int dy) -> ChromaPair {
    const int nx = std::clamp(idx.bx + dx, 0, cols - 1);
    const int ny = std::clamp(idx.by + dy, 0, rows - 1);
    const bool earlier = ny < idx.by || (ny == idx.by && nx < idx.bx);
    const SubsampledChromaImage& src = earlier ? finalized : prepass;
    return {src.u_s.at(nx, ny), src.v_s.at(nx, ny)};
  };
  NeighborChroma& n = ctx.neighbors;
  n.tl = pick(-1, -1);
  n.t = pick(0, -1);
  n.tr = pick(1, -1);
  n.l = pick(-1, 0);
  n.r = pick(1, 0);
  n.bl = pick(-1, 1);
  n.b = pick(0, 1);
  n.br = pick(1, 1);
  return ctx;
}

ChromaSweep::ChromaSweep(const YuvImage& yuv, const CfaPattern& pattern,
                         const SubsampleConfig& cfg)
    : yuv_(yuv), pattern_(pattern), cfg_(cfg) {
  require_even(yuv.width(), yuv.height());
  prepass_ = SubsampledChromaImage(subsample_baseline(cfg.future_method, yuv.u),
                                   subsample_baseline(cfg.future_method, yuv.v));
  out_ = prepass_;
  iterations_.reserve(static_cast<std::size_t>(prepass_.width()) *
                      prepass_.height());
}

bool ChromaSweep::done() const { return next_.by >= prepass_.height(); }

BlockContext ChromaSweep::next_context() const {
  if (done()) throw AddressingError("sweep already finished");
  return gather_context(yuv_, pattern_, out_, prepass_, next_);
}

SolverResult ChromaSweep::step() {
  const DistortionModel model = build_model(next_context());
  SolverResult res = solve(model, cfg_.solver);
  out_.u_s.at(next_.bx, next_.by) = res.u_s;
  out_.v_s.at(next_.bx, next_.by) = res.v_s;
  iterations_.push_back(res.iterations);
  if (++next_.bx == prepass_.width()) {
    next_.bx = 0;
    ++next_.by;
  }
  return res;
}

void ChromaSweep::run() {
  while (!done()) step();
}

SubsampledChromaImage subsample_image(const YuvImage& yuv,
                                      const CfaPattern& pattern,
                                      const SubsampleConfig& cfg) {
  ChromaSweep sweep(yuv, pattern, cfg);
  sweep.run();
  return sweep.result();
}

}  // namespace chromasub
