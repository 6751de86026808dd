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

#ifndef CHROMASUB_SOLVER_H_
#define CHROMASUB_SOLVER_H_

#include <array>
#include <optional>
#include <ostream>
#include <vector>

#include "chromasub/baseline.h"
#include "chromasub/distortion.h"
#include "chromasub/error.h"
#include "chromasub/image.h"

namespace chromasub {

struct TraceStep {
  int k = 0;
  int u = 0;
  int v = 0;
  double distortion = 0.0;
};

struct SolverConfig {
  int max_iterations = 1024;
  bool emit_trace = false;
};

struct SolverResult {
  int u_s = 0;
  int v_s = 0;
  double distortion = 0.0;
  // Accepted moves after the initial point.
  int iterations = 0;
  // Initial point first; present when SolverConfig::emit_trace is set.
  std::vector<TraceStep> trace;
};

// Raised when the iteration cap is hit. Strict descent over a finite lattice
// always terminates, so this signals a bug.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, SolverResult best)
      : Error(what), best_(std::move(best)) {}
  const SolverResult& best_so_far() const { return best_; }

 private:
  SolverResult best_;
};

// Scan order of the 8-neighbourhood; among equal minima the earliest wins.
inline constexpr std::array<std::array<int, 2>, 8> kNeighborOffsets = {{
    {0, 1}, {0, -1}, {1, 0}, {-1, 0}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

// Integer descent on [0,255]^2. Starts from the quantized closed-form point
// and moves to the best of the eight neighbours while that strictly lowers
// the distortion.
SolverResult solve(const DistortionModel& model, const SolverConfig& cfg = {});

struct LatticeMinimum {
  int u = 0;
  int v = 0;
  double distortion = 0.0;
};

// Exhaustive minimum over all 256x256 integer pairs, ties broken by smallest
// u then smallest v. OpenMP-parallel over u.
LatticeMinimum brute_force(const DistortionModel& model);

// Full 256x256 distortion grid, indexed [u * 256 + v].
std::vector<double> distortion_surface(const DistortionModel& model);

// One "k u v D" record per line.
void write_trace(std::ostream& os, const std::vector<TraceStep>& trace);

struct SubsampleConfig {
  SolverConfig solver;
  // Baseline used for the pre-pass that supplies future neighbours.
  BaselineMethod future_method = BaselineMethod::kA;
};

// Row-major block sweep of the proposed subsampler.
//
// Each block reads its top/left neighbours from blocks already finalized by
// the sweep and its right/bottom neighbours from the baseline pre-pass.
// Neighbour coordinates outside the block grid are clamped; a clamp that
// lands on the block itself uses the block's pre-pass pair. The sweep is
// inherently sequential within one image.
class ChromaSweep {
 public:
  // Throws GeometryError for odd-sized input.
  ChromaSweep(const YuvImage& yuv, const CfaPattern& pattern,
              const SubsampleConfig& cfg = {});

  BlockIndex next_block() const { return next_; }
  bool done() const;

  // Context of the next block given the blocks finalized so far.
  BlockContext next_context() const;
  // Solves the next block, stores the result and advances.
  SolverResult step();
  // Runs step() until done.
  void run();

  const SubsampledChromaImage& prepass() const { return prepass_; }
  const SubsampledChromaImage& result() const { return out_; }
  // Iteration counts of every solved block, in row-major order.
  const std::vector<int>& iterations() const { return iterations_; }

 private:
  const YuvImage& yuv_;
  CfaPattern pattern_;
  SubsampleConfig cfg_;
  SubsampledChromaImage prepass_;
  SubsampledChromaImage out_;
  BlockIndex next_{};
  std::vector<int> iterations_;
};

// Builds the context of block idx from explicit neighbour planes: known
// neighbours from `finalized`, future ones from `prepass`. Exposed for tests
// and tools; ChromaSweep uses the same rule.
BlockContext gather_context(const YuvImage& yuv, const CfaPattern& pattern,
                            const SubsampledChromaImage& finalized,
                            const SubsampledChromaImage& prepass,
                            BlockIndex idx);

SubsampledChromaImage subsample_image(const YuvImage& yuv,
                                      const CfaPattern& pattern,
                                      const SubsampleConfig& cfg = {});

}  // namespace chromasub

#endif  // CHROMASUB_SOLVER_H_
