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

#ifndef CHROMASUB_PIPELINE_H_
#define CHROMASUB_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chromasub/baseline.h"
#include "chromasub/cfa.h"
#include "chromasub/cfa_pattern.h"
#include "chromasub/image.h"
#include "chromasub/solver.h"
#include "chromasub/upsample.h"

namespace chromasub {

// Server-side chroma subsamplers the harness can compare.
enum class SubsampleMethod {
  kProposed,
  kA,
  kL,
  kR,
  kDirect,
  kMpegB,
  kChenU3V2,  // Bayer only: (U_3, V_2)
  kCd,        // DTDI only: U by 4:2:0(L), V by 4:2:0(R)
};

std::string_view method_name(SubsampleMethod m);
// Accepts proposed, A, L, R, DIRECT, MPEG_B, CHEN_U3V2, CD (case-insensitive).
SubsampleMethod parse_method(std::string_view name);
// Every method valid for the pattern kind, proposed first.
std::vector<SubsampleMethod> methods_for(CfaKind kind);
// Throws ConfigError for CHEN_U3V2 without Bayer or CD without DTDI.
void check_method(SubsampleMethod m, CfaKind kind);

enum class ReportFormat { kCsv, kJson };
ReportFormat parse_format(std::string_view name);

struct PipelineConfig {
  CfaPattern pattern;
  std::vector<SubsampleMethod> methods{SubsampleMethod::kProposed};
  std::vector<UpsampleMethod> upsamplers{UpsampleMethod::kBilinear};
  SubsampleConfig subsample;
  int jobs = 1;
  // When set, reconstructions are written here (PPM, or CFA PGM + sidecar).
  std::optional<std::filesystem::path> save_dir;
};

// Applies one server-side method to a converted image. Output is quantized.
SubsampledChromaImage subsample_with(SubsampleMethod method, const YuvImage& yuv,
                                     const CfaPattern& pattern,
                                     const SubsampleConfig& cfg,
                                     std::vector<int>* iterations = nullptr);

// The encoder/decoder stage. Identity for now; a real codec would replace
// this pass-through.
SubsampledChromaImage codec_roundtrip(const SubsampledChromaImage& chroma);

struct ReportRow {
  std::string image;
  SubsampleMethod method = SubsampleMethod::kProposed;
  UpsampleMethod upsampler = UpsampleMethod::kBilinear;
  int width = 0;
  int height = 0;
  // CPSNR for RGB; PSNR over the recorded samples for Bayer and DTDI.
  double psnr_db = 0.0;
  double ssim = 0.0;
  // Proposed method only; zero otherwise.
  double mean_iterations = 0.0;
  int max_iterations = 0;
  // Wall-clock time of the subsampling step.
  double subsample_ms = 0.0;
};

struct ImageFailure {
  std::string image;
  std::string message;
};

struct AggregateRow {
  SubsampleMethod method = SubsampleMethod::kProposed;
  UpsampleMethod upsampler = UpsampleMethod::kBilinear;
  double mean_psnr_db = 0.0;
  double mean_ssim = 0.0;
  int images = 0;
  int skipped_infinite = 0;
  double mean_iterations = 0.0;
  double mean_subsample_ms = 0.0;
};

struct RunReport {
  static constexpr std::string_view kSchema = "chromasub.run/1";

  CfaPattern pattern;
  // Ordered by input image, then method, then upsampler, as configured.
  std::vector<ReportRow> rows;
  std::vector<ImageFailure> failures;

  std::vector<AggregateRow> aggregates() const;
  std::vector<std::string> warnings() const;
};

struct InputImage {
  std::string name;
  RgbImage rgb;
};

// Server subsample -> codec -> client upsample -> reconstruct -> metrics.
// Images are processed by cfg.jobs workers; one failing image is recorded in
// RunReport::failures and does not stop the others.
RunReport run_pipeline(const PipelineConfig& cfg,
                       const std::vector<InputImage>& images);
RunReport run_pipeline(const PipelineConfig& cfg,
                       const std::vector<std::filesystem::path>& paths);

// include_timing=false drops the timing column, which is the only
// nondeterministic part of a report.
void write_report(std::ostream& os, const RunReport& report, ReportFormat format,
                  bool include_timing = true);

struct ConvexityRow {
  CfaPattern pattern;
  double det = 0.0;
  double d2_uu = 0.0;
  std::optional<double> expected;
  bool pass = false;
};

inline constexpr double kConvexityTolerance = 1e-3;

// Hessian determinant of every supported pattern, checked against the
// reference constants of its kind (RGB, Bayer, DTDI).
std::vector<ConvexityRow> verify_convexity();
void write_convexity(std::ostream& os, const std::vector<ConvexityRow>& rows);

struct AuditConfig {
  int sample_blocks = 1000;
  std::uint64_t seed = 1;
  double hit_rate_threshold = 0.95;
  SubsampleConfig subsample;
};

struct AuditReport {
  int blocks = 0;
  int hits = 0;
  double hit_rate = 0.0;
  // Distortion gap (local minus global) of every miss.
  std::vector<double> miss_gaps;
  double mean_gap = 0.0;
  double max_gap = 0.0;
  // Distortion at the quantized closed form minus the solver's.
  double mean_improvement = 0.0;
  double min_improvement = 0.0;
  int max_iterations = 0;
  bool pass = false;
};

// Samples blocks from each image's sweep and checks the solver against the
// exhaustive lattice minimum.
AuditReport audit_solver(const std::vector<InputImage>& images,
                         const CfaPattern& pattern, const AuditConfig& cfg);
void write_audit(std::ostream& os, const AuditReport& report);

struct BlockTrace {
  BlockIndex block;
  ChromaPair closed_form;
  SolverResult solver;
  LatticeMinimum global;
  std::vector<double> surface;  // [u * 256 + v]
};

// Runs the sweep up to `block` and records the full distortion surface and
// descent path of that block. Throws AddressingError for a bad index.
BlockTrace trace_block(const RgbImage& image, const CfaPattern& pattern,
                       BlockIndex block, const SubsampleConfig& cfg = {});
// "u,v,distortion" CSV with a header row.
void write_surface(std::ostream& os, const BlockTrace& trace);

// Server-side RGB for a pattern: the source for RGB, the bilinear
// demosaic of its mosaic otherwise.
RgbImage server_rgb(const RgbImage& source, const CfaPattern& pattern);

}  // namespace chromasub

#endif  // CHROMASUB_PIPELINE_H_
