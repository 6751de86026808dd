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

#include "chromasub/pipeline.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <random>
#include <ostream>
#include <set>
#include <string>

#include "chromasub/colorspace.h"
#include "chromasub/metrics.h"
#include "chromasub/pnm.h"
#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chromasub {

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  std::replace(out.begin(), out.end(), '-', '_');
  return out;
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

std::string fmt_metric(double v) {
  return std::isinf(v) ? format_db(v) : fmt("%.6f", v);
}

}  // namespace

std::string_view method_name(SubsampleMethod m) {
  switch (m) {
    case SubsampleMethod::kProposed: return "proposed";
    case SubsampleMethod::kA: return "A";
    case SubsampleMethod::kL: return "L";
    case SubsampleMethod::kR: return "R";
    case SubsampleMethod::kDirect: return "DIRECT";
    case SubsampleMethod::kMpegB: return "MPEG_B";
    case SubsampleMethod::kChenU3V2: return "CHEN_U3V2";
    case SubsampleMethod::kCd: return "CD";
  }
  return "?";
}

SubsampleMethod parse_method(std::string_view name) {
  const std::string n = upper(name);
  if (n == "PROPOSED") return SubsampleMethod::kProposed;
  if (n == "A") return SubsampleMethod::kA;
  if (n == "L") return SubsampleMethod::kL;
  if (n == "R") return SubsampleMethod::kR;
  if (n == "DIRECT") return SubsampleMethod::kDirect;
  if (n == "MPEG_B") return SubsampleMethod::kMpegB;
  if (n == "CHEN_U3V2" || n == "CHEN") return SubsampleMethod::kChenU3V2;
  if (n == "CD") return SubsampleMethod::kCd;
  throw ConfigError("unknown subsampling method '" + std::string(name) + "'");
}

std::vector<SubsampleMethod> methods_for(CfaKind kind) {
  std::vector<SubsampleMethod> m = {
      SubsampleMethod::kProposed, SubsampleMethod::kA,      SubsampleMethod::kL,
      SubsampleMethod::kR,        SubsampleMethod::kDirect, SubsampleMethod::kMpegB};
  if (kind == CfaKind::kBayer) m.push_back(SubsampleMethod::kChenU3V2);
  if (kind == CfaKind::kDtdi) m.push_back(SubsampleMethod::kCd);
  return m;
}

void check_method(SubsampleMethod m, CfaKind kind) {
  if (m == SubsampleMethod::kChenU3V2 && kind != CfaKind::kBayer) {
    throw ConfigError("CHEN_U3V2 applies to Bayer images only");
  }
  if (m == SubsampleMethod::kCd && kind != CfaKind::kDtdi) {
    throw ConfigError("CD applies to DTDI images only");
  }
}

ReportFormat parse_format(std::string_view name) {
  const std::string n = upper(name);
  if (n == "CSV") return ReportFormat::kCsv;
  if (n == "JSON") return ReportFormat::kJson;
  throw ConfigError("unknown report format '" + std::string(name) + "'");
}

SubsampledChromaImage subsample_with(SubsampleMethod method, const YuvImage& yuv,
                                     const CfaPattern& pattern,
                                     const SubsampleConfig& cfg,
                                     std::vector<int>* iterations) {
  check_method(method, pattern.kind);
  auto both = [&](BaselineMethod m) {
    return SubsampledChromaImage(subsample_baseline(m, yuv.u),
                                 subsample_baseline(m, yuv.v));
  };
  switch (method) {
    case SubsampleMethod::kProposed: {
      ChromaSweep sweep(yuv, pattern, cfg);
      sweep.run();
      if (iterations) *iterations = sweep.iterations();
      return sweep.result();
    }
    case SubsampleMethod::kA: return both(BaselineMethod::kA);
    case SubsampleMethod::kL: return both(BaselineMethod::kL);
    case SubsampleMethod::kR: return both(BaselineMethod::kR);
    case SubsampleMethod::kDirect: return both(BaselineMethod::kDirect);
    case SubsampleMethod::kMpegB: return both(BaselineMethod::kMpegB);
    case SubsampleMethod::kChenU3V2: {
      require_even(yuv.width(), yuv.height());
      ImagePlane u(yuv.u.block_cols(), yuv.u.block_rows());
      ImagePlane v(yuv.u.block_cols(), yuv.u.block_rows());
      for (int by = 0; by < u.height(); ++by) {
        for (int bx = 0; bx < u.width(); ++bx) {
          u.at(bx, by) = quantize_sample(block_at(yuv.u, {bx, by})[2]);
          v.at(bx, by) = quantize_sample(block_at(yuv.v, {bx, by})[1]);
        }
      }
      return {std::move(u), std::move(v)};
    }
    case SubsampleMethod::kCd:
      return {subsample_baseline(BaselineMethod::kL, yuv.u),
              subsample_baseline(BaselineMethod::kR, yuv.v)};
  }
  throw ConfigError("unknown subsampling method");
}

SubsampledChromaImage codec_roundtrip(const SubsampledChromaImage& chroma) {
  return chroma;
}

RgbImage server_rgb(const RgbImage& source, const CfaPattern& pattern) {
  if (pattern.kind == CfaKind::kRgb) return source;
  return demosaic_bilinear(mosaic(source, pattern));
}

namespace {

std::string sanitize(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '_';
  }
  return out;
}

std::vector<ReportRow> process_image(const PipelineConfig& cfg,
                                     const InputImage& input) {
  const CfaPattern& pattern = cfg.pattern;
  const RgbImage& source = input.rgb;
  require_even(source.width(), source.height());

  const bool full_color = pattern.kind == CfaKind::kRgb;
  CfaImage truth_cfa;
  if (!full_color) truth_cfa = mosaic(source, pattern);
  const YuvImage yuv = convert_image(full_color ? source : demosaic_bilinear(truth_cfa));

  std::vector<ReportRow> rows;
  for (SubsampleMethod method : cfg.methods) {
    std::vector<int> iterations;
    const auto t0 = std::chrono::steady_clock::now();
    const SubsampledChromaImage sub =
        subsample_with(method, yuv, pattern, cfg.subsample, &iterations);
    const auto t1 = std::chrono::steady_clock::now();
    const SubsampledChromaImage decoded = codec_roundtrip(sub);

    double mean_it = 0.0;
    int max_it = 0;
    if (!iterations.empty()) {
      double sum = 0.0;
      for (int it : iterations) {
        sum += it;
        max_it = std::max(max_it, it);
      }
      mean_it = sum / static_cast<double>(iterations.size());
    }

    for (UpsampleMethod up : cfg.upsamplers) {
      YuvImage rec_yuv(yuv.y,
                       upsample(up, decoded.u_s, yuv.width(), yuv.height()),
                       upsample(up, decoded.v_s, yuv.width(), yuv.height()));
      ReportRow row;
      row.image = input.name;
      row.method = method;
      row.upsampler = up;
      row.width = source.width();
      row.height = source.height();
      row.mean_iterations = mean_it;
      row.max_iterations = max_it;
      row.subsample_ms =
          std::chrono::duration<double, std::milli>(t1 - t0).count();
      const std::string stem = sanitize(input.name) + "_" +
                               std::string(method_name(method)) + "_" +
                               std::string(upsample_name(up));
      if (full_color) {
        const RgbImage rec = clamp_quantize(convert_image(rec_yuv));
        row.psnr_db = cpsnr(source, rec);
        row.ssim = ssim(source, rec);
        if (cfg.save_dir) write_ppm(*cfg.save_dir / (stem + ".ppm"), rec);
      } else {
        const CfaImage rec = reconstruct_cfa(rec_yuv, pattern);
        row.psnr_db = psnr_gray(truth_cfa, rec);
        row.ssim = ssim(truth_cfa, rec);
        if (cfg.save_dir) write_cfa(*cfg.save_dir / stem, rec);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

template <typename Load>
RunReport run_indexed(const PipelineConfig& cfg, std::size_t count,
                      const Load& load) {
  for (SubsampleMethod m : cfg.methods) check_method(m, cfg.pattern.kind);
  if (cfg.methods.empty() || cfg.upsamplers.empty()) {
    throw ConfigError("at least one method and one upsampler are required");
  }
  if (cfg.save_dir) std::filesystem::create_directories(*cfg.save_dir);

  std::vector<std::vector<ReportRow>> per_image(count);
  std::vector<std::optional<ImageFailure>> failures(count);
  const int n = static_cast<int>(count);
  const int jobs = std::max(1, cfg.jobs);
  // Kernels inside a worker run on that worker's thread only; the block sweep
  // itself is sequential regardless.
#pragma omp parallel for num_threads(jobs) schedule(dynamic, 1) if (jobs > 1)
  for (int i = 0; i < n; ++i) {
    std::string name;
    try {
      InputImage input = load(static_cast<std::size_t>(i));
      name = input.name;
      per_image[i] = process_image(cfg, input);
    } catch (const std::exception& e) {
      failures[i] = ImageFailure{name.empty() ? "#" + std::to_string(i) : name,
                                 e.what()};
    }
  }

  RunReport report;
  report.pattern = cfg.pattern;
  for (std::size_t i = 0; i < count; ++i) {
    for (ReportRow& r : per_image[i]) report.rows.push_back(std::move(r));
    if (failures[i]) report.failures.push_back(*failures[i]);
  }
  return report;
}

}  // namespace

RunReport run_pipeline(const PipelineConfig& cfg,
                       const std::vector<InputImage>& images) {
  return run_indexed(cfg, images.size(),
                     [&](std::size_t i) { return images[i]; });
}

RunReport run_pipeline(const PipelineConfig& cfg,
                       const std::vector<std::filesystem::path>& paths) {
  return run_indexed(cfg, paths.size(), [&](std::size_t i) {
    InputImage input;
    input.name = paths[i].filename().string();
    input.rgb = read_ppm(paths[i]);
    return input;
  });
}

std::vector<AggregateRow> RunReport::aggregates() const {
  // Keyed by first appearance so the order follows the configuration.
  std::vector<std::pair<SubsampleMethod, UpsampleMethod>> keys;
  std::map<std::pair<SubsampleMethod, UpsampleMethod>, std::vector<const ReportRow*>>
      groups;
  for (const ReportRow& r : rows) {
    const auto key = std::make_pair(r.method, r.upsampler);
    if (!groups.count(key)) keys.push_back(key);
    groups[key].push_back(&r);
  }
  std::vector<AggregateRow> out;
  for (const auto& key : keys) {
    const auto& group = groups[key];
    std::vector<double> psnrs;
    double ssim_sum = 0.0, it_sum = 0.0, ms_sum = 0.0;
    for (const ReportRow* r : group) {
      psnrs.push_back(r->psnr_db);
      ssim_sum += r->ssim;
      it_sum += r->mean_iterations;
      ms_sum += r->subsample_ms;
    }
    const DatasetMean mean = dataset_mean(psnrs);
    const double n = static_cast<double>(group.size());
    AggregateRow a;
    a.method = key.first;
    a.upsampler = key.second;
    a.mean_psnr_db = mean.used > 0 ? mean.mean : kInfinitePsnr;
    a.mean_ssim = ssim_sum / n;
    a.images = static_cast<int>(group.size());
    a.skipped_infinite = mean.skipped_infinite;
    a.mean_iterations = it_sum / n;
    a.mean_subsample_ms = ms_sum / n;
    out.push_back(a);
  }
  return out;
}

std::vector<std::string> RunReport::warnings() const {
  std::vector<std::string> out;
  for (const ReportRow& r : rows) {
    if (std::isinf(r.psnr_db)) {
      out.push_back(r.image + " " + std::string(method_name(r.method)) + "-" +
                    std::string(upsample_name(r.upsampler)) +
                    ": lossless reconstruction excluded from the PSNR mean");
    }
  }
  for (const ImageFailure& f : failures) {
    out.push_back(f.image + ": " + f.message);
  }
  return out;
}

void write_report(std::ostream& os, const RunReport& report, ReportFormat format,
                  bool include_timing) {
  const auto aggregates = report.aggregates();
  if (format == ReportFormat::kCsv) {
    os << "# schema=" << RunReport::kSchema << " pattern=" << report.pattern.name()
       << '\n';
    os << "image,method,upsampler,width,height,psnr_db,ssim,mean_iterations,"
          "max_iterations";
    if (include_timing) os << ",subsample_ms";
    os << '\n';
    for (const ReportRow& r : report.rows) {
      os << r.image << ',' << method_name(r.method) << ','
         << upsample_name(r.upsampler) << ',' << r.width << ',' << r.height << ','
         << fmt_metric(r.psnr_db) << ',' << fmt("%.6f", r.ssim) << ','
         << fmt("%.4f", r.mean_iterations) << ',' << r.max_iterations;
      if (include_timing) os << ',' << fmt("%.3f", r.subsample_ms);
      os << '\n';
    }
    for (const AggregateRow& a : aggregates) {
      os << "(mean)," << method_name(a.method) << ',' << upsample_name(a.upsampler)
         << ",," << ',' << fmt_metric(a.mean_psnr_db) << ','
         << fmt("%.6f", a.mean_ssim) << ',' << fmt("%.4f", a.mean_iterations)
         << ',';
      if (include_timing) os << ',' << fmt("%.3f", a.mean_subsample_ms);
      os << '\n';
    }
    for (const std::string& w : report.warnings()) os << "# warning: " << w << '\n';
    return;
  }

  using nlohmann::ordered_json;
  auto metric = [](double v) -> ordered_json {
    if (std::isinf(v)) return format_db(v);
    return v;
  };
  ordered_json j;
  j["schema"] = RunReport::kSchema;
  j["pattern"] = {{"kind", kind_name(report.pattern.kind)},
                  {"variant", report.pattern.variant}};
  ordered_json rows = ordered_json::array();
  for (const ReportRow& r : report.rows) {
    ordered_json row = {{"image", r.image},
                        {"method", method_name(r.method)},
                        {"upsampler", upsample_name(r.upsampler)},
                        {"width", r.width},
                        {"height", r.height},
                        {"psnr_db", metric(r.psnr_db)},
                        {"ssim", r.ssim},
                        {"mean_iterations", r.mean_iterations},
                        {"max_iterations", r.max_iterations}};
    if (include_timing) row["subsample_ms"] = r.subsample_ms;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  ordered_json aggs = ordered_json::array();
  for (const AggregateRow& a : aggregates) {
    ordered_json row = {{"method", method_name(a.method)},
                        {"upsampler", upsample_name(a.upsampler)},
                        {"images", a.images},
                        {"skipped_infinite", a.skipped_infinite},
                        {"mean_psnr_db", metric(a.mean_psnr_db)},
                        {"mean_ssim", a.mean_ssim},
                        {"mean_iterations", a.mean_iterations}};
    if (include_timing) row["mean_subsample_ms"] = a.mean_subsample_ms;
    aggs.push_back(std::move(row));
  }
  j["aggregates"] = std::move(aggs);
  ordered_json failures = ordered_json::array();
  for (const ImageFailure& f : report.failures) {
    failures.push_back({{"image", f.image}, {"message", f.message}});
  }
  j["failures"] = std::move(failures);
  j["warnings"] = report.warnings();
  os << j.dump(2) << '\n';
}

std::vector<ConvexityRow> verify_convexity() {
  std::vector<ConvexityRow> rows;
  for (const CfaPattern& p : all_patterns()) {
    ConvexityRow row;
    row.pattern = p;
    row.det = hessian_det(p);
    row.d2_uu = hessian_uu(p);
    // The determinant only depends on the multiset of channels per tile, so
    // every variant of a kind shares its constant.
    switch (p.kind) {
      case CfaKind::kRgb: row.expected = 86.2040; break;
      case CfaKind::kBayer: row.expected = 6.6216; break;
      case CfaKind::kDtdi: row.expected = 26.4863; break;
    }
    row.pass = row.det > 0.0 && row.d2_uu > 0.0 &&
               (!row.expected ||
                std::abs(row.det - *row.expected) <= kConvexityTolerance);
    rows.push_back(row);
  }
  return rows;
}

void write_convexity(std::ostream& os, const std::vector<ConvexityRow>& rows) {
  os << "pattern,det_hessian,d2_uu,expected,result\n";
  for (const ConvexityRow& r : rows) {
    os << r.pattern.name() << ',' << fmt("%.4f", r.det) << ','
       << fmt("%.4f", r.d2_uu) << ','
       << (r.expected ? fmt("%.4f", *r.expected) : std::string("-")) << ','
       << (r.pass ? "PASS" : "FAIL") << '\n';
  }
}

AuditReport audit_solver(const std::vector<InputImage>& images,
                         const CfaPattern& pattern, const AuditConfig& cfg) {
  AuditReport rep;
  double gap_sum = 0.0, improvement_sum = 0.0;
  bool first = true;
  for (std::size_t img_i = 0; img_i < images.size(); ++img_i) {
    const YuvImage yuv = convert_image(server_rgb(images[img_i].rgb, pattern));
    ChromaSweep sweep(yuv, pattern, cfg.subsample);
    const std::size_t cols = static_cast<std::size_t>(yuv.width() / 2);
    const std::size_t total = cols * static_cast<std::size_t>(yuv.height() / 2);
    const std::size_t want =
        std::min(total, static_cast<std::size_t>(std::max(0, cfg.sample_blocks)));

    // Partial Fisher-Yates over block indices.
    std::vector<std::size_t> order(total);
    for (std::size_t i = 0; i < total; ++i) order[i] = i;
    std::mt19937_64 rng(cfg.seed + img_i);
    for (std::size_t i = 0; i < want; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng() % (total - i));
      std::swap(order[i], order[j]);
    }
    std::set<std::size_t> chosen(order.begin(),
                                 order.begin() + static_cast<long>(want));

    std::size_t linear = 0;
    while (!sweep.done()) {
      if (chosen.count(linear)) {
        const DistortionModel model = build_model(sweep.next_context());
        const SolverResult local = solve(model, cfg.subsample.solver);
        const LatticeMinimum global = brute_force(model);
        const ChromaPair cf = closed_form(model);
        const double start = model.evaluate(quantize_sample(cf.u),
                                            quantize_sample(cf.v));
        const double gap = local.distortion - global.distortion;
        const double improvement = start - local.distortion;
        ++rep.blocks;
        if (gap <= 1e-9 * std::max(1.0, global.distortion)) {
          ++rep.hits;
        } else {
          rep.miss_gaps.push_back(gap);
        }
        gap_sum += gap;
        rep.max_gap = std::max(rep.max_gap, gap);
        improvement_sum += improvement;
        rep.min_improvement = first ? improvement
                                    : std::min(rep.min_improvement, improvement);
        rep.max_iterations = std::max(rep.max_iterations, local.iterations);
        first = false;
      }
      sweep.step();
      ++linear;
    }
  }
  if (rep.blocks > 0) {
    rep.hit_rate = static_cast<double>(rep.hits) / rep.blocks;
    rep.mean_gap = gap_sum / rep.blocks;
    rep.mean_improvement = improvement_sum / rep.blocks;
  }
  rep.pass = rep.blocks > 0 && rep.hit_rate >= cfg.hit_rate_threshold &&
             rep.min_improvement >= 0.0;
  return rep;
}

void write_audit(std::ostream& os, const AuditReport& r) {
  os << "blocks " << r.blocks << '\n'
     << "hits " << r.hits << '\n'
     << "hit_rate " << fmt("%.3f", r.hit_rate) << '\n'
     << "mean_gap " << fmt("%.6f", r.mean_gap) << '\n'
     << "max_gap " << fmt("%.6f", r.max_gap) << '\n'
     << "mean_improvement " << fmt("%.6f", r.mean_improvement) << '\n'
     << "min_improvement " << fmt("%.6f", r.min_improvement) << '\n'
     << "max_iterations " << r.max_iterations << '\n';
  if (!r.miss_gaps.empty()) {
    os << "miss_gaps";
    for (double g : r.miss_gaps) os << ' ' << fmt("%.6f", g);
    os << '\n';
  }
  os << "result " << (r.pass ? "PASS" : "FAIL") << '\n';
}

BlockTrace trace_block(const RgbImage& image, const CfaPattern& pattern,
                       BlockIndex block, const SubsampleConfig& cfg) {
  const YuvImage yuv = convert_image(server_rgb(image, pattern));
  block_at(yuv.u, block);  // bounds check
  ChromaSweep sweep(yuv, pattern, cfg);
  while (!(sweep.next_block() == block)) sweep.step();

  const DistortionModel model = build_model(sweep.next_context());
  SolverConfig solver = cfg.solver;
  solver.emit_trace = true;
  BlockTrace t;
  t.block = block;
  t.closed_form = closed_form(model);
  t.solver = solve(model, solver);
  t.global = brute_force(model);
  t.surface = distortion_surface(model);
  return t;
}

void write_surface(std::ostream& os, const BlockTrace& trace) {
  os << "u,v,distortion\n";
  char buf[96];
  for (int u = 0; u < 256; ++u) {
    for (int v = 0; v < 256; ++v) {
      std::snprintf(buf, sizeof buf, "%d,%d,%.10g\n", u, v,
                    trace.surface[static_cast<std::size_t>(u) * 256 + v]);
      os << buf;
    }
  }
}

}  // namespace chromasub
