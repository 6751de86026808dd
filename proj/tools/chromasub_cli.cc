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

// Command-line front end: run, verify-convexity, audit-solver, trace-block.
//
// Any flag may also come from a key=value file given with --config; flags on
// the command line win.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chromasub/cfa_pattern.h"
#include "chromasub/error.h"
#include "chromasub/pipeline.h"
#include "chromasub/pnm.h"

namespace {

using namespace chromasub;

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Turns "key = value" lines into "--key=value" arguments. Blank lines and
// lines starting with '#' are ignored.
std::vector<std::string> config_args(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open config file " + path);
  std::vector<std::string> args;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value == "true") {
      args.push_back("--" + key);
    } else if (value != "false") {
      args.push_back("--" + key + "=" + value);
    }
  }
  return args;
}

// Splices config-file arguments in right after the subcommand so that the
// command line, which follows, takes precedence.
std::vector<std::string> merge_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string config;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i),
                 args.begin() + static_cast<long>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      config = args[i].substr(9);
      args.erase(args.begin() + static_cast<long>(i));
      break;
    }
  }
  if (config.empty()) return args;
  const auto extra = config_args(config);
  const std::size_t at = args.empty() ? 0 : 1;
  args.insert(args.begin() + static_cast<long>(at), extra.begin(), extra.end());
  return args;
}

struct CommonOptions {
  std::string kind = "rgb";
  std::string variant = "default";
  std::string future_method = "A";
  int max_iterations = 1024;

  void add(CLI::App* app) {
    app->add_option("--kind", kind, "Image kind: rgb, bayer, dtdi");
    app->add_option("--variant", variant,
                    "Pattern variant: default (rgb), a-d (bayer), a-b (dtdi)");
    app->add_option("--future-method", future_method,
                    "Baseline supplying future neighbours: A, L, R, DIRECT, MPEG_B");
    app->add_option("--max-iterations", max_iterations, "Solver iteration cap")
        ->check(CLI::PositiveNumber);
  }

  CfaPattern pattern() const { return pattern_for(parse_kind(kind), variant); }

  SubsampleConfig subsample() const {
    SubsampleConfig cfg;
    cfg.future_method = parse_baseline(future_method);
    cfg.solver.max_iterations = max_iterations;
    return cfg;
  }
};

// Writes through `fn` to --out when given, stdout otherwise.
template <typename Fn>
void emit(const std::string& out, Fn fn) {
  if (out.empty() || out == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream os(out, std::ios::binary);
  if (!os) throw IoError("cannot write " + out);
  fn(os);
}

std::vector<InputImage> load_images(const std::vector<std::string>& paths) {
  std::vector<InputImage> images;
  for (const auto& p : paths) {
    images.push_back({std::filesystem::path(p).filename().string(), read_ppm(p)});
  }
  return images;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chroma subsampling toolkit for RGB, Bayer and DTDI images"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // run
  CLI::App* run = app.add_subcommand("run", "Subsample, reconstruct and score images");
  CommonOptions run_common;
  run_common.add(run);
  std::vector<std::string> run_images;
  std::string methods = "proposed";
  std::string upsamplers = "BILI";
  std::string run_out, format = "csv", save_dir;
  int jobs = 1;
  bool no_timing = false;
  run->add_option("images", run_images, "Input PPM (P6) images")->required();
  run->add_option("--method", methods,
                  "Comma-separated methods (proposed, A, L, R, DIRECT, MPEG_B, "
                  "CHEN_U3V2, CD) or 'all'");
  run->add_option("--upsampler", upsamplers,
                  "Comma-separated upsamplers (COPY, BILI, BICUBIC) or 'all'");
  run->add_option("--out", run_out, "Report path (default stdout)");
  run->add_option("--format", format, "Report format: csv or json");
  run->add_option("--jobs", jobs, "Images processed in parallel")
      ->check(CLI::PositiveNumber);
  run->add_option("--save-recon", save_dir,
                  "Directory for reconstructed images (PPM, or PGM + JSON sidecar)");
  run->add_flag("--no-timing", no_timing, "Omit the timing column");

  // verify-convexity
  CLI::App* verify =
      app.add_subcommand("verify-convexity", "Hessian determinants per CFA pattern");
  std::string verify_out;
  verify->add_option("--out", verify_out, "Output path (default stdout)");

  // audit-solver
  CLI::App* audit = app.add_subcommand(
      "audit-solver", "Compare the descent against the exhaustive lattice minimum");
  CommonOptions audit_common;
  audit_common.add(audit);
  std::vector<std::string> audit_images;
  int sample_blocks = 1000;
  std::uint64_t seed = 1;
  std::string audit_out;
  audit->add_option("images", audit_images, "Input PPM (P6) images")->required();
  audit->add_option("--sample-blocks", sample_blocks, "Blocks sampled per image")
      ->check(CLI::NonNegativeNumber);
  audit->add_option("--seed", seed, "Seed for block sampling");
  audit->add_option("--out", audit_out, "Output path (default stdout)");

  // trace-block
  CLI::App* trace = app.add_subcommand(
      "trace-block", "Dump one block's distortion surface and descent path");
  CommonOptions trace_common;
  trace_common.add(trace);
  std::string trace_image, trace_out = ".";
  int bx = 0, by = 0;
  trace->add_option("image", trace_image, "Input PPM (P6) image")->required();
  trace->add_option("--bx", bx, "Block column")->required();
  trace->add_option("--by", by, "Block row")->required();
  trace->add_option("--out", trace_out,
                    "Directory receiving surface.csv and path.txt");

  try {
    std::vector<std::string> args = merge_config(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*run) {
      PipelineConfig cfg;
      cfg.pattern = run_common.pattern();
      cfg.subsample = run_common.subsample();
      cfg.jobs = jobs;
      cfg.methods.clear();
      if (methods == "all") {
        cfg.methods = methods_for(cfg.pattern.kind);
      } else {
        for (const auto& m : split_list(methods)) cfg.methods.push_back(parse_method(m));
      }
      cfg.upsamplers.clear();
      if (upsamplers == "all") {
        cfg.upsamplers = {UpsampleMethod::kCopy, UpsampleMethod::kBilinear,
                          UpsampleMethod::kBicubic};
      } else {
        for (const auto& u : split_list(upsamplers)) {
          cfg.upsamplers.push_back(parse_upsample(u));
        }
      }
      if (!save_dir.empty()) cfg.save_dir = save_dir;
      const ReportFormat fmt = parse_format(format);
      std::vector<std::filesystem::path> paths(run_images.begin(), run_images.end());
      const RunReport report = run_pipeline(cfg, paths);
      emit(run_out, [&](std::ostream& os) {
        write_report(os, report, fmt, !no_timing);
      });
      for (const auto& f : report.failures) {
        std::cerr << "error: " << f.image << ": " << f.message << '\n';
      }
      return report.failures.empty() ? 0 : 1;
    }

    if (*verify) {
      const auto rows = verify_convexity();
      emit(verify_out, [&](std::ostream& os) { write_convexity(os, rows); });
      for (const auto& r : rows)
        if (!r.pass) return 1;
      return 0;
    }

    if (*audit) {
      AuditConfig cfg;
      cfg.sample_blocks = sample_blocks;
      cfg.seed = seed;
      cfg.subsample = audit_common.subsample();
      const AuditReport report =
          audit_solver(load_images(audit_images), audit_common.pattern(), cfg);
      emit(audit_out, [&](std::ostream& os) { write_audit(os, report); });
      return report.pass ? 0 : 1;
    }

    if (*trace) {
      const BlockTrace t = trace_block(read_ppm(trace_image), trace_common.pattern(),
                                       {bx, by}, trace_common.subsample());
      const std::filesystem::path dir(trace_out);
      std::filesystem::create_directories(dir);
      emit((dir / "surface.csv").string(),
           [&](std::ostream& os) { write_surface(os, t); });
      emit((dir / "path.txt").string(),
           [&](std::ostream& os) { write_trace(os, t.solver.trace); });
      std::printf("closed_form %.6f %.6f\nlocal %d %d %.6f\nglobal %d %d %.6f\n",
                  t.closed_form.u, t.closed_form.v, t.solver.u_s, t.solver.v_s,
                  t.solver.distortion, t.global.u, t.global.v, t.global.distortion);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
