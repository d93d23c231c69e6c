// Copyright 2026 The sweeprecon Authors.
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

// sweeprecon: reconstruct a textured, watertight mesh of an extruded
// symmetric object from a single front-view photo.
//
//   sweeprecon reconstruct --input photo.png --out model.obj
//   sweeprecon synth --shape vase --out vase.png --truth vase.csv
//   sweeprecon eval --input vase.png --mask vase.png.mask.png --truth v.csv
//
// Exit codes: 0 success, 2 segmentation found no object, 3 silhouette
// tracing failed, 4 argument or I/O error, 5 no overlap with the truth.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "recon/errors.hpp"
#include "recon/log.hpp"
#include "recon/meshio.hpp"
#include "recon/profiling.hpp"
#include "recon/raster.hpp"
#include "recon/section.hpp"
#include "recon/silhouette.hpp"
#include "recon/smoothing.hpp"
#include "recon/sweepmesh.hpp"
#include "recon/synth.hpp"
#include "recon/texture.hpp"

namespace fs = std::filesystem;
using namespace recon;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSegmentation = 2;
constexpr int kExitProfile = 3;
constexpr int kExitUsage = 4;
constexpr int kExitNoOverlap = 5;

// Argument/validation failure, reported with exit code 4.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReconstructFlags {
  std::string input;
  std::string mask;
  std::string shape = "circle";
  std::string out;
  int sg_window = 11;
  int sg_order = 3;
  bool smooth_radius = false;
  int ring_step = 2;
  int sections = 32;
  std::string prior = "10,10,512,512";
  std::string dump_stages;
};

void add_reconstruct_flags(CLI::App* cmd, ReconstructFlags* flags,
                           bool out_required) {
  cmd->add_option("--input", flags->input, "input PNG photo")->required();
  cmd->add_option("--mask", flags->mask,
                  "foreground mask PNG (skips segmentation)");
  cmd->add_option("--shape", flags->shape,
                  "circle|square|rect:<ratio>|triangle|polygon:<file>");
  auto* out = cmd->add_option("--out", flags->out, "output OBJ path");
  if (out_required) out->required();
  cmd->add_option("--sg-window", flags->sg_window,
                  "Savitzky-Golay window (odd)");
  cmd->add_option("--sg-order", flags->sg_order, "Savitzky-Golay order");
  cmd->add_flag("--smooth-radius", flags->smooth_radius,
                "also smooth the halfwidth series");
  cmd->add_option("--ring-step", flags->ring_step, "rows per vertex ring");
  cmd->add_option("--sections", flags->sections,
                  "circle cross-section sample count");
  cmd->add_option("--prior", flags->prior, "object prior x0,y0,x1,y1");
  cmd->add_option("--dump-stages", flags->dump_stages,
                  "directory for per-stage artifacts");
}

RectRegion parse_prior(const std::string& text) {
  RectRegion r;
  char extra;
  if (std::sscanf(text.c_str(), "%d,%d,%d,%d%c", &r.x0, &r.y0, &r.x1, &r.y1,
                  &extra) != 4)
    throw UsageError("--prior expects x0,y0,x1,y1");
  return r;
}

CrossSection parse_shape(const std::string& text, int sections) {
  if (text == "circle") return make_circle(sections);
  if (text == "square") return make_rectangle(1.0);
  if (text == "triangle") return make_triangle();
  if (text.rfind("rect:", 0) == 0) {
    try {
      return make_rectangle(std::stod(text.substr(5)));
    } catch (const std::logic_error&) {
      throw UsageError("--shape rect:<ratio> expects a positive number");
    }
  }
  if (text.rfind("polygon:", 0) == 0) return load_polygon(text.substr(8));
  throw UsageError("--shape must be circle, square, rect:<ratio>, triangle "
                   "or polygon:<file>");
}

void validate_flags(const ReconstructFlags& flags) {
  if (flags.sg_window < 3 || flags.sg_window % 2 == 0)
    throw UsageError("--sg-window must be odd and >= 3 (got " +
                     std::to_string(flags.sg_window) + ")");
  if (flags.sg_order < 0 || flags.sg_order >= flags.sg_window)
    throw UsageError("--sg-order must satisfy 0 <= order < window");
  if (flags.ring_step < 1) throw UsageError("--ring-step must be >= 1");
  if (flags.sections < 3) throw UsageError("--sections must be >= 3");
}

void write_text(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
}

struct PipelineResult {
  BinaryMask mask;
  PlaneSegment plane;
  SilhouetteProfile filled;
  SilhouetteProfile smoothed;
  CrossSection section;
  TriangleMesh mesh;
};

// The stage order of the reconstruction: segment, profile, trace, fill,
// smooth, sweep.
PipelineResult run_pipeline(const ReconstructFlags& flags) {
  validate_flags(flags);
  PipelineResult result;
  result.section = parse_shape(flags.shape, flags.sections);

  RasterImage image = load_image(flags.input);
  if (!flags.mask.empty()) {
    result.mask = load_mask(flags.mask, image.width, image.height);
  } else {
    RectRegion prior =
        parse_prior(flags.prior).clipped(image.width, image.height);
    if (prior.x0 >= prior.x1 || prior.y0 >= prior.y1)
      throw UsageError("--prior is empty after clipping to the image");
    result.mask = segment_object(image, prior);
  }

  result.plane = find_top_plane(result.mask);
  SilhouetteProfile traced = trace_profile(result.mask, result.plane);
  result.filled = fill_gaps(traced);
  SavGolKernel kernel = savgol_coefficients(flags.sg_window, flags.sg_order);
  result.smoothed =
      smooth_profile(result.filled, kernel, flags.smooth_radius);
  result.mesh = sweep(result.smoothed, result.section,
                      SweepSettings{flags.ring_step, 0.5});

  if (!flags.dump_stages.empty()) {
    fs::path dir(flags.dump_stages);
    fs::create_directories(dir);
    save_mask(result.mask, (dir / "mask.png").string());
    write_text(dir / "plane.csv", plane_csv(result.plane));
    write_text(dir / "profile_raw.csv", profile_csv(result.filled));
    write_text(dir / "profile_smooth.csv", profile_csv(result.smoothed));
  }
  return result;
}

// Emits OBJ + MTL + texture next to the requested OBJ path.
void write_outputs(const ReconstructFlags& flags, PipelineResult& result) {
  const fs::path obj_path(flags.out);
  const fs::path mtl_path = fs::path(obj_path).replace_extension(".mtl");
  fs::path tex_path = obj_path;
  tex_path.replace_filename(obj_path.stem().string() + "_diffuse.png");

  RasterImage image = load_image(flags.input);
  TextureStrip strip = rectify_texture(image, result.smoothed);
  save_image(strip.image, tex_path.string());

  std::string name = obj_path.stem().string();
  for (char& c : name) {
    if (c == ' ' || c == '\t') c = '_';
  }
  if (name.empty()) name = "material";
  Material material{name, tex_path.filename().string()};
  write_obj(result.mesh, material, obj_path.string(), mtl_path.string());
  log(LogLevel::kInfo, "wrote " + obj_path.string() + ", " +
                           mtl_path.string() + ", " + tex_path.string());
}

int cmd_reconstruct(const ReconstructFlags& flags) {
  PipelineResult result = run_pipeline(flags);
  write_outputs(flags, result);
  return kExitOk;
}

int cmd_eval(const ReconstructFlags& flags, const std::string& truth_path) {
  PipelineResult result = run_pipeline(flags);
  if (!flags.out.empty()) write_outputs(flags, result);
  TruthProfile truth = load_truth_csv(truth_path);
  ProfileMetrics metrics = compare_profiles(result.smoothed, truth);
  std::printf(
      "rmse_center=%.3f rmse_halfwidth=%.3f max_abs_err=%.3f coverage=%.3f\n",
      metrics.rmse_center, metrics.rmse_halfwidth, metrics.max_abs_err,
      metrics.row_coverage);
  return kExitOk;
}

struct SynthFlags {
  std::string shape;
  std::string out;
  std::string truth;
  int noise = 0;
  std::string pattern = "flat";
};

int cmd_synth(const SynthFlags& flags) {
  ShapeTag tag;
  if (flags.shape == "cylinder") {
    tag = ShapeTag::kCylinder;
  } else if (flags.shape == "cone") {
    tag = ShapeTag::kCone;
  } else if (flags.shape == "vase") {
    tag = ShapeTag::kVase;
  } else if (flags.shape == "s-curve") {
    tag = ShapeTag::kSCurve;
  } else {
    throw UsageError("--shape must be cylinder, cone, vase or s-curve");
  }
  if (flags.noise < 0 || flags.noise > 8)
    throw UsageError("--noise must be in 0..8");

  RenderStyle style;
  style.noise_amplitude = flags.noise;
  if (flags.pattern == "flat") {
    style.pattern = FillPattern::kFlat;
  } else if (flags.pattern == "stripes") {
    style.pattern = FillPattern::kStripes;
  } else if (flags.pattern == "bands") {
    style.pattern = FillPattern::kBands;
  } else {
    throw UsageError("--pattern must be flat, stripes or bands");
  }

  TruthProfile truth;
  for (TruthProfile& candidate : standard_shapes()) {
    if (candidate.tag == tag) truth = std::move(candidate);
  }
  Scene scene = render_scene(truth, 512, 512, style);
  save_image(scene.image, flags.out);
  save_mask(scene.mask, flags.out + ".mask.png");
  write_text(flags.truth, truth_csv(truth));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sweep-based 3D reconstruction from a single front view"};
  app.require_subcommand(1);

  ReconstructFlags rec_flags;
  CLI::App* rec = app.add_subcommand(
      "reconstruct", "segment, trace and sweep a textured mesh");
  add_reconstruct_flags(rec, &rec_flags, /*out_required=*/true);

  ReconstructFlags eval_flags;
  std::string eval_truth;
  CLI::App* eval = app.add_subcommand(
      "eval", "run the pipeline and score it against a truth CSV");
  add_reconstruct_flags(eval, &eval_flags, /*out_required=*/false);
  eval->add_option("--truth", eval_truth, "truth CSV")->required();

  SynthFlags synth_flags;
  CLI::App* synth = app.add_subcommand(
      "synth", "render a synthetic fixture with ground truth");
  synth->add_option("--shape", synth_flags.shape,
                    "cylinder|cone|vase|s-curve")
      ->required();
  synth->add_option("--out", synth_flags.out, "output PNG")->required();
  synth->add_option("--truth", synth_flags.truth, "truth CSV path")
      ->required();
  synth->add_option("--noise", synth_flags.noise, "noise amplitude 0..8");
  synth->add_option("--pattern", synth_flags.pattern, "flat|stripes|bands");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }

  try {
    if (rec->parsed()) return cmd_reconstruct(rec_flags);
    if (eval->parsed()) return cmd_eval(eval_flags, eval_truth);
    if (synth->parsed()) return cmd_synth(synth_flags);
  } catch (const EmptyMask& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitSegmentation;
  } catch (const ProfileTooShort& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitProfile;
  } catch (const NoOverlap& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNoOverlap;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
