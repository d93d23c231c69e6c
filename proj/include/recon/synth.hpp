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

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "recon/raster.hpp"
#include "recon/silhouette.hpp"

namespace recon {

enum class ShapeTag { kCylinder, kCone, kVase, kSCurve, kCustom };

struct TruthRow {
  double center = 0.0;
  double halfwidth = 0.0;
};

// Generating parameters of a synthetic extruded object; the ground truth
// reconstructions are scored against. Row i covers image row y0 + i.
struct TruthProfile {
  int y0 = 0;
  std::vector<TruthRow> rows;
  ShapeTag tag = ShapeTag::kCustom;
};

enum class FillPattern { kFlat, kStripes, kBands };

struct RenderStyle {
  FillPattern pattern = FillPattern::kFlat;
  std::array<std::uint8_t, 3> background = {220, 220, 220};
  std::array<std::uint8_t, 3> primary = {40, 60, 90};
  std::array<std::uint8_t, 3> secondary = {150, 30, 30};
  int stripe_count = 12;  // stripes across the lateral extent
  int band_height = 24;   // rows per horizontal band
  int noise_amplitude = 0;  // uniform per-channel noise, 0..8
};

struct Scene {
  RasterImage image;
  BinaryMask mask;
};

// Renders the truth orthographically: pixel (x, y) is foreground iff
// |x - center(y)| <= halfwidth(y). The mask is that exact predicate with no
// anti-aliasing; noise applies to the color image only. Stripes follow the
// object's lateral fraction (like paint on the surface) and are painted
// with analytic coverage. Throws OutOfBounds when the truth violates the
// 10 px placement margin.
Scene render_scene(const TruthProfile& truth, int width, int height,
                   const RenderStyle& style = {});

// The four 512x512 fixtures: cylinder, cone, vase, s-curve.
std::vector<TruthProfile> standard_shapes();

struct ProfileMetrics {
  double rmse_halfwidth = 0.0;
  double rmse_center = 0.0;
  double max_abs_err = 0.0;
  double row_coverage = 0.0;
};

// Scores a recovered profile over the y-range shared with the truth;
// coverage is |intersection| / |truth rows|. Throws NoOverlap.
ProfileMetrics compare_profiles(const SilhouetteProfile& recovered,
                                const TruthProfile& truth);

// "y,center,halfwidth" with a header, 3 decimals.
std::string truth_csv(const TruthProfile& truth);
TruthProfile load_truth_csv(const std::string& path);

}  // namespace recon
