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

#include <vector>

#include "recon/silhouette.hpp"

namespace recon {

// Central Savitzky-Golay smoothing weights: convolving a series with the
// weights replaces each sample by the value at the window center of the
// least-squares polynomial fit of the given order. Weights sum to 1, are
// symmetric, and reproduce polynomials up to `order` exactly.
struct SavGolKernel {
  int window = 0;  // odd, >= 3
  int order = 0;   // 0 <= order < window
  std::vector<double> weights;
};

enum class EdgeMode {
  kMirror,  // reflect across the boundary, edge sample included
  kExtend,  // replicate the edge sample
};

// Builds the kernel by solving the (order+1)^2 normal equations with
// Gaussian elimination and partial pivoting over abscissae -h..h,
// h = (window-1)/2. Throws InvalidParams.
SavGolKernel savgol_coefficients(int window, int order);

// Convolves the series with the kernel; boundaries are padded per edge_mode.
// Series shorter than the window are returned unchanged.
std::vector<double> smooth_series(const std::vector<double>& series,
                                  const SavGolKernel& kernel,
                                  EdgeMode edge_mode = EdgeMode::kMirror);

// Smooths the profile's center series (and the halfwidth series when
// smooth_radius is set), then rebuilds left/right as center -/+ halfwidth.
// Halfwidths are clamped to 1.0 if smoothing were to invert an edge pair.
SilhouetteProfile smooth_profile(const SilhouetteProfile& profile,
                                 const SavGolKernel& kernel,
                                 bool smooth_radius = false);

}  // namespace recon
