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

#include <cstddef>
#include <string>
#include <vector>

#include "recon/profiling.hpp"
#include "recon/raster.hpp"

namespace recon {

struct ProfileRow {
  double left_x = 0.0;
  double right_x = 0.0;
  bool observed = true;
};

// Per-row object boundary from the top plane downward: the recovered
// extrusion record. Row i corresponds to image row y0 + i; center is the
// per-row translation of the sweep, halfwidth its scale.
struct SilhouetteProfile {
  int y0 = 0;
  std::vector<ProfileRow> rows;

  std::size_t size() const { return rows.size(); }
  int row_y(std::size_t i) const { return y0 + static_cast<int>(i); }
  double center(std::size_t i) const {
    return 0.5 * (rows[i].left_x + rows[i].right_x);
  }
  double halfwidth(std::size_t i) const {
    return 0.5 * (rows[i].right_x - rows[i].left_x);
  }
};

struct TraceSettings {
  // Acceptance window around the previous row's edges; the pi/3 search cone
  // quantized to one-row steps: ceil(tan(pi/3)) = 2.
  double continuity_window = 2.0;
  int gap_max = 8;        // consecutive unobserved rows before termination
  double min_width = 2.0;  // pixel-center width below which tracing stops
};

// Sweeps one pixel row at a time from the plane row downward, accepting the
// run that continues the previous row's edges. Rows with no acceptable run
// are kept as unobserved placeholders (up to gap_max in a row); trailing
// unobserved rows are dropped. Throws ProfileTooShort for < 2 rows.
SilhouetteProfile trace_profile(const BinaryMask& mask,
                                const PlaneSegment& plane,
                                const TraceSettings& settings = {});

// Linearly interpolates unobserved rows between their nearest observed
// neighbors; afterwards every row is observed.
SilhouetteProfile fill_gaps(const SilhouetteProfile& profile);

// Stage dump: header "y,left,right,center,halfwidth", one row per profile
// row, 3 decimals.
std::string profile_csv(const SilhouetteProfile& profile);

}  // namespace recon
