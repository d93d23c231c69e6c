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

#include "recon/silhouette.hpp"

#include <cmath>
#include <cstdio>

#include "recon/errors.hpp"
#include "recon/log.hpp"

namespace recon {

namespace {

struct Run {
  int start = 0;  // first foreground column
  int end = 0;    // last foreground column
  int width() const { return end - start; }
};

std::vector<Run> row_runs(const BinaryMask& mask, int y) {
  std::vector<Run> runs;
  int start = -1;
  for (int x = 0; x <= mask.width; ++x) {
    bool fg = x < mask.width && mask.get(x, y);
    if (fg && start < 0) start = x;
    if (!fg && start >= 0) {
      runs.push_back(Run{start, x - 1});
      start = -1;
    }
  }
  return runs;
}

// The run continuing the previous row: overlap the previous interval, widest
// wins, ties go to the leftmost.
const Run* pick_run(const std::vector<Run>& runs, double prev_left,
                    double prev_right) {
  const Run* best = nullptr;
  for (const Run& run : runs) {
    if (run.start > prev_right || run.end < prev_left) continue;
    if (best == nullptr || run.width() > best->width()) best = &run;
  }
  return best;
}

}  // namespace

SilhouetteProfile trace_profile(const BinaryMask& mask,
                                const PlaneSegment& plane,
                                const TraceSettings& settings) {
  SilhouetteProfile profile;
  profile.y0 = plane.y;
  profile.rows.push_back(ProfileRow{plane.left_x, plane.right_x, true});

  double prev_left = plane.left_x;
  double prev_right = plane.right_x;
  int gap = 0;

  for (int y = plane.y + 1; y < mask.height; ++y) {
    const std::vector<Run> runs = row_runs(mask, y);
    const Run* run = pick_run(runs, prev_left, prev_right);
    bool accepted = false;
    if (run != nullptr &&
        std::abs(run->start - prev_left) <= settings.continuity_window &&
        std::abs(run->end - prev_right) <= settings.continuity_window) {
      if (run->width() < settings.min_width) break;
      profile.rows.push_back(
          ProfileRow{static_cast<double>(run->start),
                     static_cast<double>(run->end), true});
      prev_left = run->start;
      prev_right = run->end;
      gap = 0;
      accepted = true;
    }
    if (!accepted) {
      ++gap;
      if (gap > settings.gap_max) break;
      profile.rows.push_back(ProfileRow{prev_left, prev_right, false});
    }
  }

  while (!profile.rows.empty() && !profile.rows.back().observed)
    profile.rows.pop_back();

  if (profile.rows.size() < 2)
    throw ProfileTooShort("traced " + std::to_string(profile.rows.size()) +
                          " row(s); the extrusion assumption does not hold");
  log(LogLevel::kInfo,
      "traced " + std::to_string(profile.rows.size()) + " rows from y=" +
          std::to_string(profile.y0));
  return profile;
}

SilhouetteProfile fill_gaps(const SilhouetteProfile& profile) {
  if (profile.rows.empty() || !profile.rows.front().observed ||
      !profile.rows.back().observed) {
    throw InvalidParams("fill_gaps: first and last rows must be observed");
  }
  SilhouetteProfile out = profile;
  const std::size_t n = out.rows.size();
  std::size_t i = 0;
  while (i < n) {
    if (out.rows[i].observed) {
      ++i;
      continue;
    }
    // Locate the observed neighbors; trace_profile guarantees they exist.
    std::size_t lo = i - 1;
    std::size_t hi = i;
    while (hi < n && !out.rows[hi].observed) ++hi;
    const double span = static_cast<double>(hi - lo);
    for (std::size_t j = i; j < hi; ++j) {
      double t = static_cast<double>(j - lo) / span;
      out.rows[j].left_x =
          out.rows[lo].left_x + t * (out.rows[hi].left_x - out.rows[lo].left_x);
      out.rows[j].right_x = out.rows[lo].right_x +
                            t * (out.rows[hi].right_x - out.rows[lo].right_x);
      out.rows[j].observed = true;
    }
    i = hi;
  }
  return out;
}

std::string profile_csv(const SilhouetteProfile& profile) {
  std::string csv = "y,left,right,center,halfwidth\n";
  char line[160];
  for (std::size_t i = 0; i < profile.rows.size(); ++i) {
    std::snprintf(line, sizeof(line), "%d,%.3f,%.3f,%.3f,%.3f\n",
                  profile.row_y(i), profile.rows[i].left_x,
                  profile.rows[i].right_x, profile.center(i),
                  profile.halfwidth(i));
    csv += line;
  }
  return csv;
}

}  // namespace recon
