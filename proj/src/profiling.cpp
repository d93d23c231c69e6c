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

#include "recon/profiling.hpp"

#include <cmath>
#include <cstdio>

#include "recon/errors.hpp"

namespace recon {

PlaneSegment find_top_plane(const BinaryMask& mask) {
  for (int y = 0; y < mask.height; ++y) {
    int best_start = -1, best_len = 0;
    int run_start = -1;
    for (int x = 0; x <= mask.width; ++x) {
      bool fg = x < mask.width && mask.get(x, y);
      if (fg && run_start < 0) run_start = x;
      if (!fg && run_start >= 0) {
        int len = x - run_start;
        if (len > best_len) {  // ties keep the leftmost run
          best_len = len;
          best_start = run_start;
        }
        run_start = -1;
      }
    }
    if (best_len > 0) {
      PlaneSegment plane;
      plane.y = y;
      plane.left_x = best_start;
      plane.right_x = best_start + best_len - 1;
      return plane;
    }
  }
  throw EmptyMask("find_top_plane: mask has no foreground");
}

ViewAngle estimate_view_angle(double minor_semi_axis, double major_semi_axis) {
  if (major_semi_axis <= 0.0)
    throw InvalidAxes("major semi-axis must be positive");
  if (minor_semi_axis < 0.0 || minor_semi_axis > major_semi_axis)
    throw InvalidAxes("minor semi-axis must lie in [0, major]");
  return ViewAngle{std::atan(minor_semi_axis / major_semi_axis)};
}

std::string plane_csv(const PlaneSegment& plane) {
  char line[96];
  std::snprintf(line, sizeof(line), "%d,%.3f,%.3f\n", plane.y, plane.left_x,
                plane.right_x);
  return std::string("y,left_x,right_x\n") + line;
}

}  // namespace recon
