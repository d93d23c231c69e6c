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

#include <string>

#include "recon/raster.hpp"

namespace recon {

// The top extrusion plane as seen in a front view: a horizontal segment on
// the topmost foreground row. Coordinates are pixel centers.
struct PlaneSegment {
  int y = 0;
  double left_x = 0.0;
  double right_x = 0.0;
};

// Camera elevation recovered from an observed ellipse. Informational only;
// the reconstruction path assumes a zero angle and never consumes this.
struct ViewAngle {
  double theta = 0.0;  // radians, [0, pi/2)
};

// Finds the topmost foreground row and the longest run in it (ties go to the
// leftmost run). Throws EmptyMask on an empty mask.
PlaneSegment find_top_plane(const BinaryMask& mask);

// theta = atan(minor / major). Throws InvalidAxes unless
// 0 <= minor <= major and major > 0.
ViewAngle estimate_view_angle(double minor_semi_axis, double major_semi_axis);

// Stage dump: header plus one line "y,left_x,right_x", 3 decimals.
std::string plane_csv(const PlaneSegment& plane);

}  // namespace recon
