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

namespace recon {

// A point of the cross-section curve: x is lateral (maps onto the image
// x axis), z is depth (out of the image toward the viewer).
struct SectionPoint {
  double x = 0.0;
  double z = 0.0;
};

// Closed simple polygon swept along the profile, normalized so the lateral
// extent is exactly [-1, 1]: a ring scaled by halfwidth h then spans 2h,
// which is what makes the swept silhouette match the traced edges.
// Counter-clockwise (positive shoelace area over (x, z)); params hold the
// cumulative arc-length parameter of each point, params[0] = 0.
struct CrossSection {
  std::vector<SectionPoint> points;
  std::vector<double> params;

  std::size_t size() const { return points.size(); }
};

// Regular K-gon inscribed in the unit circle, point k at angle 2*pi*k/K.
// Odd K is re-normalized laterally so the [-1, 1] extent always holds.
CrossSection make_circle(int samples);

// Corners (+-1, +-depth_ratio), counter-clockwise from (1, -depth_ratio).
CrossSection make_rectangle(double depth_ratio);

// Equilateral triangle with lateral extent [-1, 1], centroid at the origin.
CrossSection make_triangle();

// Normalizes an arbitrary simple polygon: centers both axes on their
// midrange, scales uniformly so the lateral extent is [-1, 1], and reverses
// the order if it is clockwise. Throws DegeneratePolygon.
CrossSection from_polygon(std::vector<SectionPoint> raw);

// Reads "x z" pairs, one per line; '#' starts a comment.
CrossSection load_polygon(const std::string& path);

// Shoelace area over (x, z); positive for counter-clockwise sections.
double section_signed_area(const CrossSection& section);

}  // namespace recon
