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

#include "recon/raster.hpp"
#include "recon/section.hpp"
#include "recon/silhouette.hpp"
#include "recon/sweepmesh.hpp"

namespace recon {

// The source texture between the traced edges, resampled into an axis
// aligned strip: row j spans the profile's y range, column i the left-to-
// right extent of that row.
struct TextureStrip {
  RasterImage image;
  int y0 = 0;    // first source row
  int rows = 0;  // number of source rows covered
};

struct Material {
  std::string name;         // non-empty, no whitespace
  std::string diffuse_map;  // texture path as referenced from the MTL
};

// Unwarps the region between the profile edges into a rectangle with
// bilinear sampling; samples falling outside the edges clamp to the nearest
// in-row edge pixel. Passing 0 for a dimension selects the default: width =
// the widest row rounded up to even, height = the row count.
// Throws EmptyProfile.
TextureStrip rectify_texture(const RasterImage& image,
                             const SilhouetteProfile& profile,
                             int out_width = 0, int out_height = 0);

// Mirrored cylindrical u: depends only on the lateral coordinate, so front
// and back points at equal x share the texture column and the seam at
// x = +-1 closes on itself.
inline double mirror_u(const SectionPoint& p) { return 0.5 * (p.x + 1.0); }

// Fills mesh.uvs for a sweep built over ring_rows: ring vertex k gets
// u = mirror_u(section point k), v = 1 at the top row falling to 0 at the
// bottom row; cap centroids get u = 0.5 at their ring's v.
void assign_uvs(TriangleMesh& mesh, const CrossSection& section,
                const SilhouetteProfile& profile,
                const std::vector<std::size_t>& ring_rows);

}  // namespace recon
