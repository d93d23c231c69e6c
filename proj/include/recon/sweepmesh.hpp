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

#include <cmath>
#include <cstdint>
#include <vector>

#include "recon/section.hpp"
#include "recon/silhouette.hpp"

namespace recon {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

struct UV {
  double u = 0.0;
  double v = 0.0;
};

struct Triangle {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t c = 0;
};

// Indexed triangle mesh in model units (1 unit = 1 source pixel).
// Model axes: x as in the image, y = -image_y (up), z toward the viewer.
// Triangles wind counter-clockwise seen from outside.
struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<Vec3> normals;
  std::vector<UV> uvs;
  std::vector<Triangle> triangles;
};

struct SweepSettings {
  int ring_step = 2;           // keep every ring_step-th profile row
  double min_halfwidth = 0.5;  // below this a ring is degenerate
};

// Profile row indices that become vertex rings: 0, step, 2*step, ... and
// always the last row.
std::vector<std::size_t> sweep_ring_rows(std::size_t row_count, int ring_step);

// Sweeps the section along the profile: ring vertex k of row y sits at
// (center(y) + halfwidth(y) * x_k, -y, halfwidth(y) * z_k). Rings are
// stitched with 2K triangles per band and closed with centroid fans on both
// ends. Vertex order: rings first (ring r occupies [r*K, (r+1)*K)), then the
// top centroid, then the bottom centroid. UVs follow the mirrored
// cylindrical rule; normals are area-weighted.
// Throws ProfileTooShort and DegenerateRing.
TriangleMesh sweep(const SilhouetteProfile& profile,
                   const CrossSection& section,
                   const SweepSettings& settings = {});

// Area-weighted vertex normals. Throws ZeroAreaAccumulation when a vertex
// accumulates no area (an isolated vertex; malformed stitching).
void compute_normals(TriangleMesh& mesh);

// Divergence-theorem volume: (1/6) * sum det(v1, v2, v3). Positive for
// outward-oriented watertight meshes.
double signed_volume(const TriangleMesh& mesh);

// True iff every undirected edge is shared by exactly two triangles.
bool is_watertight(const TriangleMesh& mesh);

// V - E + F with E counted over distinct undirected edges.
long euler_characteristic(const TriangleMesh& mesh);

}  // namespace recon
