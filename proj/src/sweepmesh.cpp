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

#include "recon/sweepmesh.hpp"

#include <map>
#include <string>
#include <utility>

#include "recon/errors.hpp"
#include "recon/texture.hpp"

namespace recon {

std::vector<std::size_t> sweep_ring_rows(std::size_t row_count,
                                         int ring_step) {
  std::vector<std::size_t> rows;
  if (row_count == 0) return rows;
  for (std::size_t i = 0; i < row_count;
       i += static_cast<std::size_t>(ring_step))
    rows.push_back(i);
  if (rows.back() != row_count - 1) rows.push_back(row_count - 1);
  return rows;
}

TriangleMesh sweep(const SilhouetteProfile& profile,
                   const CrossSection& section,
                   const SweepSettings& settings) {
  if (profile.rows.size() < 2)
    throw ProfileTooShort("sweep needs at least 2 profile rows");
  if (settings.ring_step < 1)
    throw InvalidParams("ring_step must be >= 1");

  const std::vector<std::size_t> rows =
      sweep_ring_rows(profile.rows.size(), settings.ring_step);
  const std::uint32_t k = static_cast<std::uint32_t>(section.size());
  const std::uint32_t ring_count = static_cast<std::uint32_t>(rows.size());

  for (std::size_t i : rows) {
    if (profile.halfwidth(i) < settings.min_halfwidth)
      throw DegenerateRing("halfwidth " + std::to_string(profile.halfwidth(i)) +
                           " px at row " + std::to_string(profile.row_y(i)));
  }

  TriangleMesh mesh;
  mesh.vertices.reserve(static_cast<std::size_t>(ring_count) * k + 2);
  for (std::size_t i : rows) {
    const double c = profile.center(i);
    const double h = profile.halfwidth(i);
    const double y = -static_cast<double>(profile.row_y(i));
    for (std::uint32_t j = 0; j < k; ++j) {
      const SectionPoint& p = section.points[j];
      mesh.vertices.push_back(Vec3{c + h * p.x, y, h * p.z});
    }
  }

  // Cap centroids: vertex averages of the first and last rings.
  const std::uint32_t top_centroid = ring_count * k;
  const std::uint32_t bottom_centroid = top_centroid + 1;
  for (std::uint32_t r : {std::uint32_t{0}, ring_count - 1}) {
    Vec3 centroid;
    for (std::uint32_t j = 0; j < k; ++j) {
      centroid = centroid + mesh.vertices[static_cast<std::size_t>(r) * k + j];
    }
    mesh.vertices.push_back(centroid * (1.0 / k));
  }

  // Side walls. Ring r sits above ring r+1 (model y decreases); with a CCW
  // section this winding faces outward.
  mesh.triangles.reserve(static_cast<std::size_t>(ring_count - 1) * 2 * k +
                         2 * k);
  for (std::uint32_t r = 0; r + 1 < ring_count; ++r) {
    for (std::uint32_t j = 0; j < k; ++j) {
      std::uint32_t a = r * k + j;
      std::uint32_t b = r * k + (j + 1) % k;
      std::uint32_t c = (r + 1) * k + j;
      std::uint32_t d = (r + 1) * k + (j + 1) % k;
      mesh.triangles.push_back(Triangle{a, b, d});
      mesh.triangles.push_back(Triangle{a, d, c});
    }
  }

  // Caps: top fan faces +y, bottom fan faces -y.
  const std::uint32_t last = (ring_count - 1) * k;
  for (std::uint32_t j = 0; j < k; ++j) {
    mesh.triangles.push_back(Triangle{top_centroid, (j + 1) % k, j});
    mesh.triangles.push_back(
        Triangle{bottom_centroid, last + j, last + (j + 1) % k});
  }

  assign_uvs(mesh, section, profile, rows);
  compute_normals(mesh);
  return mesh;
}

void compute_normals(TriangleMesh& mesh) {
  mesh.normals.assign(mesh.vertices.size(), Vec3{});
  for (const Triangle& t : mesh.triangles) {
    const Vec3& v1 = mesh.vertices[t.a];
    const Vec3& v2 = mesh.vertices[t.b];
    const Vec3& v3 = mesh.vertices[t.c];
    Vec3 area_normal = cross(v2 - v1, v3 - v1) * 0.5;
    mesh.normals[t.a] = mesh.normals[t.a] + area_normal;
    mesh.normals[t.b] = mesh.normals[t.b] + area_normal;
    mesh.normals[t.c] = mesh.normals[t.c] + area_normal;
  }
  for (std::size_t i = 0; i < mesh.normals.size(); ++i) {
    double len = norm(mesh.normals[i]);
    if (len < 1e-12)
      throw ZeroAreaAccumulation("vertex " + std::to_string(i) +
                                 " accumulates no face area");
    mesh.normals[i] = mesh.normals[i] * (1.0 / len);
  }
}

double signed_volume(const TriangleMesh& mesh) {
  double six_volume = 0.0;
  for (const Triangle& t : mesh.triangles) {
    six_volume += dot(mesh.vertices[t.a],
                      cross(mesh.vertices[t.b], mesh.vertices[t.c]));
  }
  return six_volume / 6.0;
}

namespace {

std::map<std::pair<std::uint32_t, std::uint32_t>, int> edge_counts(
    const TriangleMesh& mesh) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> counts;
  auto add = [&counts](std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    ++counts[{a, b}];
  };
  for (const Triangle& t : mesh.triangles) {
    add(t.a, t.b);
    add(t.b, t.c);
    add(t.c, t.a);
  }
  return counts;
}

}  // namespace

bool is_watertight(const TriangleMesh& mesh) {
  for (const auto& [edge, count] : edge_counts(mesh)) {
    if (count != 2) return false;
  }
  return !mesh.triangles.empty();
}

long euler_characteristic(const TriangleMesh& mesh) {
  return static_cast<long>(mesh.vertices.size()) -
         static_cast<long>(edge_counts(mesh).size()) +
         static_cast<long>(mesh.triangles.size());
}

}  // namespace recon
