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

#include "recon/section.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "recon/errors.hpp"

namespace recon {

namespace {

constexpr double kPi = 3.14159265358979323846;

double raw_signed_area(const std::vector<SectionPoint>& pts) {
  double twice = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const SectionPoint& a = pts[i];
    const SectionPoint& b = pts[(i + 1) % pts.size()];
    twice += a.x * b.z - b.x * a.z;
  }
  return 0.5 * twice;
}

int orientation(const SectionPoint& a, const SectionPoint& b,
                const SectionPoint& c) {
  double d = (b.x - a.x) * (c.z - a.z) - (b.z - a.z) * (c.x - a.x);
  if (d > 1e-12) return 1;
  if (d < -1e-12) return -1;
  return 0;
}

bool on_segment(const SectionPoint& a, const SectionPoint& b,
                const SectionPoint& p) {
  return std::min(a.x, b.x) - 1e-12 <= p.x && p.x <= std::max(a.x, b.x) + 1e-12 &&
         std::min(a.z, b.z) - 1e-12 <= p.z && p.z <= std::max(a.z, b.z) + 1e-12;
}

bool segments_intersect(const SectionPoint& p1, const SectionPoint& p2,
                        const SectionPoint& p3, const SectionPoint& p4) {
  int o1 = orientation(p1, p2, p3);
  int o2 = orientation(p1, p2, p4);
  int o3 = orientation(p3, p4, p1);
  int o4 = orientation(p3, p4, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p2, p3)) return true;
  if (o2 == 0 && on_segment(p1, p2, p4)) return true;
  if (o3 == 0 && on_segment(p3, p4, p1)) return true;
  if (o4 == 0 && on_segment(p3, p4, p2)) return true;
  return false;
}

// O(K^2) simplicity check over non-adjacent edge pairs.
bool is_simple(const std::vector<SectionPoint>& pts) {
  const std::size_t k = pts.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == k - 1);
      if (adjacent) continue;
      if (segments_intersect(pts[i], pts[(i + 1) % k], pts[j],
                             pts[(j + 1) % k]))
        return false;
    }
  }
  return true;
}

std::vector<double> arc_length_params(const std::vector<SectionPoint>& pts) {
  const std::size_t k = pts.size();
  std::vector<double> lengths(k);
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const SectionPoint& a = pts[i];
    const SectionPoint& b = pts[(i + 1) % k];
    lengths[i] = std::hypot(b.x - a.x, b.z - a.z);
    if (lengths[i] <= 0.0)
      throw DegeneratePolygon("zero-length polygon edge");
    total += lengths[i];
  }
  std::vector<double> params(k);
  double acc = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    params[i] = acc / total;
    acc += lengths[i];
  }
  return params;
}

}  // namespace

CrossSection from_polygon(std::vector<SectionPoint> raw) {
  if (raw.size() < 3)
    throw DegeneratePolygon("polygon needs at least 3 points");

  double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
  double min_z = std::numeric_limits<double>::infinity(), max_z = -min_z;
  for (const SectionPoint& p : raw) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_z = std::min(min_z, p.z);
    max_z = std::max(max_z, p.z);
  }
  const double extent = max_x - min_x;
  if (extent <= 1e-12)
    throw DegeneratePolygon("polygon has zero lateral extent");

  const double cx = 0.5 * (min_x + max_x);
  const double cz = 0.5 * (min_z + max_z);
  const double scale = 2.0 / extent;
  for (SectionPoint& p : raw) {
    p.x = (p.x - cx) * scale;
    p.z = (p.z - cz) * scale;
  }

  if (!is_simple(raw)) throw DegeneratePolygon("polygon self-intersects");

  double area = raw_signed_area(raw);
  if (std::abs(area) <= 1e-12)
    throw DegeneratePolygon("polygon has zero area");
  if (area < 0.0) std::reverse(raw.begin(), raw.end());

  CrossSection section;
  section.params = arc_length_params(raw);
  section.points = std::move(raw);
  return section;
}

CrossSection make_circle(int samples) {
  if (samples < 3) throw InvalidK("circle needs at least 3 samples");
  std::vector<SectionPoint> pts(samples);
  for (int k = 0; k < samples; ++k) {
    double angle = 2.0 * kPi * k / samples;
    pts[static_cast<std::size_t>(k)] = {std::cos(angle), std::sin(angle)};
  }
  CrossSection section;
  if (samples % 2 == 0) {
    section.points = std::move(pts);
  } else {
    // cos never reaches -1 for odd K; renormalize the lateral extent.
    section.points = from_polygon(std::move(pts)).points;
  }
  // Equal edges make the arc-length parameters exactly k/K.
  section.params.resize(samples);
  for (int k = 0; k < samples; ++k)
    section.params[static_cast<std::size_t>(k)] =
        static_cast<double>(k) / samples;
  return section;
}

CrossSection make_rectangle(double depth_ratio) {
  if (!(depth_ratio > 0.0))
    throw InvalidRatio("depth ratio must be positive");
  std::vector<SectionPoint> pts = {{1.0, -depth_ratio},
                                   {1.0, depth_ratio},
                                   {-1.0, depth_ratio},
                                   {-1.0, -depth_ratio}};
  CrossSection section;
  section.params = arc_length_params(pts);
  section.points = std::move(pts);
  return section;
}

CrossSection make_triangle() {
  const double a = std::sqrt(3.0) / 3.0;
  std::vector<SectionPoint> pts = {{1.0, -a}, {0.0, 2.0 * a}, {-1.0, -a}};
  CrossSection section;
  section.params = arc_length_params(pts);
  section.points = std::move(pts);
  return section;
}

CrossSection load_polygon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open polygon file " + path);
  std::vector<SectionPoint> pts;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    double x, z;
    if (ss >> x >> z) {
      pts.push_back({x, z});
    } else if (!line.empty() && line.find_first_not_of(" \t\r") !=
                                    std::string::npos) {
      throw ParseError(line_no, "expected \"x z\" pair");
    }
  }
  return from_polygon(std::move(pts));
}

double section_signed_area(const CrossSection& section) {
  return raw_signed_area(section.points);
}

}  // namespace recon
