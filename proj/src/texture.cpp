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

#include "recon/texture.hpp"

#include <algorithm>
#include <cmath>

#include "recon/errors.hpp"

namespace recon {

namespace {

// Samples row y of the source at fraction f of the profile row's extent.
// Interpolation taps are clamped into the integer columns covered by the
// edges so background never bleeds into the strip.
void sample_row(const RasterImage& img, int y, double left, double right,
                double f, double out[4]) {
  double x = left + (right - left) * f;
  int lo = static_cast<int>(std::ceil(left));
  int hi = static_cast<int>(std::floor(right));
  lo = std::clamp(lo, 0, img.width - 1);
  hi = std::clamp(hi, 0, img.width - 1);
  if (lo > hi) lo = hi = std::clamp(
      static_cast<int>(std::lround(0.5 * (left + right))), 0, img.width - 1);

  int x0 = static_cast<int>(std::floor(x));
  int x1 = x0 + 1;
  double t = x - x0;
  x0 = std::clamp(x0, lo, hi);
  x1 = std::clamp(x1, lo, hi);
  const std::uint8_t* a = img.at(x0, y);
  const std::uint8_t* b = img.at(x1, y);
  for (int c = 0; c < 4; ++c) out[c] = (1.0 - t) * a[c] + t * b[c];
}

}  // namespace

TextureStrip rectify_texture(const RasterImage& image,
                             const SilhouetteProfile& profile,
                             int out_width, int out_height) {
  const std::size_t n = profile.rows.size();
  if (n < 2) throw EmptyProfile("rectify_texture needs >= 2 profile rows");
  if (profile.y0 < 0 ||
      profile.y0 + static_cast<int>(n) > image.height)
    throw InvalidParams("profile rows lie outside the image");

  int w = out_width;
  if (w <= 0) {
    double widest = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      widest = std::max(widest, profile.rows[i].right_x -
                                    profile.rows[i].left_x);
    w = static_cast<int>(std::ceil(widest));
    w += w % 2;
  }
  w = std::max(w, 2);
  int h = out_height > 0 ? out_height : static_cast<int>(n);
  h = std::max(h, 2);

  TextureStrip strip;
  strip.y0 = profile.y0;
  strip.rows = static_cast<int>(n);
  strip.image.width = w;
  strip.image.height = h;
  strip.image.pixels.resize(static_cast<std::size_t>(w) * h * 4);

  for (int j = 0; j < h; ++j) {
    double yf = static_cast<double>(j) * (static_cast<double>(n) - 1.0) /
                (h - 1);
    std::size_t r0 = static_cast<std::size_t>(std::floor(yf));
    std::size_t r1 = std::min(r0 + 1, n - 1);
    double t = yf - static_cast<double>(r0);
    for (int i = 0; i < w; ++i) {
      double f = static_cast<double>(i) / (w - 1);
      double c0[4], c1[4];
      sample_row(image, profile.row_y(r0), profile.rows[r0].left_x,
                 profile.rows[r0].right_x, f, c0);
      sample_row(image, profile.row_y(r1), profile.rows[r1].left_x,
                 profile.rows[r1].right_x, f, c1);
      std::uint8_t* out = strip.image.at(i, j);
      for (int c = 0; c < 3; ++c) {
        double v = (1.0 - t) * c0[c] + t * c1[c];
        out[c] = static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
      }
      out[3] = 255;  // the strip is fully opaque
    }
  }
  return strip;
}

void assign_uvs(TriangleMesh& mesh, const CrossSection& section,
                const SilhouetteProfile& profile,
                const std::vector<std::size_t>& ring_rows) {
  const std::size_t k = section.size();
  mesh.uvs.assign(mesh.vertices.size(), UV{});
  const double denom = static_cast<double>(profile.rows.size()) - 1.0;
  for (std::size_t r = 0; r < ring_rows.size(); ++r) {
    double v = 1.0 - static_cast<double>(ring_rows[r]) / denom;
    for (std::size_t j = 0; j < k; ++j)
      mesh.uvs[r * k + j] = UV{mirror_u(section.points[j]), v};
  }
  // Cap centroids trail the ring vertices.
  const std::size_t top = ring_rows.size() * k;
  if (mesh.uvs.size() >= top + 2) {
    mesh.uvs[top] = UV{0.5, 1.0};
    mesh.uvs[top + 1] =
        UV{0.5, 1.0 - static_cast<double>(ring_rows.back()) / denom};
  }
}

}  // namespace recon
