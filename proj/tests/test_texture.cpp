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

#include <doctest.h>

#include <cmath>

#include "recon/errors.hpp"
#include "recon/profiling.hpp"
#include "recon/silhouette.hpp"
#include "recon/synth.hpp"
#include "recon/texture.hpp"
#include "render_oracle.hpp"
#include "test_util.hpp"

using namespace recon;
using testutil::constant_profile;

namespace {

// Truth profile converted to a silhouette profile (the exact edges).
SilhouetteProfile to_profile(const TruthProfile& truth) {
  SilhouetteProfile profile;
  profile.y0 = truth.y0;
  for (const TruthRow& row : truth.rows)
    profile.rows.push_back(ProfileRow{row.center - row.halfwidth,
                                      row.center + row.halfwidth, true});
  return profile;
}

TruthProfile cone_truth(double h_top, double h_bottom, int y0, int rows) {
  TruthProfile truth;
  truth.y0 = y0;
  truth.tag = ShapeTag::kCone;
  for (int i = 0; i < rows; ++i) {
    double h = h_top + (h_bottom - h_top) * i / (rows - 1);
    truth.rows.push_back({256.0, h});
  }
  return truth;
}

}  // namespace

TEST_CASE("mirror_u maps the lateral coordinate only") {
  CHECK(mirror_u({1.0, 0.0}) == 1.0);
  CHECK(mirror_u({-1.0, 0.0}) == 0.0);
  CHECK(mirror_u({0.0, 1.0}) == 0.5);
  CHECK(mirror_u({0.0, -1.0}) == 0.5);
  for (double x : {-1.0, -0.25, 0.0, 0.7, 1.0})
    CHECK(mirror_u({x, 0.8}) == mirror_u({x, -0.8}));
}

TEST_CASE("horizontal band source keeps band order in the strip") {
  RenderStyle style;
  style.pattern = FillPattern::kBands;
  style.band_height = 20;
  TruthProfile truth = cone_truth(60.0, 30.0, 100, 200);
  Scene scene = render_scene(truth, 512, 512, style);

  TextureStrip strip = rectify_texture(scene.image, to_profile(truth));
  CHECK(strip.image.height == 200);
  for (int j = 0; j < strip.image.height; ++j) {
    const std::uint8_t* first = strip.image.at(0, j);
    for (int i = 1; i < strip.image.width; ++i) {
      const std::uint8_t* p = strip.image.at(i, j);
      for (int c = 0; c < 3; ++c)
        CHECK(std::abs(static_cast<int>(p[c]) - first[c]) <= 1);
    }
  }
  // Band order: row 0 primary, row 20 secondary (bilinear mixes only the
  // single boundary row).
  CHECK(strip.image.at(10, 5)[0] == 40);
  CHECK(strip.image.at(10, 25)[0] == 150);
  CHECK(strip.image.at(10, 45)[0] == 40);
}

TEST_CASE("cylinder strip equals the axis-aligned crop") {
  RenderStyle style;
  style.pattern = FillPattern::kStripes;
  Scene scene = render_scene(standard_shapes()[0], 512, 512, style);
  SilhouetteProfile profile = to_profile(standard_shapes()[0]);

  // 101 columns (206..306), default width rounds 100 up to even.
  TextureStrip strip = rectify_texture(scene.image, profile);
  CHECK(strip.image.width == 100);
  CHECK(strip.image.height == 301);
  for (int j = 0; j < strip.image.height; j += 50) {
    for (int i = 0; i < strip.image.width; i += 7) {
      double x = 206.0 + (306.0 - 206.0) * i / 99.0;
      int x0 = static_cast<int>(std::floor(x));
      double t = x - x0;
      const std::uint8_t* a = scene.image.at(x0, 100 + j);
      const std::uint8_t* b = scene.image.at(std::min(x0 + 1, 306), 100 + j);
      for (int c = 0; c < 3; ++c) {
        double expected = (1 - t) * a[c] + t * b[c];
        CHECK(std::abs(strip.image.at(i, j)[c] - expected) <= 1.0);
      }
    }
  }
}

TEST_CASE("striped cone rectifies to straight stripe boundaries") {
  RenderStyle style;
  style.pattern = FillPattern::kStripes;
  TruthProfile truth = cone_truth(80.0, 30.0, 100, 301);
  Scene scene = render_scene(truth, 512, 512, style);

  TextureStrip strip = rectify_texture(scene.image, to_profile(truth));
  const double threshold = 0.5 * (style.primary[0] + style.secondary[0]);
  const int boundaries = style.stripe_count - 1;

  std::vector<std::vector<double>> columns(
      static_cast<std::size_t>(boundaries));
  for (int j = 0; j < strip.image.height; ++j) {
    std::vector<double> crossings =
        testoracle::row_crossings(strip.image, j, threshold);
    REQUIRE(crossings.size() == static_cast<std::size_t>(boundaries));
    for (int b = 0; b < boundaries; ++b)
      columns[static_cast<std::size_t>(b)].push_back(crossings[b]);
  }
  for (const std::vector<double>& column : columns) {
    double mean = 0.0;
    for (double c : column) mean += c;
    mean /= static_cast<double>(column.size());
    double variance = 0.0;
    for (double c : column) variance += (c - mean) * (c - mean);
    variance /= static_cast<double>(column.size());
    CHECK(variance <= 1.0);
  }
}

TEST_CASE("rectify_texture validates its input") {
  RasterImage img = RasterImage::filled(64, 64, 0, 0, 0);
  SilhouetteProfile empty;
  CHECK_THROWS_AS(rectify_texture(img, empty), EmptyProfile);

  SilhouetteProfile outside = constant_profile(60, 10, 32.0, 8.0);
  CHECK_THROWS_AS(rectify_texture(img, outside), InvalidParams);
}

TEST_CASE("assign_uvs: top ring v=1, bottom ring v=0, u in range") {
  SilhouetteProfile profile = constant_profile(50, 41, 256.0, 30.0);
  CrossSection section = make_circle(16);
  TriangleMesh mesh = sweep(profile, section, SweepSettings{4, 0.5});
  std::vector<std::size_t> rows = sweep_ring_rows(profile.size(), 4);

  const std::size_t k = section.size();
  for (std::size_t j = 0; j < k; ++j) {
    CHECK(mesh.uvs[j].v == 1.0);
    CHECK(mesh.uvs[(rows.size() - 1) * k + j].v == 0.0);
    CHECK(mesh.uvs[j].u == mirror_u(section.points[j]));
  }
  // Mirror property across the whole ring set.
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t j = 0; j < k; ++j) {
      const SectionPoint& p = section.points[j];
      CHECK(mesh.uvs[r * k + j].u ==
            doctest::Approx(mirror_u({p.x, -p.z})));
    }
  // Cap centroids.
  CHECK(mesh.uvs[rows.size() * k].u == 0.5);
  CHECK(mesh.uvs[rows.size() * k].v == 1.0);
  CHECK(mesh.uvs[rows.size() * k + 1].u == 0.5);
  CHECK(mesh.uvs[rows.size() * k + 1].v == 0.0);
  // v strictly decreasing ring to ring.
  for (std::size_t r = 1; r < rows.size(); ++r)
    CHECK(mesh.uvs[r * k].v < mesh.uvs[(r - 1) * k].v);
}

TEST_CASE("textured cylinder re-rasterizes onto its source") {
  RenderStyle style;
  style.pattern = FillPattern::kStripes;
  const TruthProfile truth = standard_shapes()[0];
  Scene scene = render_scene(truth, 512, 512, style);
  SilhouetteProfile profile = to_profile(truth);

  TriangleMesh mesh = sweep(profile, make_circle(32), SweepSettings{2, 0.5});
  TextureStrip strip = rectify_texture(scene.image, profile);
  testoracle::RasterizedView view =
      testoracle::rasterize_front(mesh, strip.image, 512, 512);

  double total_err = 0.0;
  long samples = 0;
  for (int y = 0; y < 512; ++y)
    for (int x = 0; x < 512; ++x) {
      if (!view.covered[static_cast<std::size_t>(y) * 512 + x]) continue;
      const std::uint8_t* got = view.image.at(x, y);
      const std::uint8_t* want = scene.image.at(x, y);
      for (int c = 0; c < 3; ++c)
        total_err += std::abs(static_cast<int>(got[c]) - want[c]);
      samples += 3;
    }
  REQUIRE(samples > 80000);  // the front must actually cover the crop
  CHECK(total_err / static_cast<double>(samples) <= 8.0);
}
