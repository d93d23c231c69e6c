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

#include "recon/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "recon/errors.hpp"

namespace recon {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMargin = 10;  // the placement prior's border

// Deterministic splitmix64; renders must be byte-identical across runs.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // Uniform integer in [-amplitude, amplitude].
  int noise(int amplitude) {
    return static_cast<int>(next() % (2 * amplitude + 1)) - amplitude;
  }
};

// Mean stripe color over the lateral-fraction interval [f0, f1]: stripes are
// painted in fraction space, so narrow rows blend rather than alias.
void stripe_coverage(const RenderStyle& style, double f0, double f1,
                     double out[3]) {
  f0 = std::clamp(f0, 0.0, 1.0);
  f1 = std::clamp(f1, 0.0, 1.0);
  if (f1 <= f0) {
    double f = std::clamp(0.5 * (f0 + f1), 0.0, 1.0 - 1e-12);
    int idx = static_cast<int>(f * style.stripe_count);
    const auto& c = (idx % 2 == 0) ? style.primary : style.secondary;
    for (int ch = 0; ch < 3; ++ch) out[ch] = c[ch];
    return;
  }
  const double width = 1.0 / style.stripe_count;
  double acc[3] = {0, 0, 0};
  int first = static_cast<int>(std::floor(f0 / width));
  int last = static_cast<int>(std::floor((f1 - 1e-15) / width));
  last = std::min(last, style.stripe_count - 1);
  for (int s = first; s <= last; ++s) {
    double lo = std::max(f0, s * width);
    double hi = std::min(f1, (s + 1) * width);
    if (hi <= lo) continue;
    const auto& c = (s % 2 == 0) ? style.primary : style.secondary;
    for (int ch = 0; ch < 3; ++ch) acc[ch] += c[ch] * (hi - lo);
  }
  for (int ch = 0; ch < 3; ++ch) out[ch] = acc[ch] / (f1 - f0);
}

}  // namespace

Scene render_scene(const TruthProfile& truth, int width, int height,
                   const RenderStyle& style) {
  if (truth.rows.empty()) throw InvalidParams("truth profile has no rows");
  if (truth.y0 < kMargin ||
      truth.y0 + static_cast<int>(truth.rows.size()) > height - kMargin)
    throw OutOfBounds("truth rows violate the 10 px vertical margin");
  for (const TruthRow& row : truth.rows) {
    if (row.halfwidth <= 0.0)
      throw InvalidParams("truth halfwidth must be positive");
    if (row.center - row.halfwidth < kMargin ||
        row.center + row.halfwidth > width - kMargin)
      throw OutOfBounds("truth rows violate the 10 px lateral margin");
  }

  Scene scene;
  scene.image = RasterImage::filled(width, height, style.background[0],
                                    style.background[1], style.background[2]);
  scene.mask = BinaryMask::blank(width, height);

  for (std::size_t i = 0; i < truth.rows.size(); ++i) {
    const int y = truth.y0 + static_cast<int>(i);
    const double c = truth.rows[i].center;
    const double h = truth.rows[i].halfwidth;
    const int x_lo = static_cast<int>(std::ceil(c - h));
    const int x_hi = static_cast<int>(std::floor(c + h));
    for (int x = x_lo; x <= x_hi; ++x) {
      scene.mask.set(x, y, true);
      std::uint8_t* p = scene.image.at(x, y);
      double color[3];
      switch (style.pattern) {
        case FillPattern::kFlat:
          for (int ch = 0; ch < 3; ++ch) color[ch] = style.primary[ch];
          break;
        case FillPattern::kStripes: {
          double f0 = (x - 0.5 - (c - h)) / (2.0 * h);
          double f1 = (x + 0.5 - (c - h)) / (2.0 * h);
          stripe_coverage(style, f0, f1, color);
          break;
        }
        case FillPattern::kBands: {
          int band = static_cast<int>(i) / style.band_height;
          const auto& bc = (band % 2 == 0) ? style.primary : style.secondary;
          for (int ch = 0; ch < 3; ++ch) color[ch] = bc[ch];
          break;
        }
      }
      for (int ch = 0; ch < 3; ++ch)
        p[ch] = static_cast<std::uint8_t>(std::lround(color[ch]));
    }
  }

  if (style.noise_amplitude > 0) {
    const int amp = std::min(style.noise_amplitude, 8);
    Rng rng(0x5EEDBA5E5EEDBA5Eull);
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        std::uint8_t* p = scene.image.at(x, y);
        for (int ch = 0; ch < 3; ++ch)
          p[ch] = static_cast<std::uint8_t>(
              std::clamp(p[ch] + rng.noise(amp), 0, 255));
      }
    }
  }
  return scene;
}

std::vector<TruthProfile> standard_shapes() {
  constexpr int kY0 = 100;
  constexpr int kRows = 301;  // rows 100..400
  constexpr double kCenter = 256.0;

  auto build = [](ShapeTag tag, auto center_fn, auto halfwidth_fn) {
    TruthProfile truth;
    truth.y0 = kY0;
    truth.tag = tag;
    truth.rows.resize(kRows);
    for (int i = 0; i < kRows; ++i) {
      truth.rows[static_cast<std::size_t>(i)] = {center_fn(i),
                                                 halfwidth_fn(i)};
    }
    return truth;
  };
  const double span = kRows - 1;  // 300 rows of travel

  std::vector<TruthProfile> shapes;
  shapes.push_back(build(
      ShapeTag::kCylinder, [&](int) { return kCenter; },
      [](int) { return 50.0; }));
  shapes.push_back(build(
      ShapeTag::kCone, [&](int) { return kCenter; },
      [&](int i) { return 80.0 + (2.0 - 80.0) * i / span; }));
  shapes.push_back(build(
      ShapeTag::kVase, [&](int) { return kCenter; },
      [&](int i) { return 60.0 + 25.0 * std::sin(2.0 * kPi * i / span); }));
  shapes.push_back(build(
      ShapeTag::kSCurve,
      [&](int i) { return kCenter + 30.0 * std::sin(2.0 * kPi * i / span); },
      [](int) { return 40.0; }));
  return shapes;
}

ProfileMetrics compare_profiles(const SilhouetteProfile& recovered,
                                const TruthProfile& truth) {
  const int rec_lo = recovered.y0;
  const int rec_hi = recovered.y0 + static_cast<int>(recovered.rows.size());
  const int tru_lo = truth.y0;
  const int tru_hi = truth.y0 + static_cast<int>(truth.rows.size());
  const int lo = std::max(rec_lo, tru_lo);
  const int hi = std::min(rec_hi, tru_hi);
  if (lo >= hi) throw NoOverlap("profiles share no rows");

  ProfileMetrics m;
  double sum_sq_h = 0.0, sum_sq_c = 0.0;
  for (int y = lo; y < hi; ++y) {
    const std::size_t ri = static_cast<std::size_t>(y - rec_lo);
    const std::size_t ti = static_cast<std::size_t>(y - tru_lo);
    const double err_c = recovered.center(ri) - truth.rows[ti].center;
    const double err_h = recovered.halfwidth(ri) - truth.rows[ti].halfwidth;
    sum_sq_c += err_c * err_c;
    sum_sq_h += err_h * err_h;
    m.max_abs_err =
        std::max({m.max_abs_err, std::abs(err_c), std::abs(err_h)});
  }
  const double n = hi - lo;
  m.rmse_center = std::sqrt(sum_sq_c / n);
  m.rmse_halfwidth = std::sqrt(sum_sq_h / n);
  m.row_coverage = n / static_cast<double>(truth.rows.size());
  return m;
}

std::string truth_csv(const TruthProfile& truth) {
  std::string csv = "y,center,halfwidth\n";
  char line[96];
  for (std::size_t i = 0; i < truth.rows.size(); ++i) {
    std::snprintf(line, sizeof(line), "%d,%.3f,%.3f\n",
                  truth.y0 + static_cast<int>(i), truth.rows[i].center,
                  truth.rows[i].halfwidth);
    csv += line;
  }
  return csv;
}

TruthProfile load_truth_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open truth CSV " + path);
  TruthProfile truth;
  truth.tag = ShapeTag::kCustom;
  std::string line;
  int line_no = 0;
  bool first_row = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1 && line.rfind("y,", 0) == 0) continue;  // header
    std::istringstream ss(line);
    int y;
    double center, halfwidth;
    char comma1, comma2;
    if (!(ss >> y >> comma1 >> center >> comma2 >> halfwidth) ||
        comma1 != ',' || comma2 != ',')
      throw ParseError(line_no, "expected \"y,center,halfwidth\"");
    if (first_row) {
      truth.y0 = y;
      first_row = false;
    } else if (y != truth.y0 + static_cast<int>(truth.rows.size())) {
      throw ParseError(line_no, "rows must be contiguous in y");
    }
    truth.rows.push_back({center, halfwidth});
  }
  if (truth.rows.empty()) throw ParseError(line_no, "no truth rows");
  return truth;
}

}  // namespace recon
