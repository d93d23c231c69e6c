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
#include <vector>

#include "recon/errors.hpp"
#include "recon/smoothing.hpp"
#include "savgol_oracle.hpp"
#include "test_util.hpp"

using namespace recon;

namespace {

std::vector<double> monomial_series(int length, int degree) {
  std::vector<double> series(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i)
    series[static_cast<std::size_t>(i)] =
        std::pow(static_cast<double>(i), degree);
  return series;
}

}  // namespace

TEST_CASE("savgol_coefficients match the known (5,2) kernel") {
  SavGolKernel kernel = savgol_coefficients(5, 2);
  const double expected[5] = {-3.0 / 35, 12.0 / 35, 17.0 / 35, 12.0 / 35,
                              -3.0 / 35};
  for (int i = 0; i < 5; ++i)
    CHECK(kernel.weights[i] == doctest::Approx(expected[i]).epsilon(1e-12));
}

TEST_CASE("savgol_coefficients agree with the least-squares oracle") {
  for (auto [window, order] :
       {std::pair{5, 2}, {7, 2}, {9, 3}, {11, 3}, {3, 2}, {13, 4}}) {
    SavGolKernel kernel = savgol_coefficients(window, order);
    std::vector<double> expected = testoracle::savgol_weights(window, order);
    for (int i = 0; i < window; ++i)
      CHECK(kernel.weights[static_cast<std::size_t>(i)] ==
            doctest::Approx(expected[static_cast<std::size_t>(i)])
                .epsilon(1e-10));
  }
}

TEST_CASE("(3,2) is the identity kernel") {
  SavGolKernel kernel = savgol_coefficients(3, 2);
  CHECK(kernel.weights[0] == doctest::Approx(0.0));
  CHECK(kernel.weights[1] == doctest::Approx(1.0));
  CHECK(kernel.weights[2] == doctest::Approx(0.0));
}

TEST_CASE("kernel invariants: unit sum, symmetry, polynomial reproduction") {
  for (auto [window, order] :
       {std::pair{5, 2}, {7, 2}, {9, 3}, {11, 3}, {15, 2}, {21, 5}}) {
    SavGolKernel kernel = savgol_coefficients(window, order);
    double sum = 0.0;
    for (double w : kernel.weights) sum += w;
    CHECK(std::abs(sum - 1.0) < 1e-12);
    for (int i = 0; i < window; ++i)
      CHECK(kernel.weights[static_cast<std::size_t>(i)] ==
            kernel.weights[static_cast<std::size_t>(window - 1 - i)]);

    // Convolving t^k, k <= order, reproduces interior samples exactly.
    const int n = 40;
    const int half = (window - 1) / 2;
    for (int degree = 0; degree <= std::min(order, 4); ++degree) {
      std::vector<double> series = monomial_series(n, degree);
      std::vector<double> smooth = smooth_series(series, kernel);
      for (int i = half; i < n - half; ++i)
        CHECK(std::abs(smooth[static_cast<std::size_t>(i)] -
                       series[static_cast<std::size_t>(i)]) < 1e-9);
    }
  }
}

TEST_CASE("savgol_coefficients reject invalid parameters") {
  CHECK_THROWS_AS(savgol_coefficients(4, 2), InvalidParams);
  CHECK_THROWS_AS(savgol_coefficients(1, 0), InvalidParams);
  CHECK_THROWS_AS(savgol_coefficients(5, 5), InvalidParams);
  CHECK_THROWS_AS(savgol_coefficients(5, -1), InvalidParams);
}

TEST_CASE("constant series pass through any kernel") {
  std::vector<double> series(7, 5.0);
  for (auto [window, order] : {std::pair{5, 2}, {7, 3}, {3, 1}}) {
    std::vector<double> smooth =
        smooth_series(series, savgol_coefficients(window, order));
    for (double v : smooth) CHECK(v == doctest::Approx(5.0).epsilon(1e-12));
  }
}

TEST_CASE("linear ramp survives (5,2) smoothing with mirror edges") {
  std::vector<double> ramp;
  for (int i = 0; i <= 20; ++i) ramp.push_back(i);
  std::vector<double> smooth = smooth_series(ramp, savgol_coefficients(5, 2));
  for (std::size_t i = 2; i + 2 < ramp.size(); ++i)
    CHECK(std::abs(smooth[i] - ramp[i]) < 1e-9);
  // Mirror padding bends the ramp at the ends; hand-convolving the mirrored
  // sequence gives |error| = 3/35 at i=0,1 (and symmetrically at the tail).
  CHECK(smooth[0] == doctest::Approx(3.0 / 35).epsilon(1e-9));
  CHECK(smooth[1] == doctest::Approx(1.0 - 3.0 / 35).epsilon(1e-9));
  for (std::size_t i = 0; i < ramp.size(); ++i)
    CHECK(std::abs(smooth[i] - ramp[i]) <= 0.5);
}

TEST_CASE("noisy cubic: smoothing reduces variance against the clean series") {
  const int n = 200;
  std::vector<double> clean(n), noisy(n);
  unsigned state = 12345;
  auto uniform = [&state]() {
    state = state * 1664525u + 1013904223u;
    return (state >> 8) / 16777216.0;  // [0, 1)
  };
  for (int i = 0; i < n; ++i) {
    double t = i / static_cast<double>(n - 1);
    clean[i] = 40 * t * t * t - 30 * t * t + 5 * t + 2;
    noisy[i] = clean[i] + (uniform() * 4.0 - 2.0);
  }
  std::vector<double> smooth =
      smooth_series(noisy, savgol_coefficients(11, 3));

  double var_in = 0.0, var_out = 0.0;
  for (int i = 0; i < n; ++i) {
    var_in += (noisy[i] - clean[i]) * (noisy[i] - clean[i]);
    var_out += (smooth[i] - clean[i]) * (smooth[i] - clean[i]);
  }
  CHECK(var_out < var_in);
}

TEST_CASE("series shorter than the window are returned unchanged") {
  std::vector<double> series = {1.0, 9.0, 4.0};
  CHECK(smooth_series(series, savgol_coefficients(5, 2)) == series);
}

TEST_CASE("smoothing commutes with reversal and with constant shifts") {
  std::vector<double> series = {3, 7, 1, 9, 2, 8, 4, 6, 5, 0, 7, 3, 8};
  SavGolKernel kernel = savgol_coefficients(7, 2);

  std::vector<double> smooth = smooth_series(series, kernel);
  std::vector<double> reversed(series.rbegin(), series.rend());
  std::vector<double> smooth_rev = smooth_series(reversed, kernel);
  for (std::size_t i = 0; i < series.size(); ++i)
    CHECK(smooth[i] ==
          doctest::Approx(smooth_rev[series.size() - 1 - i]).epsilon(1e-12));

  std::vector<double> shifted = series;
  for (double& v : shifted) v += 100.0;
  std::vector<double> smooth_shift = smooth_series(shifted, kernel);
  for (std::size_t i = 0; i < series.size(); ++i)
    CHECK(smooth_shift[i] ==
          doctest::Approx(smooth[i] + 100.0).epsilon(1e-12));
}

TEST_CASE("smooth_profile damps alternating center jitter") {
  SilhouetteProfile profile;
  profile.y0 = 0;
  for (int i = 0; i < 64; ++i) {
    double center = 100.0 + ((i % 2 == 0) ? 1.0 : -1.0);
    profile.rows.push_back(ProfileRow{center - 30.0, center + 30.0, true});
  }
  SilhouetteProfile smooth =
      smooth_profile(profile, savgol_coefficients(11, 3));
  for (std::size_t i = 0; i < smooth.size(); ++i)
    CHECK(std::abs(smooth.center(i) - 100.0) <= 0.35);
}

TEST_CASE("smooth_profile leaves a constant-center profile unchanged") {
  SilhouetteProfile profile = testutil::constant_profile(10, 40, 128.0, 25.0);
  SilhouetteProfile smooth =
      smooth_profile(profile, savgol_coefficients(11, 3));
  for (std::size_t i = 0; i < smooth.size(); ++i) {
    CHECK(smooth.center(i) == doctest::Approx(128.0).epsilon(1e-12));
    CHECK(smooth.halfwidth(i) == doctest::Approx(25.0).epsilon(1e-12));
  }
}

TEST_CASE("smooth_profile touches the halfwidth only when asked") {
  SilhouetteProfile profile;
  profile.y0 = 0;
  for (int i = 0; i < 48; ++i) {
    double h = 20.0 + ((i % 2 == 0) ? 2.0 : -2.0);
    profile.rows.push_back(ProfileRow{200.0 - h, 200.0 + h, true});
  }
  SavGolKernel kernel = savgol_coefficients(11, 3);

  SilhouetteProfile centered = smooth_profile(profile, kernel, false);
  for (std::size_t i = 0; i < centered.size(); ++i)
    CHECK(centered.halfwidth(i) == profile.halfwidth(i));

  SilhouetteProfile both = smooth_profile(profile, kernel, true);
  bool changed = false;
  for (std::size_t i = 0; i < both.size(); ++i)
    if (both.halfwidth(i) != profile.halfwidth(i)) changed = true;
  CHECK(changed);
  for (std::size_t i = 0; i < both.size(); ++i)
    CHECK(both.rows[i].left_x < both.rows[i].right_x);
}

TEST_CASE("smooth_profile clamps a collapsing smoothed halfwidth") {
  // A spike down to tiny widths: order-3 smoothing undershoots below zero
  // without the clamp.
  SilhouetteProfile profile;
  profile.y0 = 0;
  for (int i = 0; i < 41; ++i) {
    double h = (i >= 18 && i <= 22) ? 30.0 : 1.2;
    profile.rows.push_back(ProfileRow{100.0 - h, 100.0 + h, true});
  }
  SilhouetteProfile smooth =
      smooth_profile(profile, savgol_coefficients(11, 3), true);
  for (std::size_t i = 0; i < smooth.size(); ++i) {
    CHECK(smooth.rows[i].left_x < smooth.rows[i].right_x);
    CHECK(smooth.halfwidth(i) >= 1.0 - 1e-12);
  }
}
