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

#include "recon/smoothing.hpp"

#include <cmath>
#include <cstddef>

#include "recon/errors.hpp"
#include "recon/log.hpp"

namespace recon {

namespace {

// Solves the dense system M x = b in place, partial pivoting. M is the tiny
// (order+1)^2 moment matrix, well conditioned for every window we accept.
std::vector<double> solve_linear(std::vector<std::vector<double>> m,
                                 std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (m[pivot][col] == 0.0)
      throw InvalidParams("singular normal equations");
    std::swap(m[col], m[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      double f = m[r][col] / m[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t r = n; r-- > 0;) {
    double s = b[r];
    for (std::size_t c = r + 1; c < n; ++c) s -= m[r][c] * x[c];
    x[r] = s / m[r][r];
  }
  return x;
}

// Padded sample lookup. Mirror reflects across the boundary with the edge
// sample duplicated: ..., s[1], s[0] | s[0], s[1], ...
double padded(const std::vector<double>& s, long i, EdgeMode mode) {
  const long n = static_cast<long>(s.size());
  if (i >= 0 && i < n) return s[static_cast<std::size_t>(i)];
  switch (mode) {
    case EdgeMode::kMirror:
      return i < 0 ? s[static_cast<std::size_t>(-1 - i)]
                   : s[static_cast<std::size_t>(2 * n - 1 - i)];
    case EdgeMode::kExtend:
      return i < 0 ? s.front() : s.back();
  }
  return 0.0;
}

}  // namespace

SavGolKernel savgol_coefficients(int window, int order) {
  if (window < 3 || window % 2 == 0)
    throw InvalidParams("window must be odd and >= 3");
  if (order < 0 || order >= window)
    throw InvalidParams("order must satisfy 0 <= order < window");

  const int half = (window - 1) / 2;
  const int terms = order + 1;

  // Moment matrix M[j][k] = sum_i x_i^(j+k) over x = -half..half.
  std::vector<double> moments(2 * order + 1, 0.0);
  for (int i = -half; i <= half; ++i) {
    double p = 1.0;
    for (int d = 0; d <= 2 * order; ++d) {
      moments[d] += p;
      p *= i;
    }
  }
  std::vector<std::vector<double>> m(terms, std::vector<double>(terms));
  for (int j = 0; j < terms; ++j)
    for (int k = 0; k < terms; ++k) m[j][k] = moments[j + k];

  // The fitted polynomial evaluated at the window center is c_0, so the
  // weight vector is A * (A^T A)^-1 e_0.
  std::vector<double> rhs(terms, 0.0);
  rhs[0] = 1.0;
  std::vector<double> z = solve_linear(std::move(m), std::move(rhs));

  SavGolKernel kernel;
  kernel.window = window;
  kernel.order = order;
  kernel.weights.resize(window);
  for (int i = 0; i < window; ++i) {
    double x = i - half;
    double p = 1.0, w = 0.0;
    for (int j = 0; j < terms; ++j) {
      w += z[j] * p;
      p *= x;
    }
    kernel.weights[i] = w;
  }
  // The exact weights are symmetric and sum to 1; fold out the elimination
  // round-off so both hold to the last bit.
  for (int i = 0; i < half; ++i) {
    double avg = 0.5 * (kernel.weights[i] + kernel.weights[window - 1 - i]);
    kernel.weights[i] = avg;
    kernel.weights[window - 1 - i] = avg;
  }
  double sum = 0.0;
  for (double w : kernel.weights) sum += w;
  for (double& w : kernel.weights) w /= sum;
  return kernel;
}

std::vector<double> smooth_series(const std::vector<double>& series,
                                  const SavGolKernel& kernel,
                                  EdgeMode edge_mode) {
  if (series.size() < static_cast<std::size_t>(kernel.window)) return series;
  const long n = static_cast<long>(series.size());
  const long half = (kernel.window - 1) / 2;
  std::vector<double> out(series.size());
  for (long i = 0; i < n; ++i) {
    double acc = 0.0;
    for (long k = -half; k <= half; ++k)
      acc += kernel.weights[static_cast<std::size_t>(k + half)] *
             padded(series, i + k, edge_mode);
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

SilhouetteProfile smooth_profile(const SilhouetteProfile& profile,
                                 const SavGolKernel& kernel,
                                 bool smooth_radius) {
  const std::size_t n = profile.rows.size();
  std::vector<double> centers(n), halfwidths(n);
  for (std::size_t i = 0; i < n; ++i) {
    centers[i] = profile.center(i);
    halfwidths[i] = profile.halfwidth(i);
  }
  centers = smooth_series(centers, kernel);
  if (smooth_radius) halfwidths = smooth_series(halfwidths, kernel);

  SilhouetteProfile out;
  out.y0 = profile.y0;
  out.rows.resize(n);
  int clamped = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double h = halfwidths[i];
    // Smoothing the radius may undershoot; the untouched series keeps the
    // profile's own halfwidth > 0 guarantee.
    if (smooth_radius && h < 1.0) {
      h = 1.0;
      ++clamped;
    }
    out.rows[i] = ProfileRow{centers[i] - h, centers[i] + h, true};
  }
  if (clamped > 0)
    log(LogLevel::kWarn, "smooth_profile: halfwidth clamped to 1.0 on " +
                             std::to_string(clamped) + " row(s)");
  return out;
}

}  // namespace recon
