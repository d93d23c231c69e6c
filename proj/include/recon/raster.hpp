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
#include <cstdint>
#include <string>
#include <vector>

namespace recon {

// 8-bit RGBA image, row-major, origin at the top-left, y growing downward.
struct RasterImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // width * height * 4 bytes

  static RasterImage filled(int width, int height, std::uint8_t r,
                            std::uint8_t g, std::uint8_t b,
                            std::uint8_t a = 255);

  const std::uint8_t* at(int x, int y) const {
    return pixels.data() + (static_cast<std::size_t>(y) * width + x) * 4;
  }
  std::uint8_t* at(int x, int y) {
    return pixels.data() + (static_cast<std::size_t>(y) * width + x) * 4;
  }
  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }
};

// One boolean per pixel, true = foreground. Same addressing as RasterImage.
struct BinaryMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;  // 0 or 1

  static BinaryMask blank(int width, int height);

  bool get(int x, int y) const {
    return bits[static_cast<std::size_t>(y) * width + x] != 0;
  }
  void set(int x, int y, bool value) {
    bits[static_cast<std::size_t>(y) * width + x] = value ? 1 : 0;
  }
  std::size_t popcount() const;
};

// Half-open pixel rectangle: x in [x0, x1), y in [y0, y1).
struct RectRegion {
  int x0 = 0;
  int y0 = 0;
  int x1 = 0;
  int y1 = 0;

  bool contains(int x, int y) const {
    return x >= x0 && x < x1 && y >= y0 && y < y1;
  }
  // Intersects the region with [0, width) x [0, height).
  RectRegion clipped(int width, int height) const;
};

struct SegmentationSettings {
  double tau = 12.0;        // foreground threshold on the color distance
  double variance_floor = 4.0;
  int border_band = 4;      // image-edge band folded into the background model
  int min_area = 100;       // smaller components are treated as no detection
};

// Decodes a PNG into RGBA8. Grayscale and paletted inputs are promoted;
// alpha is 255 where the file has none. Throws DecodeError.
RasterImage load_image(const std::string& path);

// Writes RGBA8 PNG. Output bytes depend only on the pixel data.
void save_image(const RasterImage& image, const std::string& path);

// Reads a mask image of the given dimensions; a pixel is foreground iff its
// rec.601 luminance exceeds 127. Throws DecodeError or DimensionMismatch.
BinaryMask load_mask(const std::string& path, int width, int height);

// 8-bit grayscale PNG, 255 = foreground.
void save_mask(const BinaryMask& mask, const std::string& path);

// Border-seeded color-model segmentation. A per-channel background model
// (mean, variance) is estimated from pixels outside the prior plus the image
// border band; pixels inside the prior whose squared distance exceeds tau are
// foreground. Keeps the largest 4-connected component intersecting the prior
// and applies one pass of 3x3 morphological closing. Throws EmptyMask when no
// component of at least min_area pixels survives.
BinaryMask segment_object(const RasterImage& image, const RectRegion& prior,
                          const SegmentationSettings& settings = {});

// Number of 4-connected foreground components.
int count_components4(const BinaryMask& mask);

// Intersection over union of two equal-sized masks (1.0 when both empty).
double mask_iou(const BinaryMask& a, const BinaryMask& b);

}  // namespace recon
