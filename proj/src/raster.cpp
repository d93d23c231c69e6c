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

#include "recon/raster.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <numeric>

#include "recon/errors.hpp"
#include "recon/log.hpp"

namespace recon {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f != nullptr) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

}  // namespace

RasterImage RasterImage::filled(int width, int height, std::uint8_t r,
                                std::uint8_t g, std::uint8_t b,
                                std::uint8_t a) {
  RasterImage img;
  img.width = width;
  img.height = height;
  img.pixels.resize(static_cast<std::size_t>(width) * height * 4);
  for (std::size_t i = 0; i < img.pixels.size(); i += 4) {
    img.pixels[i + 0] = r;
    img.pixels[i + 1] = g;
    img.pixels[i + 2] = b;
    img.pixels[i + 3] = a;
  }
  return img;
}

BinaryMask BinaryMask::blank(int width, int height) {
  BinaryMask mask;
  mask.width = width;
  mask.height = height;
  mask.bits.assign(static_cast<std::size_t>(width) * height, 0);
  return mask;
}

std::size_t BinaryMask::popcount() const {
  return static_cast<std::size_t>(
      std::accumulate(bits.begin(), bits.end(), std::size_t{0}));
}

RectRegion RectRegion::clipped(int width, int height) const {
  RectRegion r;
  r.x0 = std::max(x0, 0);
  r.y0 = std::max(y0, 0);
  r.x1 = std::min(x1, width);
  r.y1 = std::min(y1, height);
  return r;
}

RasterImage load_image(const std::string& path) {
  FilePtr file(std::fopen(path.c_str(), "rb"));
  if (!file) throw DecodeError("cannot open " + path);

  png_byte header[8];
  if (std::fread(header, 1, 8, file.get()) != 8 ||
      png_sig_cmp(header, 0, 8) != 0) {
    throw DecodeError("not a PNG file: " + path);
  }

  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (png == nullptr) throw DecodeError("libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw DecodeError("libpng init failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw DecodeError("corrupt PNG: " + path);
  }

  png_init_io(png, file.get());
  png_set_sig_bytes(png, 8);
  png_read_info(png, info);

  // Normalize every supported layout to RGBA8.
  png_set_strip_16(png);
  png_set_packing(png);
  png_set_expand(png);
  if (png_get_color_type(png, info) == PNG_COLOR_TYPE_GRAY ||
      png_get_color_type(png, info) == PNG_COLOR_TYPE_GRAY_ALPHA) {
    png_set_gray_to_rgb(png);
  }
  png_set_add_alpha(png, 0xFF, PNG_FILLER_AFTER);
  png_read_update_info(png, info);

  RasterImage img;
  img.width = static_cast<int>(png_get_image_width(png, info));
  img.height = static_cast<int>(png_get_image_height(png, info));
  if (img.width < 1 || img.height < 1) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw DecodeError("zero-sized PNG: " + path);
  }
  img.pixels.resize(static_cast<std::size_t>(img.width) * img.height * 4);

  std::vector<png_bytep> rows(img.height);
  for (int y = 0; y < img.height; ++y) rows[y] = img.at(0, y);
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return img;
}

namespace {

void write_png(const std::string& path, int width, int height, int color_type,
               const std::vector<png_bytep>& rows) {
  FilePtr file(std::fopen(path.c_str(), "wb"));
  if (!file) throw IoError("cannot open " + path + " for writing");

  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (png == nullptr) throw IoError("libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("libpng init failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("PNG write failed: " + path);
  }

  png_init_io(png, file.get());
  png_set_IHDR(png, info, width, height, 8, color_type, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, const_cast<png_bytep*>(rows.data()));
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace

void save_image(const RasterImage& image, const std::string& path) {
  std::vector<png_bytep> rows(image.height);
  for (int y = 0; y < image.height; ++y)
    rows[y] = const_cast<png_bytep>(image.at(0, y));
  write_png(path, image.width, image.height, PNG_COLOR_TYPE_RGBA, rows);
}

BinaryMask load_mask(const std::string& path, int width, int height) {
  RasterImage img = load_image(path);
  if (img.width != width || img.height != height) {
    throw DimensionMismatch("mask " + path + " is " +
                            std::to_string(img.width) + "x" +
                            std::to_string(img.height) + ", expected " +
                            std::to_string(width) + "x" +
                            std::to_string(height));
  }
  BinaryMask mask = BinaryMask::blank(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const std::uint8_t* p = img.at(x, y);
      int luma = (299 * p[0] + 587 * p[1] + 114 * p[2]) / 1000;
      mask.set(x, y, luma > 127);
    }
  }
  return mask;
}

void save_mask(const BinaryMask& mask, const std::string& path) {
  std::vector<std::uint8_t> gray(static_cast<std::size_t>(mask.width) *
                                 mask.height);
  for (std::size_t i = 0; i < gray.size(); ++i)
    gray[i] = mask.bits[i] ? 255 : 0;
  std::vector<png_bytep> rows(mask.height);
  for (int y = 0; y < mask.height; ++y)
    rows[y] = gray.data() + static_cast<std::size_t>(y) * mask.width;
  write_png(path, mask.width, mask.height, PNG_COLOR_TYPE_GRAY, rows);
}

namespace {

// Labels 4-connected components; returns the label map (-1 = background)
// and fills sizes per label. Scan order makes labels deterministic.
std::vector<int> label_components(const BinaryMask& mask,
                                  std::vector<std::size_t>* sizes) {
  std::vector<int> labels(mask.bits.size(), -1);
  sizes->clear();
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < mask.bits.size(); ++start) {
    if (mask.bits[start] == 0 || labels[start] >= 0) continue;
    int label = static_cast<int>(sizes->size());
    std::size_t size = 0;
    stack.push_back(start);
    labels[start] = label;
    while (!stack.empty()) {
      std::size_t idx = stack.back();
      stack.pop_back();
      ++size;
      int x = static_cast<int>(idx % mask.width);
      int y = static_cast<int>(idx / mask.width);
      const int nx[4] = {x - 1, x + 1, x, x};
      const int ny[4] = {y, y, y - 1, y + 1};
      for (int n = 0; n < 4; ++n) {
        if (nx[n] < 0 || nx[n] >= mask.width || ny[n] < 0 ||
            ny[n] >= mask.height)
          continue;
        std::size_t nidx =
            static_cast<std::size_t>(ny[n]) * mask.width + nx[n];
        if (mask.bits[nidx] != 0 && labels[nidx] < 0) {
          labels[nidx] = label;
          stack.push_back(nidx);
        }
      }
    }
    sizes->push_back(size);
  }
  return labels;
}

// Keeps the largest component that has at least one pixel inside the prior.
// Returns an empty mask when none exists.
BinaryMask largest_component_in(const BinaryMask& mask,
                                const RectRegion& prior) {
  std::vector<std::size_t> sizes;
  std::vector<int> labels = label_components(mask, &sizes);

  std::vector<char> touches(sizes.size(), 0);
  for (int y = prior.y0; y < prior.y1; ++y) {
    for (int x = prior.x0; x < prior.x1; ++x) {
      int l = labels[static_cast<std::size_t>(y) * mask.width + x];
      if (l >= 0) touches[l] = 1;
    }
  }
  int best = -1;
  for (std::size_t l = 0; l < sizes.size(); ++l) {
    if (!touches[l]) continue;
    if (best < 0 || sizes[l] > sizes[best]) best = static_cast<int>(l);
  }

  BinaryMask out = BinaryMask::blank(mask.width, mask.height);
  if (best >= 0) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      out.bits[i] = labels[i] == best ? 1 : 0;
  }
  return out;
}

BinaryMask dilate3x3(const BinaryMask& mask) {
  BinaryMask out = BinaryMask::blank(mask.width, mask.height);
  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      bool any = false;
      for (int dy = -1; dy <= 1 && !any; ++dy) {
        for (int dx = -1; dx <= 1 && !any; ++dx) {
          int nx = x + dx, ny = y + dy;
          if (nx >= 0 && nx < mask.width && ny >= 0 && ny < mask.height &&
              mask.get(nx, ny))
            any = true;
        }
      }
      out.set(x, y, any);
    }
  }
  return out;
}

BinaryMask erode3x3(const BinaryMask& mask) {
  BinaryMask out = BinaryMask::blank(mask.width, mask.height);
  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      bool all = true;
      for (int dy = -1; dy <= 1 && all; ++dy) {
        for (int dx = -1; dx <= 1 && all; ++dx) {
          int nx = x + dx, ny = y + dy;
          if (nx < 0 || nx >= mask.width || ny < 0 || ny >= mask.height ||
              !mask.get(nx, ny))
            all = false;
        }
      }
      out.set(x, y, all);
    }
  }
  return out;
}

}  // namespace

BinaryMask segment_object(const RasterImage& image, const RectRegion& prior,
                          const SegmentationSettings& settings) {
  if (prior.x0 < 0 || prior.y0 < 0 || prior.x1 > image.width ||
      prior.y1 > image.height || prior.x0 >= prior.x1 ||
      prior.y0 >= prior.y1) {
    throw InvalidParams("segmentation prior does not lie inside the image");
  }

  // Background model from everything outside the prior plus the border band.
  double sum[3] = {0, 0, 0};
  double sum_sq[3] = {0, 0, 0};
  std::size_t count = 0;
  const int band = settings.border_band;
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      bool outside_prior = !prior.contains(x, y);
      bool in_band = x < band || y < band || x >= image.width - band ||
                     y >= image.height - band;
      if (!outside_prior && !in_band) continue;
      const std::uint8_t* p = image.at(x, y);
      for (int c = 0; c < 3; ++c) {
        sum[c] += p[c];
        sum_sq[c] += static_cast<double>(p[c]) * p[c];
      }
      ++count;
    }
  }
  double mean[3] = {0, 0, 0};
  double variance[3] = {settings.variance_floor, settings.variance_floor,
                        settings.variance_floor};
  if (count > 0) {
    for (int c = 0; c < 3; ++c) {
      mean[c] = sum[c] / count;
      double var = sum_sq[c] / count - mean[c] * mean[c];
      variance[c] = std::max(var, settings.variance_floor);
    }
  }

  // Classification is restricted to the prior; outside is background.
  BinaryMask raw = BinaryMask::blank(image.width, image.height);
  for (int y = prior.y0; y < prior.y1; ++y) {
    for (int x = prior.x0; x < prior.x1; ++x) {
      const std::uint8_t* p = image.at(x, y);
      double d = 0.0;
      for (int c = 0; c < 3; ++c) {
        double diff = p[c] - mean[c];
        d += diff * diff / variance[c];
      }
      raw.set(x, y, d > settings.tau);
    }
  }

  BinaryMask component = largest_component_in(raw, prior);
  BinaryMask closed = erode3x3(dilate3x3(component));
  // Closing cannot split a component here, but the contract is one
  // component, so label once more and keep the winner.
  BinaryMask result = largest_component_in(closed, prior);

  if (result.popcount() < static_cast<std::size_t>(settings.min_area)) {
    throw EmptyMask("no foreground component with area >= " +
                    std::to_string(settings.min_area) +
                    " intersects the prior");
  }
  log(LogLevel::kDebug,
      "segmented " + std::to_string(result.popcount()) + " px");
  return result;
}

int count_components4(const BinaryMask& mask) {
  std::vector<std::size_t> sizes;
  label_components(mask, &sizes);
  return static_cast<int>(sizes.size());
}

double mask_iou(const BinaryMask& a, const BinaryMask& b) {
  if (a.width != b.width || a.height != b.height)
    throw DimensionMismatch("mask_iou: masks differ in size");
  std::size_t inter = 0, uni = 0;
  for (std::size_t i = 0; i < a.bits.size(); ++i) {
    bool pa = a.bits[i] != 0, pb = b.bits[i] != 0;
    inter += pa && pb;
    uni += pa || pb;
  }
  return uni == 0 ? 1.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace recon
