#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "petcm/errors.hpp"

namespace petcm {

/// 2D activity image, row-major doubles. The universal carrier: raw phantom
/// activity before normalization, [-1, 1] values after.
struct ImageGrid {
  std::vector<double> data;
  int height = 0;
  int width = 0;
  std::pair<double, double> spacing_mm{3.65, 3.65};

  ImageGrid() = default;
  ImageGrid(int h, int w, double fill = 0.0)
      : data(static_cast<std::size_t>(h) * w, fill), height(h), width(w) {}

  double& at(int r, int c) { return data[static_cast<std::size_t>(r) * width + c]; }
  double at(int r, int c) const { return data[static_cast<std::size_t>(r) * width + c]; }
  std::size_t size() const { return data.size(); }

  bool same_shape(const ImageGrid& other) const {
    return height == other.height && width == other.width;
  }
};

/// Shared affine range used to map a pair of images onto [-1, 1] and back.
struct NormParams {
  double src_min = 0.0;
  double src_max = 1.0;

  bool valid() const { return src_max > src_min; }
};

/// Aligned (full dose, low dose) training / evaluation sample.
struct PairedSlice {
  ImageGrid full;
  ImageGrid low;
  double dose_fraction = 1.0;
};

struct BackgroundMask {
  std::vector<bool> mask;  // true = foreground
  int height = 0;
  int width = 0;
  double threshold_used = 0.0;

  std::size_t foreground_count() const;
};

inline constexpr double kDefaultBackgroundRelThreshold = 0.05;

/// Affinely maps both images by their shared (min, max) onto [-1, 1].
/// Throws ShapeMismatch / DegenerateRange.
std::tuple<ImageGrid, ImageGrid, NormParams> normalize_joint(const ImageGrid& full,
                                                             const ImageGrid& low);

/// Exact affine inverse of normalize_joint.
ImageGrid denormalize(const ImageGrid& grid, const NormParams& params);

ImageGrid normalize_with(const ImageGrid& grid, const NormParams& params);

/// Foreground = value > min + rel_threshold * (max - min).
BackgroundMask background_mask(const ImageGrid& grid,
                               double rel_threshold = kDefaultBackgroundRelThreshold);

std::pair<double, double> min_max(const ImageGrid& grid);

void require_same_shape(const ImageGrid& a, const ImageGrid& b, const char* where);

}  // namespace petcm
