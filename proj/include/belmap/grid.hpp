#pragma once

#include <Eigen/Core>
#include <utility>

#include "belmap/errors.hpp"

namespace belmap {

using Index = Eigen::Index;

/// Rectangular raster of scalar cells with unit spacing.
///
/// Cells are addressed as (x, y) with x running along a row (column index)
/// and y selecting the row; (0, 0) is the bottom-left corner. Storage is a
/// row-major Eigen array with `height` rows and `width` columns, exposed
/// through values() so callers can work with Eigen expressions directly.
template <typename Scalar>
class Grid {
 public:
  using Array =
      Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  Grid() : cells_(0, 0) {}

  Grid(Index width, Index height, Scalar fill = Scalar(0))
      : cells_(checked(width, height, fill)) {}

  explicit Grid(Array cells) : cells_(std::move(cells)) {
    if (cells_.rows() <= 0 || cells_.cols() <= 0) {
      throw GridTooSmall("grid dimensions must be positive");
    }
  }

  Index width() const { return cells_.cols(); }
  Index height() const { return cells_.rows(); }
  Index size() const { return cells_.size(); }

  bool contains(Index x, Index y) const {
    return x >= 0 && x < width() && y >= 0 && y < height();
  }

  Scalar operator()(Index x, Index y) const { return cells_(y, x); }
  Scalar& operator()(Index x, Index y) { return cells_(y, x); }

  /// Row-major backing array: values()(y, x).
  const Array& values() const { return cells_; }
  Array& values() { return cells_; }

  bool same_shape(const Grid& other) const {
    return width() == other.width() && height() == other.height();
  }

 private:
  static Array checked(Index width, Index height, Scalar fill) {
    if (width <= 0 || height <= 0) {
      throw GridTooSmall("grid dimensions must be positive");
    }
    return Array::Constant(height, width, fill);
  }

  Array cells_;
};

using GridMap = Grid<double>;
using TextureMap = Grid<int>;

/// Camera cell position plus eye height above the local ground.
struct CameraPose {
  Index x = 0;
  Index y = 0;
  double height_above_ground = 0.0;
};

}  // namespace belmap
