#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace vulnmap {

/// Georeferencing for a north-up raster. (x_origin, y_origin) is the
/// south-west corner of the extent in planar meters; row 0 is the
/// northernmost row of cells.
struct GridHeader {
  Eigen::Index ncols = 0;
  Eigen::Index nrows = 0;
  double x_origin = 0.0;
  double y_origin = 0.0;
  double cellsize = 1.0;
  double nodata = -9999.0;

  void validate() const {
    if (ncols < 1 || nrows < 1)
      throw std::invalid_argument("grid header: dimensions must be at least 1x1");
    if (!std::isfinite(cellsize) || cellsize <= 0.0)
      throw std::invalid_argument("grid header: cellsize must be positive and finite");
    if (!std::isfinite(x_origin) || !std::isfinite(y_origin) || !std::isfinite(nodata))
      throw std::invalid_argument("grid header: origin and nodata must be finite");
  }

  double width() const { return static_cast<double>(ncols) * cellsize; }
  double height() const { return static_cast<double>(nrows) * cellsize; }
  double x_max() const { return x_origin + width(); }
  double y_max() const { return y_origin + height(); }

  double cell_center_x(Eigen::Index col) const {
    return x_origin + (static_cast<double>(col) + 0.5) * cellsize;
  }
  double cell_center_y(Eigen::Index row) const {
    return y_origin + (static_cast<double>(nrows - row) - 0.5) * cellsize;
  }
  Eigen::Vector2d cell_center(Eigen::Index row, Eigen::Index col) const {
    return {cell_center_x(col), cell_center_y(row)};
  }

  bool operator==(const GridHeader&) const = default;
};

/// Dense raster of one scalar per cell, Eigen row-major storage, row 0 north.
template <class Scalar>
struct Grid {
  using Array = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  GridHeader header;
  Array cells;

  Grid() = default;

  Grid(const GridHeader& h, Scalar fill) : header(h) {
    header.validate();
    cells = Array::Constant(h.nrows, h.ncols, fill);
  }

  Eigen::Index rows() const { return cells.rows(); }
  Eigen::Index cols() const { return cells.cols(); }

  Scalar& operator()(Eigen::Index row, Eigen::Index col) { return cells(row, col); }
  const Scalar& operator()(Eigen::Index row, Eigen::Index col) const { return cells(row, col); }

  Scalar nodata_value() const { return static_cast<Scalar>(header.nodata); }
  bool is_nodata(Eigen::Index row, Eigen::Index col) const {
    return cells(row, col) == nodata_value();
  }
};

using ValueGrid = Grid<double>;
using NoteGrid = Grid<int>;
using MaskGrid = Grid<std::uint8_t>;

struct CellIndex {
  Eigen::Index row = 0;
  Eigen::Index col = 0;
  bool operator==(const CellIndex&) const = default;
};

/// Floor-based mapping of a planar point to its containing cell. Points on
/// the north/east edges of the extent (and NaNs) map to nullopt.
inline std::optional<CellIndex> point_to_cell(const Eigen::Vector2d& p, const GridHeader& h) {
  const double fx = (p.x() - h.x_origin) / h.cellsize;
  const double fy = (p.y() - h.y_origin) / h.cellsize;
  if (!(fx >= 0.0) || fx >= static_cast<double>(h.ncols)) return std::nullopt;
  if (!(fy >= 0.0) || fy >= static_cast<double>(h.nrows)) return std::nullopt;
  const auto col = static_cast<Eigen::Index>(std::floor(fx));
  const auto row_from_south = static_cast<Eigen::Index>(std::floor(fy));
  return CellIndex{h.nrows - 1 - row_from_south, col};
}

inline void require_aligned(const GridHeader& a, const GridHeader& b, const char* what) {
  if (!(a == b)) throw std::invalid_argument(std::string(what) + ": misaligned grid headers");
}

}  // namespace vulnmap
