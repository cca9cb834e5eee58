#include "vulnmap/rasterize.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace vulnmap {

namespace {

// Indices in [0, n) whose closed unit span [i, i+1] overlaps [u, v].
// Touching an edge counts. Returns false when the overlap is empty.
// Bounds are clamped in double space so far-away coordinates cannot
// overflow the index cast.
bool spans_overlapping(double u, double v, Eigen::Index n, Eigen::Index& lo, Eigen::Index& hi) {
  const double lo_f = std::ceil(u) - 1.0;
  const double hi_f = std::floor(v);
  if (hi_f < 0.0 || lo_f > static_cast<double>(n - 1)) return false;
  lo = static_cast<Eigen::Index>(std::max(0.0, lo_f));
  hi = static_cast<Eigen::Index>(std::min(static_cast<double>(n - 1), hi_f));
  return lo <= hi;
}

// Columns whose center lies in [a, b), clamped to the grid.
bool center_cols_in(double a, double b, const GridHeader& h, Eigen::Index& lo, Eigen::Index& hi) {
  const double lo_f = std::ceil((a - h.x_origin) / h.cellsize - 0.5);
  const double hi_f = std::ceil((b - h.x_origin) / h.cellsize - 0.5) - 1.0;
  if (hi_f < 0.0 || lo_f > static_cast<double>(h.ncols - 1)) return false;
  lo = static_cast<Eigen::Index>(std::max(0.0, lo_f));
  hi = static_cast<Eigen::Index>(std::min(static_cast<double>(h.ncols - 1), hi_f));
  return lo <= hi;
}

}  // namespace

void burn_polygon(const Polygon& polygon, MaskGrid& mask) {
  polygon.validate();
  const GridHeader& h = mask.header;
  const auto& ring = polygon.ring;

  double ymin = ring[0].y(), ymax = ring[0].y();
  for (const auto& p : ring) {
    ymin = std::min(ymin, p.y());
    ymax = std::max(ymax, p.y());
  }

  std::vector<double> xs;
  for (Eigen::Index r = 0; r < h.nrows; ++r) {
    const double y = h.cell_center_y(r);
    if (y < ymin || y > ymax) continue;

    xs.clear();
    for (std::size_t i = 0; i + 1 < ring.size(); ++i) {
      const auto& p = ring[i];
      const auto& q = ring[i + 1];
      if ((p.y() > y) != (q.y() > y)) {
        xs.push_back(p.x() + (y - p.y()) * (q.x() - p.x()) / (q.y() - p.y()));
      }
    }
    std::sort(xs.begin(), xs.end());

    // Even-odd fill: centers in [xs[2k], xs[2k+1]) are inside.
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
      Eigen::Index c_lo, c_hi;
      if (!center_cols_in(xs[i], xs[i + 1], h, c_lo, c_hi)) continue;
      for (Eigen::Index c = c_lo; c <= c_hi; ++c) mask(r, c) = 1;
    }
  }
}

void burn_polyline(const Polyline& line, MaskGrid& mask) {
  line.validate();
  const GridHeader& h = mask.header;
  const double cs = h.cellsize;

  for (std::size_t i = 0; i + 1 < line.points.size(); ++i) {
    const Eigen::Vector2d a = line.points[i];
    const Eigen::Vector2d b = line.points[i + 1];
    const double dy = b.y() - a.y();
    const double dx = b.x() - a.x();

    // Rows (counted from the south edge) whose closed band the segment touches.
    Eigen::Index s_lo, s_hi;
    if (!spans_overlapping((std::min(a.y(), b.y()) - h.y_origin) / cs,
                           (std::max(a.y(), b.y()) - h.y_origin) / cs, h.nrows, s_lo, s_hi))
      continue;

    for (Eigen::Index s = s_lo; s <= s_hi; ++s) {
      const double band_lo = h.y_origin + static_cast<double>(s) * cs;
      const double band_hi = band_lo + cs;

      double xa, xb;
      if (dy == 0.0) {
        if (a.y() < band_lo || a.y() > band_hi) continue;
        xa = std::min(a.x(), b.x());
        xb = std::max(a.x(), b.x());
      } else {
        const double t1 = (band_lo - a.y()) / dy;
        const double t2 = (band_hi - a.y()) / dy;
        const double t_lo = std::max(0.0, std::min(t1, t2));
        const double t_hi = std::min(1.0, std::max(t1, t2));
        if (t_lo > t_hi) continue;
        const double x1 = a.x() + t_lo * dx;
        const double x2 = a.x() + t_hi * dx;
        xa = std::min(x1, x2);
        xb = std::max(x1, x2);
      }

      Eigen::Index c_lo, c_hi;
      if (!spans_overlapping((xa - h.x_origin) / cs, (xb - h.x_origin) / cs, h.ncols, c_lo, c_hi))
        continue;
      const Eigen::Index row = h.nrows - 1 - s;
      for (Eigen::Index c = c_lo; c <= c_hi; ++c) mask(row, c) = 1;
    }
  }
}

void burn_point(const Eigen::Vector2d& position, MaskGrid& mask) {
  if (auto cell = point_to_cell(position, mask.header)) mask(cell->row, cell->col) = 1;
}

MaskGrid rasterize_polygon(const Polygon& polygon, const GridHeader& header) {
  MaskGrid mask(header, 0);
  burn_polygon(polygon, mask);
  return mask;
}

MaskGrid rasterize_polyline(const Polyline& line, const GridHeader& header) {
  MaskGrid mask(header, 0);
  burn_polyline(line, mask);
  return mask;
}

MaskGrid rasterize_role(const FeatureSet& features, LayerRole role, const GridHeader& header) {
  MaskGrid mask(header, 0);
  for (const auto& p : features.polygons)
    if (p.role == role) burn_polygon(p, mask);
  for (const auto& l : features.polylines)
    if (l.role == role) burn_polyline(l, mask);
  for (const auto& p : features.points)
    if (p.role == role) burn_point(p.position, mask);
  return mask;
}

}  // namespace vulnmap
