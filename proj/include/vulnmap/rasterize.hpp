#pragma once

#include "vulnmap/geometry.hpp"
#include "vulnmap/grid.hpp"

namespace vulnmap {

/// Marks every cell whose center lies inside the ring under the even-odd
/// rule. A degenerate (zero-area) ring yields an empty mask.
MaskGrid rasterize_polygon(const Polygon& polygon, const GridHeader& header);

/// Supercover rasterization: marks every cell whose closed square the
/// segment chain intersects.
MaskGrid rasterize_polyline(const Polyline& line, const GridHeader& header);

/// OR-accumulating variants used when unioning several features into one mask.
void burn_polygon(const Polygon& polygon, MaskGrid& mask);
void burn_polyline(const Polyline& line, MaskGrid& mask);
void burn_point(const Eigen::Vector2d& position, MaskGrid& mask);

/// Union of all features carrying `role`, rasterized onto `header`.
MaskGrid rasterize_role(const FeatureSet& features, LayerRole role, const GridHeader& header);

}  // namespace vulnmap
