#pragma once

#include "vulnmap/grid.hpp"

namespace vulnmap {

/// Exact Euclidean distance transform: each cell receives the distance in
/// meters from its center to the nearest true cell's center; true cells
/// receive 0. Throws std::invalid_argument when the mask has no true cell.
ValueGrid distance_transform(const MaskGrid& mask);

}  // namespace vulnmap
