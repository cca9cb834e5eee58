#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vulnmap {

/// Layer roles accepted on input features. builtup drives the proximity
/// rings, exclusion blanks cells, sites are field observations; the rest
/// are the dumping-prone factor layers.
enum class LayerRole {
  builtup,
  river,
  floodplain,
  pasture,
  degraded,
  loam,
  road,
  exclusion,
  sites,
};

const char* to_string(LayerRole role);
std::optional<LayerRole> role_from_string(std::string_view name);

/// Closed ring of planar vertices (first vertex repeated last).
struct Polygon {
  std::vector<Eigen::Vector2d> ring;
  LayerRole role = LayerRole::builtup;
  std::string name;

  void validate() const;
};

struct Polyline {
  std::vector<Eigen::Vector2d> points;
  LayerRole role = LayerRole::builtup;
  std::string name;

  void validate() const;
};

struct PointFeature {
  Eigen::Vector2d position{0.0, 0.0};
  LayerRole role = LayerRole::builtup;
  std::string name;

  void validate() const;
};

struct FeatureSet {
  std::vector<Polygon> polygons;
  std::vector<Polyline> polylines;
  std::vector<PointFeature> points;
};

/// Absolute shoelace area of the ring, in square meters.
double polygon_area(const Polygon& polygon);

}  // namespace vulnmap
