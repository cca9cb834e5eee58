#include "vulnmap/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace vulnmap {

const char* to_string(LayerRole role) {
  switch (role) {
    case LayerRole::builtup: return "builtup";
    case LayerRole::river: return "river";
    case LayerRole::floodplain: return "floodplain";
    case LayerRole::pasture: return "pasture";
    case LayerRole::degraded: return "degraded";
    case LayerRole::loam: return "loam";
    case LayerRole::road: return "road";
    case LayerRole::exclusion: return "exclusion";
    case LayerRole::sites: return "sites";
  }
  return "?";
}

std::optional<LayerRole> role_from_string(std::string_view name) {
  for (LayerRole r : {LayerRole::builtup, LayerRole::river, LayerRole::floodplain,
                      LayerRole::pasture, LayerRole::degraded, LayerRole::loam,
                      LayerRole::road, LayerRole::exclusion, LayerRole::sites}) {
    if (name == to_string(r)) return r;
  }
  return std::nullopt;
}

namespace {

bool all_finite(const std::vector<Eigen::Vector2d>& pts) {
  for (const auto& p : pts) {
    if (!std::isfinite(p.x()) || !std::isfinite(p.y())) return false;
  }
  return true;
}

[[noreturn]] void fail(const std::string& what, const std::string& name) {
  throw std::invalid_argument(name.empty() ? what : what + " (feature '" + name + "')");
}

}  // namespace

void Polygon::validate() const {
  if (ring.size() < 4) fail("polygon: ring needs at least 4 vertices", name);
  if (ring.front() != ring.back()) fail("polygon: ring is not closed", name);
  if (!all_finite(ring)) fail("polygon: non-finite vertex", name);
}

void Polyline::validate() const {
  if (points.size() < 2) fail("polyline: needs at least 2 vertices", name);
  if (!all_finite(points)) fail("polyline: non-finite vertex", name);
}

void PointFeature::validate() const {
  if (!std::isfinite(position.x()) || !std::isfinite(position.y()))
    fail("point: non-finite coordinates", name);
}

double polygon_area(const Polygon& polygon) {
  polygon.validate();
  double twice = 0.0;
  for (std::size_t i = 0; i + 1 < polygon.ring.size(); ++i) {
    const auto& a = polygon.ring[i];
    const auto& b = polygon.ring[i + 1];
    twice += a.x() * b.y() - b.x() * a.y();
  }
  return std::abs(twice) / 2.0;
}

}  // namespace vulnmap
