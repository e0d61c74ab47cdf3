#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "poibound/geo.hpp"
#include "poibound/model.hpp"

namespace poibound {

enum class HullKind { polygon, segment, point, empty };

/// Social POI boundary: convex hull of the relevant records inside the
/// optimized circle. Vertices are counter-clockwise, stored as an open ring
/// (first vertex not repeated), in strictly convex position.
struct BoundaryPolygon {
  std::vector<GeoCoord> vertices;
  HullKind degenerate = HullKind::empty;
  double area_m2 = 0.0;
  GeoCoord projection_origin;  // tangent-plane origin used for the hull
};

namespace detail {

struct PlanePoint {
  double x = 0.0;
  double y = 0.0;
  GeoCoord original;
};

inline double cross(const PlanePoint& o, const PlanePoint& a, const PlanePoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Andrew's monotone chain over pre-sorted unique points; returns CCW hull
/// with collinear points dropped.
inline std::vector<PlanePoint> monotone_chain(const std::vector<PlanePoint>& pts) {
  const std::size_t n = pts.size();
  std::vector<PlanePoint> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);  // last point repeats the first
  return hull;
}

}  // namespace detail

/// Convex hull of the member records, computed in an equirectangular
/// tangent plane about `center` and mapped back to the original
/// coordinates. Duplicate coordinates collapse; fewer than 3 distinct
/// points, or all-collinear points, yield the matching degenerate variant.
inline BoundaryPolygon convex_hull(std::span<const Record> members,
                                   const GeoCoord& center) {
  BoundaryPolygon poly;
  poly.projection_origin = center;
  if (members.empty()) return poly;

  const LocalFrame frame(center);
  std::vector<detail::PlanePoint> pts;
  pts.reserve(members.size());
  for (const Record& rec : members) {
    pts.push_back({frame.x_of(rec.coord), frame.y_of(rec.coord), rec.coord});
  }
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const auto& a, const auto& b) {
                          return a.x == b.x && a.y == b.y;
                        }),
            pts.end());

  if (pts.size() == 1) {
    poly.degenerate = HullKind::point;
    poly.vertices = {pts.front().original};
    return poly;
  }

  std::vector<detail::PlanePoint> hull;
  if (pts.size() == 2) {
    hull = pts;
  } else {
    hull = detail::monotone_chain(pts);
  }

  poly.vertices.reserve(hull.size());
  for (const auto& p : hull) poly.vertices.push_back(p.original);
  if (hull.size() == 2) {
    poly.degenerate = HullKind::segment;
    return poly;
  }
  poly.degenerate = HullKind::polygon;

  double twice_area = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    twice_area += a.x * b.y - b.x * a.y;
  }
  poly.area_m2 = 0.5 * twice_area;
  return poly;
}

/// Point-in-boundary test with a tolerance in meters. Degenerate variants
/// test distance to the point or segment instead.
inline bool contains(const BoundaryPolygon& poly, const GeoCoord& point,
                     double tol_m = 1e-6) {
  const LocalFrame frame(poly.projection_origin);
  const double px = frame.x_of(point);
  const double py = frame.y_of(point);

  switch (poly.degenerate) {
    case HullKind::empty:
      return false;
    case HullKind::point: {
      const double dx = px - frame.x_of(poly.vertices[0]);
      const double dy = py - frame.y_of(poly.vertices[0]);
      return std::hypot(dx, dy) <= tol_m;
    }
    case HullKind::segment: {
      const double ax = frame.x_of(poly.vertices[0]);
      const double ay = frame.y_of(poly.vertices[0]);
      const double bx = frame.x_of(poly.vertices[1]);
      const double by = frame.y_of(poly.vertices[1]);
      const double len2 = (bx - ax) * (bx - ax) + (by - ay) * (by - ay);
      double t = len2 > 0.0 ? ((px - ax) * (bx - ax) + (py - ay) * (by - ay)) / len2 : 0.0;
      t = std::clamp(t, 0.0, 1.0);
      const double qx = ax + t * (bx - ax);
      const double qy = ay + t * (by - ay);
      return std::hypot(px - qx, py - qy) <= tol_m;
    }
    case HullKind::polygon:
      break;
  }

  // CCW polygon: inside iff not strictly right of any edge (signed distance).
  const std::size_t n = poly.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const GeoCoord& va = poly.vertices[i];
    const GeoCoord& vb = poly.vertices[(i + 1) % n];
    const double ax = frame.x_of(va), ay = frame.y_of(va);
    const double bx = frame.x_of(vb), by = frame.y_of(vb);
    const double cross = (bx - ax) * (py - ay) - (by - ay) * (px - ax);
    const double edge_len = std::hypot(bx - ax, by - ay);
    if (edge_len > 0.0 && cross / edge_len < -tol_m) return false;
  }
  return true;
}

}  // namespace poibound
