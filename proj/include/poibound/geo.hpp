#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>

#include "poibound/errors.hpp"

namespace poibound {

inline constexpr double kEarthRadiusM = 6'371'000.0;  // mean Earth radius
inline constexpr double kDegToRad = std::numbers::pi / 180.0;
inline constexpr double kMetersPerDegLat = kEarthRadiusM * kDegToRad;

/// Geographic coordinate in degrees. lat in [-90, 90], lon in [-180, 180).
struct GeoCoord {
  double lat = 0.0;
  double lon = 0.0;

  friend bool operator==(const GeoCoord&, const GeoCoord&) = default;
};

/// Wraps a finite longitude into [-180, 180).
inline double normalize_lon(double lon) {
  double wrapped = std::fmod(lon + 180.0, 360.0);
  if (wrapped < 0.0) wrapped += 360.0;
  return wrapped - 180.0;
}

/// Validating constructor: rejects non-finite input and out-of-range
/// latitude, normalizes longitude.
inline GeoCoord make_coord(double lat, double lon) {
  if (!std::isfinite(lat) || !std::isfinite(lon)) {
    throw InvalidParamsError("coordinate must be finite");
  }
  if (lat < -90.0 || lat > 90.0) {
    throw InvalidParamsError("latitude out of [-90, 90]: " + std::to_string(lat));
  }
  return GeoCoord{lat, normalize_lon(lon)};
}

/// Great-circle distance in meters, spherical law of cosines.
/// The cosine sum is clamped to [-1, 1]: rounding can push it just outside
/// for near-coincident or near-antipodal points, which would yield NaN.
inline double distance(const GeoCoord& a, const GeoCoord& b) {
  if (a.lat == b.lat && a.lon == b.lon) return 0.0;
  const double phi_a = a.lat * kDegToRad;
  const double phi_b = b.lat * kDegToRad;
  const double dlambda = (b.lon - a.lon) * kDegToRad;
  const double c = std::sin(phi_a) * std::sin(phi_b) +
                   std::cos(phi_a) * std::cos(phi_b) * std::cos(dlambda);
  return kEarthRadiusM * std::acos(std::clamp(c, -1.0, 1.0));
}

/// Component-wise arithmetic mean in degree space. Not meaningful for point
/// sets straddling the antimeridian or containing a pole (unsupported
/// region; callers stay within a few km of a POI).
inline GeoCoord centroid(std::span<const GeoCoord> points) {
  if (points.empty()) throw EmptyInputError("centroid of empty point set");
  double lat_sum = 0.0;
  double lon_sum = 0.0;
  for (const GeoCoord& p : points) {
    lat_sum += p.lat;
    lon_sum += p.lon;
  }
  const double n = static_cast<double>(points.size());
  return GeoCoord{lat_sum / n, lon_sum / n};
}

/// Equirectangular tangent-plane frame about an origin: x east, y north,
/// both in meters. Adequate at POI scale (a few km); distortion grows with
/// distance from the origin and latitude.
class LocalFrame {
 public:
  explicit LocalFrame(const GeoCoord& origin)
      : origin_(origin),
        m_per_deg_lon_(kMetersPerDegLat * std::cos(origin.lat * kDegToRad)) {}

  const GeoCoord& origin() const { return origin_; }

  double x_of(const GeoCoord& p) const {
    return (p.lon - origin_.lon) * m_per_deg_lon_;
  }
  double y_of(const GeoCoord& p) const {
    return (p.lat - origin_.lat) * kMetersPerDegLat;
  }

  GeoCoord coord_at(double x, double y) const {
    return GeoCoord{origin_.lat + y / kMetersPerDegLat,
                    origin_.lon + x / m_per_deg_lon_};
  }

 private:
  GeoCoord origin_;
  double m_per_deg_lon_;
};

}  // namespace poibound
