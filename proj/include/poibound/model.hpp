#pragma once

#include <span>
#include <string>
#include <vector>

#include "poibound/errors.hpp"
#include "poibound/geo.hpp"

namespace poibound {

/// One geo-tagged text posting.
struct Record {
  std::string id;
  GeoCoord coord;
  std::string text;
  bool relevant = false;
};

/// Ordered record collection. Record order is part of the dataset identity:
/// every consumer is deterministic given identical order.
struct Dataset {
  std::vector<Record> records;
  std::string provenance;

  std::size_t size() const { return records.size(); }
};

/// Per-POI parameters. The searching distance r_bar is derived, never
/// stored: r_bar = gamma * r_cover.
struct PoiConfig {
  std::string name;
  std::vector<std::string> queries;
  GeoCoord c0;             // initial representative coordinate
  double r_cover = 0.0;    // meters, approximate POI footprint radius
  double gamma = 10.0;
  double eta = 0.5;        // target quality threshold, in (0, 1)
  double delta_r = 10.0;   // radial sampling interval, meters
  double alpha = 0.0;      // radius exponent
  double delta = 1e-4;     // iteration tolerance

  double search_radius() const { return gamma * r_cover; }
};

inline void validate(const PoiConfig& cfg) {
  if (!(cfg.r_cover > 0.0)) throw InvalidParamsError("r_cover must be > 0");
  if (!(cfg.gamma > 0.0)) throw InvalidParamsError("gamma must be > 0");
  if (!(cfg.eta > 0.0 && cfg.eta < 1.0)) throw InvalidParamsError("eta must be in (0, 1)");
  if (!(cfg.delta_r > 0.0)) throw InvalidParamsError("delta_r must be > 0");
  if (!(cfg.alpha >= 0.0)) throw InvalidParamsError("alpha must be >= 0");
  if (!(cfg.delta > 0.0)) throw InvalidParamsError("delta must be > 0");
}

inline GeoCoord centroid(std::span<const Record> records) {
  if (records.empty()) throw EmptyInputError("centroid of empty record set");
  double lat_sum = 0.0;
  double lon_sum = 0.0;
  for (const Record& r : records) {
    lat_sum += r.coord.lat;
    lon_sum += r.coord.lon;
  }
  const double n = static_cast<double>(records.size());
  return GeoCoord{lat_sum / n, lon_sum / n};
}

}  // namespace poibound
