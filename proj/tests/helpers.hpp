// Shared scene builders for tests.

#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "poibound/geo.hpp"
#include "poibound/model.hpp"
#include "poibound/synth.hpp"

namespace testing_helpers {

using poibound::Dataset;
using poibound::GeoCoord;
using poibound::PoiConfig;
using poibound::Record;

/// Coordinate at a metric offset (east, north) from a center.
inline GeoCoord offset_coord(const GeoCoord& center, double dx_m, double dy_m) {
  return poibound::LocalFrame(center).coord_at(dx_m, dy_m);
}

/// Appends `count` records at the given radial distance, fanned over
/// bearings so no two coincide.
inline void ring_at(Dataset& dataset, const GeoCoord& center, double dist_m,
                    int count, bool relevant, double bearing0_deg = 0.0) {
  for (int i = 0; i < count; ++i) {
    const double bearing =
        (bearing0_deg + 360.0 * i / count) * std::numbers::pi / 180.0;
    Record rec;
    rec.id = "t" + std::to_string(dataset.records.size());
    rec.coord = offset_coord(center, dist_m * std::sin(bearing),
                             dist_m * std::cos(bearing));
    rec.text = relevant ? "at the place" : "elsewhere";
    rec.relevant = relevant;
    dataset.records.push_back(rec);
  }
}

/// Two-circle reference scene with hand-countable quality values:
/// 6 relevant + 2 irrelevant within r2 = 100 m, 8 relevant + 12 irrelevant
/// within r1 = 200 m, 10 relevant total within r_bar. Distances sit mid-bin
/// so the delta_r = 10 grid never straddles a record.
inline std::pair<Dataset, PoiConfig> worked_example_scene() {
  const GeoCoord center{0.0, 0.0};
  Dataset dataset;
  dataset.provenance = "worked-example";
  ring_at(dataset, center, 45.0, 6, true);
  ring_at(dataset, center, 85.0, 2, false, 10.0);
  ring_at(dataset, center, 155.0, 2, true, 20.0);
  ring_at(dataset, center, 175.0, 10, false, 30.0);
  ring_at(dataset, center, 305.0, 2, true, 40.0);

  PoiConfig config;
  config.name = "worked example";
  config.queries = {"place"};
  config.c0 = center;
  config.r_cover = 100.0;  // r_bar = 1000
  return {dataset, config};
}

/// Gaussian-blob scene via the library generator, with the common test
/// geometry: sigma 50 m, background disk 1000 m (r_bar), so N = 100 bins.
inline poibound::Scene random_scene(std::uint64_t seed, std::int64_t n_relevant = 120,
                                    std::int64_t n_irrelevant = 380,
                                    double c0_offset = 0.0, double alpha = 0.0) {
  poibound::SceneSpec spec;
  spec.seed = seed;
  spec.true_center = {40.7, -74.0};
  spec.n_relevant = n_relevant;
  spec.n_irrelevant = n_irrelevant;
  spec.relevant_sigma = 50.0;
  spec.irrelevant_extent = 1000.0;
  spec.c0_offset = c0_offset;
  spec.offset_bearing = 70.0;
  spec.alpha = alpha;
  return poibound::generate(spec);
}

}  // namespace testing_helpers
