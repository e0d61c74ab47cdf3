#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "poibound/geo.hpp"
#include "poibound/metrics.hpp"
#include "poibound/model.hpp"

namespace poibound {

/// Brute-force quality curve: recomputes TP/FP/FN at every grid radius by a
/// full rescan straight from the precision/recall definitions. O(n * N);
/// deliberately shares nothing with the binned-profile implementation so
/// the two routes verify each other. Returns an empty curve when no grid
/// radius is feasible.
inline std::vector<QualityPoint> oracle_beq_curve(const Dataset& dataset,
                                                  const GeoCoord& center,
                                                  const PoiConfig& config) {
  const double rbar = config.gamma * config.r_cover;
  const double dr = config.delta_r;
  if (!(dr > 0.0) || !(rbar > 0.0)) return {};
  const double offset = distance(center, config.c0);

  std::int64_t n = std::max<std::int64_t>(
      0, static_cast<std::int64_t>(std::floor((rbar - offset) / dr)));
  while (offset + static_cast<double>(n + 1) * dr <= rbar) ++n;
  while (n > 0 && offset + static_cast<double>(n) * dr > rbar) --n;

  std::int64_t total_relevant = 0;
  for (const Record& rec : dataset.records) {
    if (rec.relevant && distance(center, rec.coord) <= rbar) ++total_relevant;
  }

  std::vector<QualityPoint> curve;
  curve.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) {
    const double r_i = static_cast<double>(i) * dr;
    std::int64_t tp = 0;
    std::int64_t inside = 0;
    for (const Record& rec : dataset.records) {
      if (distance(center, rec.coord) <= r_i) {
        ++inside;
        if (rec.relevant) ++tp;
      }
    }
    const std::int64_t fp = inside - tp;
    const std::int64_t fn = total_relevant - tp;

    QualityPoint q;
    q.radius = r_i;
    q.tp = tp;
    q.fp = fp;
    q.fn = fn;
    q.precision = (tp + fp) == 0 ? 0.0
                                 : static_cast<double>(tp) / static_cast<double>(tp + fp);
    q.recall = (tp + fn) == 0 ? 0.0
                              : static_cast<double>(tp) / static_cast<double>(tp + fn);
    q.f_measure = (q.precision + q.recall) == 0.0
                      ? 0.0
                      : 2.0 * q.precision * q.recall / (q.precision + q.recall);
    q.beq = std::pow(r_i / rbar, config.alpha) * q.f_measure;
    curve.push_back(q);
  }
  return curve;
}

}  // namespace poibound
