#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "poibound/errors.hpp"
#include "poibound/geo.hpp"
#include "poibound/metrics.hpp"
#include "poibound/model.hpp"
#include "poibound/radial_profile.hpp"

namespace poibound {

/// Output of one fixed-center radius solve.
struct SobestResult {
  double radius = 0.0;     // BEQ-maximizing grid radius, 0 if infeasible
  double f_measure = 0.0;
  double beq = 0.0;
  double r_m = 0.0;        // Phase-1 maximum radius with precision >= eta
  std::vector<QualityPoint> quality_curve;  // grid radii in (0, r_m]
  std::int64_t records_touched = 0;  // distance evaluations in the scan
  std::int64_t grid_points = 0;      // feasible grid size N
};

/// Number of feasible grid radii N: the largest N >= 0 with
/// center_offset + N*delta_r <= rbar. Shrinks as the center drifts from c0.
inline std::int64_t feasible_grid_size(double center_offset, double rbar,
                                       double delta_r) {
  std::int64_t n = std::max<std::int64_t>(
      0, static_cast<std::int64_t>(std::floor((rbar - center_offset) / delta_r)));
  while (center_offset + static_cast<double>(n + 1) * delta_r <= rbar) ++n;
  while (n > 0 && center_offset + static_cast<double>(n) * delta_r > rbar) --n;
  return n;
}

struct SobestSolve {
  SobestResult result;
  // Absent when no grid radius is feasible (nothing was scanned).
  std::optional<RadialProfile> profile;
};

/// Fixed-center radius search over the grid r_i = i*delta_r, i = 1..N.
/// Phase 1 keeps the maximum radius whose precision clears eta, even across
/// dips at intermediate radii. Phase 2 maximizes (r_i/rbar)^alpha * F over
/// i = 1..M with ties broken toward the larger radius.
inline SobestSolve sobest_solve(const Dataset& dataset, const GeoCoord& center,
                                const PoiConfig& config) {
  validate(config);
  const double rbar = config.search_radius();
  const double offset = distance(center, config.c0);
  if (offset >= rbar) {
    throw InfeasibleCenterError("center lies at or beyond r_bar from c0");
  }

  SobestSolve solve;
  const std::int64_t n = feasible_grid_size(offset, rbar, config.delta_r);
  solve.result.grid_points = n;
  if (n == 0) return solve;

  RadialProfile profile = build_profile(
      dataset, center, config.delta_r, static_cast<double>(n) * config.delta_r, rbar);
  solve.result.records_touched = profile.records_scanned;

  // Phase 1: r_M.
  std::int64_t m = 0;  // qualifying bin count, r_M = m * delta_r
  for (std::int64_t i = 1; i <= n; ++i) {
    const std::size_t j = static_cast<std::size_t>(i - 1);
    const double p = precision(profile.cum_relevant[j],
                               profile.cum_all[j] - profile.cum_relevant[j]);
    if (p >= config.eta) m = i;
  }
  solve.result.r_m = static_cast<double>(m) * config.delta_r;
  if (m == 0) {
    solve.profile = std::move(profile);
    return solve;
  }

  // Phase 2: argmax of the objective over i = 1..M.
  SobestResult& res = solve.result;
  res.quality_curve.reserve(static_cast<std::size_t>(m));
  double best_radius = 0.0;
  double best_f = 0.0;
  double best_beq = 0.0;
  for (std::int64_t i = 1; i <= m; ++i) {
    const std::size_t j = static_cast<std::size_t>(i - 1);
    const std::int64_t tp = profile.cum_relevant[j];
    const std::int64_t fp = profile.cum_all[j] - tp;
    const std::int64_t fn = profile.total_relevant_in_rbar - tp;
    const QualityPoint q = quality_at(profile.radius_at(j), tp, fp, fn, rbar,
                                      config.alpha);
    if (q.beq >= best_beq) {
      best_radius = q.radius;
      best_f = q.f_measure;
      best_beq = q.beq;
    }
    res.quality_curve.push_back(q);
  }
  res.radius = best_radius;
  res.f_measure = best_f;
  res.beq = best_beq;
  solve.profile = std::move(profile);
  return solve;
}

inline SobestResult sobest(const Dataset& dataset, const GeoCoord& center,
                           const PoiConfig& config) {
  return sobest_solve(dataset, center, config).result;
}

}  // namespace poibound
