#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "poibound/geo.hpp"
#include "poibound/model.hpp"
#include "poibound/radial_profile.hpp"
#include "poibound/sobest.hpp"

namespace poibound {

/// One accepted-or-probed iterate of the alternating solve.
struct IterationTrace {
  int k = 0;
  GeoCoord center;
  double radius = 0.0;
  double f_measure = 0.0;
  double beq = 0.0;
  std::int64_t n_members = 0;
};

/// Final boundary estimate: the penultimate iterate of the loop, plus the
/// full trace (including the probed iterate whose sub-delta gain ended it).
struct BoundaryEstimate {
  GeoCoord center;   // c*
  double radius = 0.0;  // r*
  double f_measure = 0.0;
  double beq = 0.0;
  std::vector<Record> members;  // D(c*, r*); empty when radius == 0
  std::vector<IterationTrace> trace;
  int iterations = 0;  // centroid-update steps executed
};

// Guards against delta = 0 misconfiguration; unreachable under a valid
// config since each accepted step gains at least delta and BEQ <= 1.
inline constexpr int kMaxIsobestIterations = 100;

/// Alternates fixed-center radius solves with centroid updates until the
/// BEQ improvement drops below delta, then returns the previous iterate.
/// A radius-0 initial solve (no feasible radius) returns immediately, and a
/// centroid drifting to r_bar or beyond from c0 ends the loop: the feasible
/// radius set at such a center is empty.
inline BoundaryEstimate isobest(const Dataset& dataset, const PoiConfig& config) {
  validate(config);
  const double rbar = config.search_radius();

  struct Iterate {
    GeoCoord center;
    SobestResult result;
    std::vector<Record> members;
  };
  auto solve_at = [&](const GeoCoord& center) {
    SobestSolve solve = sobest_solve(dataset, center, config);
    Iterate it;
    it.center = center;
    it.result = std::move(solve.result);
    if (it.result.radius > 0.0) {
      it.members = members_within(*solve.profile, dataset, it.result.radius);
    }
    return it;
  };

  BoundaryEstimate estimate;
  Iterate accepted = solve_at(config.c0);
  estimate.trace.push_back({0, accepted.center, accepted.result.radius,
                            accepted.result.f_measure, accepted.result.beq,
                            static_cast<std::int64_t>(accepted.members.size())});

  if (accepted.result.radius > 0.0) {
    for (int k = 1; k <= kMaxIsobestIterations; ++k) {
      const GeoCoord next_center = centroid(std::span<const Record>(accepted.members));
      if (distance(next_center, config.c0) >= rbar) break;
      Iterate probe = solve_at(next_center);
      estimate.trace.push_back({k, probe.center, probe.result.radius,
                                probe.result.f_measure, probe.result.beq,
                                static_cast<std::int64_t>(probe.members.size())});
      if (probe.result.beq - accepted.result.beq >= config.delta) {
        accepted = std::move(probe);
      } else {
        break;
      }
    }
  }

  estimate.center = accepted.center;
  estimate.radius = accepted.result.radius;
  estimate.f_measure = accepted.result.f_measure;
  estimate.beq = accepted.result.beq;
  estimate.members = std::move(accepted.members);
  estimate.iterations = static_cast<int>(estimate.trace.size()) - 1;
  return estimate;
}

}  // namespace poibound
