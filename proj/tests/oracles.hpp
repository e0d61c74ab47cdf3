// Test-only brute-force oracles, independent of the production code paths
// they verify.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "poibound/geo.hpp"
#include "poibound/metrics.hpp"
#include "poibound/model.hpp"

namespace testing_oracles {

using poibound::Dataset;
using poibound::GeoCoord;
using poibound::Record;

/// Reference radius solve straight off a brute-force quality curve:
/// Phase-1 max qualifying radius, then the >=-tie argmax over the prefix.
struct RefSolve {
  double r_m = 0.0;
  double radius = 0.0;
  double f = 0.0;
  double beq = 0.0;
};

inline RefSolve reference_solve(const std::vector<poibound::QualityPoint>& curve,
                                double eta) {
  RefSolve ref;
  std::size_t m = 0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (curve[i].precision >= eta) {
      m = i + 1;
      ref.r_m = curve[i].radius;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (curve[i].beq >= ref.beq) {
      ref.radius = curve[i].radius;
      ref.f = curve[i].f_measure;
      ref.beq = curve[i].beq;
    }
  }
  return ref;
}

/// Naive O(n) filter: relevant records with d <= radius, dataset order.
inline std::vector<Record> naive_members(const Dataset& dataset,
                                         const GeoCoord& center, double radius) {
  std::vector<Record> out;
  for (const Record& rec : dataset.records) {
    if (rec.relevant && poibound::distance(center, rec.coord) <= radius) {
      out.push_back(rec);
    }
  }
  return out;
}

inline std::int64_t naive_count(const Dataset& dataset, const GeoCoord& center,
                                double radius, bool relevant_only) {
  std::int64_t n = 0;
  for (const Record& rec : dataset.records) {
    if (relevant_only && !rec.relevant) continue;
    if (poibound::distance(center, rec.coord) <= radius) ++n;
  }
  return n;
}

/// Textbook DBSCAN without an index: O(n^2) region queries, record-order
/// traversal, self counted, border points claimed by the first core that
/// reaches them.
inline std::vector<int> naive_dbscan_labels(const std::vector<Record>& points,
                                            double eps, int min_pts) {
  constexpr int kUnvisited = -2;
  constexpr int kNoise = -1;
  const std::size_t n = points.size();
  std::vector<int> labels(n, kUnvisited);

  auto region = [&](std::size_t i) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n; ++j) {
      if (poibound::distance(points[i].coord, points[j].coord) <= eps) {
        out.push_back(j);
      }
    }
    return out;
  };

  int cluster = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] != kUnvisited) continue;
    auto seeds = region(i);
    if (seeds.size() < static_cast<std::size_t>(min_pts)) {
      labels[i] = kNoise;
      continue;
    }
    labels[i] = cluster;
    for (std::size_t pos = 0; pos < seeds.size(); ++pos) {
      const std::size_t j = seeds[pos];
      if (labels[j] == kNoise) labels[j] = cluster;
      if (labels[j] != kUnvisited) continue;
      labels[j] = cluster;
      auto reach = region(j);
      if (reach.size() >= static_cast<std::size_t>(min_pts)) {
        for (std::size_t r : reach) {
          if (labels[r] == kUnvisited || labels[r] == kNoise) seeds.push_back(r);
        }
      }
    }
    ++cluster;
  }
  return labels;
}

/// Cubic hull oracle in a plane: a point is extreme iff it is not strictly
/// inside any triangle of three other points. Inputs must be deduplicated.
inline std::vector<std::size_t> brute_hull_indices(
    const std::vector<std::pair<double, double>>& pts) {
  auto cross = [](const std::pair<double, double>& o, const std::pair<double, double>& a,
                  const std::pair<double, double>& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
  };
  auto strictly_inside = [&](std::size_t p, std::size_t a, std::size_t b, std::size_t c) {
    const double d1 = cross(pts[a], pts[b], pts[p]);
    const double d2 = cross(pts[b], pts[c], pts[p]);
    const double d3 = cross(pts[c], pts[a], pts[p]);
    return (d1 > 0 && d2 > 0 && d3 > 0) || (d1 < 0 && d2 < 0 && d3 < 0);
  };

  const std::size_t n = pts.size();
  std::vector<std::size_t> extreme;
  for (std::size_t p = 0; p < n; ++p) {
    bool inside = false;
    for (std::size_t a = 0; a < n && !inside; ++a) {
      if (a == p) continue;
      for (std::size_t b = a + 1; b < n && !inside; ++b) {
        if (b == p) continue;
        for (std::size_t c = b + 1; c < n && !inside; ++c) {
          if (c == p) continue;
          if (strictly_inside(p, a, b, c)) inside = true;
        }
      }
    }
    if (!inside) extreme.push_back(p);
  }
  return extreme;
}

}  // namespace testing_oracles
