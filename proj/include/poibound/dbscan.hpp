#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "poibound/errors.hpp"
#include "poibound/geo.hpp"
#include "poibound/metrics.hpp"
#include "poibound/model.hpp"

namespace poibound {

struct DbscanParams {
  int min_pts = 5;       // >= 3; below that the result degenerates to
                         // single-link hierarchical clustering
  double eps = 0.0;      // meters; callers default this to r_cover
};

struct DbscanResult {
  std::vector<std::vector<Record>> clusters;  // members in input order
  std::vector<Record> noise;                  // input order
  std::vector<int> labels;  // aligned with input; -1 = noise
};

/// Modified-DBSCAN evaluation of the POI cluster under the circle protocol:
/// the cluster is reduced to the circle (centroid, r_d) before counting.
struct ClusterEvaluation {
  std::vector<Record> cluster_members;
  GeoCoord cluster_centroid;
  double r_d = 0.0;  // max distance from centroid to any cluster member
  double f_measure = 0.0;
  double beq = 0.0;
};

namespace detail {

/// Fixed-radius neighbor index: tangent-plane grid at cell size eps.
/// Candidate cells span +/-2 to absorb projection distortion; hits are
/// confirmed with the great-circle distance, so results are exact.
class EpsGrid {
 public:
  EpsGrid(std::span<const Record> records, double eps)
      : records_(records), eps_(eps), frame_(records.empty()
                                                 ? GeoCoord{}
                                                 : records.front().coord) {
    for (std::size_t i = 0; i < records_.size(); ++i) {
      cells_[cell_of(records_[i].coord)].push_back(i);
    }
  }

  /// Indices with great-circle distance <= eps of records_[i], ascending.
  /// Includes i itself.
  std::vector<std::size_t> neighbors(std::size_t i) const {
    const GeoCoord& q = records_[i].coord;
    const auto [cx, cy] = cell_of(q);
    std::vector<std::size_t> out;
    for (std::int64_t dx = -2; dx <= 2; ++dx) {
      for (std::int64_t dy = -2; dy <= 2; ++dy) {
        const auto it = cells_.find({cx + dx, cy + dy});
        if (it == cells_.end()) continue;
        for (std::size_t j : it->second) {
          if (distance(q, records_[j].coord) <= eps_) out.push_back(j);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::pair<std::int64_t, std::int64_t> cell_of(const GeoCoord& c) const {
    return {static_cast<std::int64_t>(std::floor(frame_.x_of(c) / eps_)),
            static_cast<std::int64_t>(std::floor(frame_.y_of(c) / eps_))};
  }

  std::span<const Record> records_;
  double eps_;
  LocalFrame frame_;
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::size_t>> cells_;
};

}  // namespace detail

/// Standard DBSCAN over relevant records. Core points have >= min_pts
/// neighbors within eps, inclusive and counting self; border points join
/// the first core point that reaches them in record order.
inline DbscanResult dbscan(std::span<const Record> relevant,
                           const DbscanParams& params) {
  if (params.min_pts < 3) throw InvalidParamsError("min_pts must be >= 3");
  if (!(params.eps > 0.0)) throw InvalidParamsError("eps must be > 0");

  constexpr int kUnvisited = -2;
  constexpr int kNoise = -1;
  const std::size_t n = relevant.size();
  DbscanResult result;
  result.labels.assign(n, kUnvisited);
  if (n == 0) return result;

  const detail::EpsGrid grid(relevant, params.eps);
  int cluster_id = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (result.labels[i] != kUnvisited) continue;
    const std::vector<std::size_t> seeds = grid.neighbors(i);
    if (seeds.size() < static_cast<std::size_t>(params.min_pts)) {
      result.labels[i] = kNoise;
      continue;
    }
    result.labels[i] = cluster_id;
    std::deque<std::size_t> frontier(seeds.begin(), seeds.end());
    while (!frontier.empty()) {
      const std::size_t j = frontier.front();
      frontier.pop_front();
      if (result.labels[j] == kNoise) result.labels[j] = cluster_id;  // border
      if (result.labels[j] != kUnvisited) continue;
      result.labels[j] = cluster_id;
      const std::vector<std::size_t> reach = grid.neighbors(j);
      if (reach.size() >= static_cast<std::size_t>(params.min_pts)) {
        for (std::size_t r : reach) {
          if (result.labels[r] == kUnvisited || result.labels[r] == kNoise) {
            frontier.push_back(r);
          }
        }
      }
    }
    ++cluster_id;
  }

  result.clusters.resize(static_cast<std::size_t>(cluster_id));
  for (std::size_t i = 0; i < n; ++i) {
    if (result.labels[i] == kNoise) {
      result.noise.push_back(relevant[i]);
    } else {
      result.clusters[static_cast<std::size_t>(result.labels[i])].push_back(relevant[i]);
    }
  }
  return result;
}

/// Picks the POI cluster (most relevant records; ties toward the lowest
/// minimum record id) and evaluates it: TP/FP count dataset records inside
/// the circle (centroid, r_d), FN counts relevant records of D(c0, r_bar)
/// outside it, and BEQ = (r_d/r_bar)^alpha * F. r_d may exceed r_bar, in
/// which case the coverage factor exceeds one; it is left uncapped.
inline ClusterEvaluation evaluate_poi_cluster(
    const std::vector<std::vector<Record>>& clusters, const Dataset& dataset,
    const PoiConfig& config) {
  ClusterEvaluation eval;
  eval.cluster_centroid = config.c0;
  if (clusters.empty()) return eval;

  auto min_id = [](const std::vector<Record>& cluster) {
    const Record* best = &cluster.front();
    for (const Record& r : cluster) {
      if (r.id < best->id) best = &r;
    }
    return best->id;
  };
  const std::vector<Record>* poi_cluster = nullptr;
  for (const auto& cluster : clusters) {
    if (cluster.empty()) continue;
    if (poi_cluster == nullptr || cluster.size() > poi_cluster->size() ||
        (cluster.size() == poi_cluster->size() && min_id(cluster) < min_id(*poi_cluster))) {
      poi_cluster = &cluster;
    }
  }
  if (poi_cluster == nullptr) return eval;

  eval.cluster_members = *poi_cluster;
  eval.cluster_centroid = centroid(std::span<const Record>(eval.cluster_members));
  for (const Record& r : eval.cluster_members) {
    eval.r_d = std::max(eval.r_d, distance(eval.cluster_centroid, r.coord));
  }

  const double rbar = config.search_radius();
  std::int64_t tp = 0, fp = 0, fn = 0;
  for (const Record& r : dataset.records) {
    const double d = distance(eval.cluster_centroid, r.coord);
    if (d <= eval.r_d) {
      if (r.relevant) {
        ++tp;
      } else {
        ++fp;
      }
    } else if (r.relevant && distance(config.c0, r.coord) <= rbar) {
      ++fn;
    }
  }
  eval.f_measure = f_measure(precision(tp, fp), recall(tp, fn));
  eval.beq = std::pow(eval.r_d / rbar, config.alpha) * eval.f_measure;
  return eval;
}

}  // namespace poibound
