#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "poibound/errors.hpp"
#include "poibound/geo.hpp"
#include "poibound/model.hpp"

namespace poibound {

/// Distance-binned cumulative counts around a center: the linear-time
/// substrate that replaces repeated full-dataset Filter scans with one pass
/// plus prefix sums. Bin i (1-based) covers ((i-1)*delta_r, i*delta_r], with
/// d = 0 landing in bin 1; arrays are stored 0-based, index j for bin j+1.
struct RadialProfile {
  GeoCoord center;
  double delta_r = 0.0;
  double max_radius = 0.0;
  std::vector<std::int64_t> cum_relevant;  // |D(center, r_{j+1})|
  std::vector<std::int64_t> cum_all;       // |D_all(center, r_{j+1})|
  std::int64_t total_relevant_in_rbar = 0;
  // Dataset indices of relevant records per bin, each list in dataset order.
  std::vector<std::vector<std::size_t>> member_bins;
  // Records examined while building; exactly one distance per record.
  std::int64_t records_scanned = 0;

  std::size_t bins() const { return cum_all.size(); }
  double radius_at(std::size_t j) const {
    return static_cast<double>(j + 1) * delta_r;
  }
};

namespace detail {

/// Smallest i >= 1 with d <= i*dr, pinned in double arithmetic so that the
/// boundary rule matches a direct `d <= i*dr` comparison bit for bit.
inline std::int64_t bin_index(double d, double dr) {
  std::int64_t i = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::ceil(d / dr)));
  while (i > 1 && d <= static_cast<double>(i - 1) * dr) --i;
  while (d > static_cast<double>(i) * dr) ++i;
  return i;
}

/// Largest m >= 0 with m*dr <= limit, same pinning.
inline std::int64_t full_bins_within(double limit, double dr) {
  std::int64_t m = std::max<std::int64_t>(
      0, static_cast<std::int64_t>(std::floor(limit / dr)));
  while (static_cast<double>(m + 1) * dr <= limit) ++m;
  while (m > 0 && static_cast<double>(m) * dr > limit) --m;
  return m;
}

}  // namespace detail

/// Single pass over the dataset: bins every record with d <= max_radius,
/// prefix-sums the counts, and indexes relevant members per bin.
inline RadialProfile build_profile(const Dataset& dataset, const GeoCoord& center,
                                   double delta_r, double max_radius, double rbar) {
  if (!(delta_r > 0.0)) throw InvalidParamsError("delta_r must be > 0");
  if (!(max_radius > 0.0 && max_radius <= rbar)) {
    throw InvalidParamsError("max_radius must satisfy 0 < max_radius <= rbar");
  }

  RadialProfile profile;
  profile.center = center;
  profile.delta_r = delta_r;
  profile.max_radius = max_radius;

  const std::size_t n_bins =
      static_cast<std::size_t>(detail::full_bins_within(max_radius, delta_r));
  std::vector<std::int64_t> bin_relevant(n_bins, 0);
  std::vector<std::int64_t> bin_all(n_bins, 0);
  profile.member_bins.resize(n_bins);

  for (std::size_t idx = 0; idx < dataset.records.size(); ++idx) {
    const Record& rec = dataset.records[idx];
    const double d = distance(center, rec.coord);
    ++profile.records_scanned;
    if (rec.relevant && d <= rbar) ++profile.total_relevant_in_rbar;
    if (d > max_radius) continue;
    const std::int64_t bin = detail::bin_index(d, delta_r);
    if (bin > static_cast<std::int64_t>(n_bins)) continue;
    const std::size_t j = static_cast<std::size_t>(bin - 1);
    ++bin_all[j];
    if (rec.relevant) {
      ++bin_relevant[j];
      profile.member_bins[j].push_back(idx);
    }
  }

  profile.cum_relevant.resize(n_bins);
  profile.cum_all.resize(n_bins);
  std::int64_t acc_rel = 0;
  std::int64_t acc_all = 0;
  for (std::size_t j = 0; j < n_bins; ++j) {
    acc_rel += bin_relevant[j];
    acc_all += bin_all[j];
    profile.cum_relevant[j] = acc_rel;
    profile.cum_all[j] = acc_all;
  }
  return profile;
}

/// Exactly the relevant records with d(center, .) <= radius, in dataset
/// order. Full bins are taken wholesale; the one partial bin is re-checked
/// by distance.
inline std::vector<Record> members_within(const RadialProfile& profile,
                                          const Dataset& dataset, double radius) {
  if (radius < 0.0 || radius > profile.max_radius) {
    throw RadiusOutOfRangeError("radius outside [0, max_radius]");
  }
  const std::int64_t m_full =
      std::min<std::int64_t>(detail::full_bins_within(radius, profile.delta_r),
                             static_cast<std::int64_t>(profile.bins()));
  std::vector<std::size_t> indices;
  for (std::int64_t j = 0; j < m_full; ++j) {
    const auto& bin = profile.member_bins[static_cast<std::size_t>(j)];
    indices.insert(indices.end(), bin.begin(), bin.end());
  }
  if (m_full < static_cast<std::int64_t>(profile.bins())) {
    for (std::size_t idx : profile.member_bins[static_cast<std::size_t>(m_full)]) {
      if (distance(profile.center, dataset.records[idx].coord) <= radius) {
        indices.push_back(idx);
      }
    }
  }
  std::sort(indices.begin(), indices.end());

  std::vector<Record> members;
  members.reserve(indices.size());
  for (std::size_t idx : indices) members.push_back(dataset.records[idx]);
  return members;
}

}  // namespace poibound
