#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "poibound/errors.hpp"
#include "poibound/isobest.hpp"
#include "poibound/model.hpp"
#include "poibound/synth.hpp"

namespace poibound {

struct BenchPoint {
  std::int64_t n_all = 0;
  double mean_runtime_s = 0.0;
  double stdev_s = 0.0;
};

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Parses "start:stop:step" into the inclusive size ladder.
inline std::vector<std::int64_t> parse_sizes(const std::string& spec) {
  std::int64_t start = 0, stop = 0, step = 0;
  char sep1 = 0, sep2 = 0;
  std::istringstream in(spec);
  if (!(in >> start >> sep1 >> stop >> sep2 >> step) || sep1 != ':' || sep2 != ':' ||
      step <= 0 || start <= 0 || stop < start || !(in >> std::ws).eof()) {
    throw InvalidParamsError("sizes must be start:stop:step, e.g. 2000:5500:500");
  }
  std::vector<std::int64_t> sizes;
  for (std::int64_t n = start; n <= stop; n += step) sizes.push_back(n);
  return sizes;
}

/// Deterministic n-of-N subsample preserving dataset order.
inline Dataset subsample(const Dataset& full, std::int64_t n, std::uint64_t seed) {
  if (n > static_cast<std::int64_t>(full.records.size())) {
    throw InvalidParamsError("subsample larger than dataset");
  }
  std::vector<std::size_t> indices(full.records.size());
  std::iota(indices.begin(), indices.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = indices.size(); i > 1; --i) {
    std::swap(indices[i - 1], indices[detail::bounded(rng, i)]);
  }
  indices.resize(static_cast<std::size_t>(n));
  std::sort(indices.begin(), indices.end());

  Dataset sub;
  sub.provenance = full.provenance + ":sub" + std::to_string(n) + ":" + std::to_string(seed);
  sub.records.reserve(indices.size());
  for (std::size_t idx : indices) sub.records.push_back(full.records[idx]);
  return sub;
}

/// Times the estimation call only (profile build + optimization); the
/// subsampling happens outside the clock. Each repetition draws its own
/// subsample and records the per-call mean over `calls_per_rep` back-to-back
/// estimations, which amortizes scheduler spikes on sub-millisecond calls.
/// Repetitions are interleaved across sizes (rep-major order) so machine
/// drift during the run spreads over all sizes instead of biasing one.
inline std::vector<BenchPoint> run_bench(const Dataset& full, const PoiConfig& config,
                                         const std::vector<std::int64_t>& sizes,
                                         int reps, std::uint64_t seed,
                                         int calls_per_rep = 3) {
  if (reps < 1) throw InvalidParamsError("reps must be >= 1");
  if (calls_per_rep < 1) throw InvalidParamsError("calls_per_rep must be >= 1");

  std::vector<std::vector<double>> runtimes(sizes.size());
  for (int rep = -1; rep < reps; ++rep) {  // rep -1 is the warm-up round
    for (std::size_t si = 0; si < sizes.size(); ++si) {
      const std::int64_t n = sizes[si];
      const std::uint64_t rep_seed =
          seed ^ (static_cast<std::uint64_t>(n) * 0x9e3779b97f4a7c15ULL) ^
          static_cast<std::uint64_t>(rep + 1);
      const Dataset sub = subsample(full, n, rep_seed);
      const int calls = rep < 0 ? 1 : calls_per_rep;
      const auto t0 = std::chrono::steady_clock::now();
      for (int c = 0; c < calls; ++c) {
        const BoundaryEstimate estimate = isobest(sub, config);
        (void)estimate;
      }
      const auto t1 = std::chrono::steady_clock::now();
      if (rep >= 0) {
        runtimes[si].push_back(std::chrono::duration<double>(t1 - t0).count() / calls);
      }
    }
  }

  std::vector<BenchPoint> points;
  points.reserve(sizes.size());
  for (std::size_t si = 0; si < sizes.size(); ++si) {
    BenchPoint p;
    p.n_all = sizes[si];
    p.mean_runtime_s = std::accumulate(runtimes[si].begin(), runtimes[si].end(), 0.0) /
                       runtimes[si].size();
    double ss = 0.0;
    for (double t : runtimes[si]) {
      ss += (t - p.mean_runtime_s) * (t - p.mean_runtime_s);
    }
    p.stdev_s = runtimes[si].size() > 1 ? std::sqrt(ss / (runtimes[si].size() - 1)) : 0.0;
    points.push_back(p);
  }
  return points;
}

/// Least-squares fit of mean runtime against n_all.
inline LinearFit linear_fit(const std::vector<BenchPoint>& points) {
  if (points.size() < 2) throw InvalidParamsError("linear fit needs >= 2 points");
  const double n = static_cast<double>(points.size());
  double sx = 0.0, sy = 0.0;
  for (const BenchPoint& p : points) {
    sx += static_cast<double>(p.n_all);
    sy += p.mean_runtime_s;
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const BenchPoint& p : points) {
    const double dx = static_cast<double>(p.n_all) - mx;
    const double dy = p.mean_runtime_s - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (const BenchPoint& p : points) {
    const double pred = fit.intercept + fit.slope * static_cast<double>(p.n_all);
    ss_res += (p.mean_runtime_s - pred) * (p.mean_runtime_s - pred);
  }
  fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return fit;
}

}  // namespace poibound
