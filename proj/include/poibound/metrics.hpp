#pragma once

#include <cmath>
#include <cstdint>

namespace poibound {

/// Classification quality at one sampled radius. tp + fn equals the number
/// of relevant records within r_bar of the profile center, fixed per center.
struct QualityPoint {
  double radius = 0.0;
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
  double beq = 0.0;
};

/// tp / (tp + fp). An empty circle has precision 0 (matching the
/// algorithm's initialization), so it never qualifies for r_M.
inline double precision(std::int64_t tp, std::int64_t fp) {
  const std::int64_t predicted = tp + fp;
  if (predicted == 0) return 0.0;
  return static_cast<double>(tp) / static_cast<double>(predicted);
}

/// tp / (tp + fn); 0 when there are no actual positives.
inline double recall(std::int64_t tp, std::int64_t fn) {
  const std::int64_t actual = tp + fn;
  if (actual == 0) return 0.0;
  return static_cast<double>(tp) / static_cast<double>(actual);
}

/// Harmonic mean of precision and recall; 0 when both are 0.
inline double f_measure(double precision, double recall) {
  const double sum = precision + recall;
  if (sum == 0.0) return 0.0;
  return 2.0 * precision * recall / sum;
}

/// Boundary estimation quality (radius/r_bar)^alpha * f. Uses 0^0 = 1
/// (std::pow guarantees it), so alpha = 0 degenerates to pure F.
inline double beq(double radius, double rbar, double alpha, double f) {
  return std::pow(radius / rbar, alpha) * f;
}

/// Assembles a QualityPoint from raw counts.
inline QualityPoint quality_at(double radius, std::int64_t tp, std::int64_t fp,
                               std::int64_t fn, double rbar, double alpha) {
  QualityPoint q;
  q.radius = radius;
  q.tp = tp;
  q.fp = fp;
  q.fn = fn;
  q.precision = precision(tp, fp);
  q.recall = recall(tp, fn);
  q.f_measure = f_measure(q.precision, q.recall);
  q.beq = beq(radius, rbar, alpha, q.f_measure);
  return q;
}

}  // namespace poibound
