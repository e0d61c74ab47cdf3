#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <map>
#include <vector>

#include "helpers.hpp"
#include "oracles.hpp"
#include "poibound/dbscan.hpp"

using namespace poibound;
using testing_helpers::offset_coord;
using testing_helpers::random_scene;

namespace {

std::vector<Record> blob(const GeoCoord& at, int count, std::uint64_t seed,
                         double spread_m) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const LocalFrame frame(at);
  std::vector<Record> out;
  for (int i = 0; i < count; ++i) {
    out.push_back({"b" + std::to_string(seed) + "_" + std::to_string(i),
                   frame.coord_at(spread_m * unit(rng), spread_m * unit(rng)),
                   "", true});
  }
  return out;
}

}  // namespace

TEST_CASE("coincident points form one cluster") {
  const GeoCoord spot{40.7, -74.0};
  std::vector<Record> points(10, Record{"", spot, "", true});
  for (std::size_t i = 0; i < points.size(); ++i) points[i].id = "p" + std::to_string(i);

  const DbscanResult result = dbscan(points, {5, 100.0});
  REQUIRE(result.clusters.size() == 1);
  CHECK(result.clusters[0].size() == 10);
  CHECK(result.noise.empty());
}

TEST_CASE("isolated points are all noise") {
  const GeoCoord center{40.7, -74.0};
  std::vector<Record> points;
  for (int i = 0; i < 4; ++i) {
    points.push_back({"i" + std::to_string(i),
                      offset_coord(center, 1000.0 * i, 700.0 * i), "", true});
  }
  const DbscanResult result = dbscan(points, {5, 100.0});
  CHECK(result.clusters.empty());
  CHECK(result.noise.size() == 4);
  for (int label : result.labels) CHECK(label == -1);
}

TEST_CASE("two distant blobs give two clusters matching the naive oracle") {
  const GeoCoord a{40.7, -74.0};
  const GeoCoord b = offset_coord(a, 1000.0, 0.0);  // 10 * eps apart
  std::vector<Record> points = blob(a, 50, 1, 60.0);
  const auto other = blob(b, 50, 2, 60.0);
  points.insert(points.end(), other.begin(), other.end());

  const DbscanParams params{5, 100.0};
  const DbscanResult result = dbscan(points, params);
  CHECK(result.clusters.size() == 2);

  const auto expected =
      testing_oracles::naive_dbscan_labels(points, params.eps, params.min_pts);
  REQUIRE(result.labels.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(result.labels[i] == expected[i]);
  }
}

TEST_CASE("grid-indexed labels equal the naive oracle on random scenes") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const auto scene = random_scene(seed, 180, 320);
    std::vector<Record> relevant;
    for (const Record& rec : scene.dataset.records) {
      if (rec.relevant) relevant.push_back(rec);
    }
    const DbscanParams params{5, scene.config.r_cover};
    const DbscanResult result = dbscan(relevant, params);
    const auto expected =
        testing_oracles::naive_dbscan_labels(relevant, params.eps, params.min_pts);
    CAPTURE(seed);
    REQUIRE(result.labels.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(result.labels[i] == expected[i]);
    }
  }
}

TEST_CASE("every point lands in exactly one cluster or noise") {
  const auto scene = random_scene(33, 200, 300);
  std::vector<Record> relevant;
  for (const Record& rec : scene.dataset.records) {
    if (rec.relevant) relevant.push_back(rec);
  }
  const DbscanResult result = dbscan(relevant, {5, scene.config.r_cover});
  std::size_t total = result.noise.size();
  for (const auto& cluster : result.clusters) total += cluster.size();
  CHECK(total == relevant.size());

  // Same input, same labels.
  const DbscanResult again = dbscan(relevant, {5, scene.config.r_cover});
  CHECK(again.labels == result.labels);
}

TEST_CASE("min_pts below 3 is rejected") {
  CHECK_THROWS_AS(dbscan(std::vector<Record>{}, {2, 100.0}), InvalidParamsError);
  CHECK_THROWS_AS(dbscan(std::vector<Record>{}, {5, 0.0}), InvalidParamsError);
}

TEST_CASE("tight pure cluster evaluates to F = 1") {
  const GeoCoord center{40.7, -74.0};
  Dataset dataset;
  const auto members = blob(center, 30, 9, 40.0);
  dataset.records = members;
  // Irrelevant records far away: outside the cluster circle.
  testing_helpers::ring_at(dataset, center, 900.0, 20, false);

  PoiConfig config;
  config.c0 = center;
  config.r_cover = 100.0;  // r_bar = 1000
  config.alpha = 0.5;

  const DbscanResult clustering = dbscan(members, {5, config.r_cover});
  REQUIRE(clustering.clusters.size() == 1);
  const ClusterEvaluation eval =
      evaluate_poi_cluster(clustering.clusters, dataset, config);
  CHECK(eval.f_measure == 1.0);
  CHECK(eval.beq ==
        Catch::Approx(std::pow(eval.r_d / 1000.0, 0.5)).margin(1e-12));
  CHECK(eval.r_d > 0.0);
}

TEST_CASE("no clusters evaluates to zero") {
  const ClusterEvaluation eval = evaluate_poi_cluster(
      {}, Dataset{}, PoiConfig{.c0 = {0, 0}, .r_cover = 100.0});
  CHECK(eval.f_measure == 0.0);
  CHECK(eval.beq == 0.0);
  CHECK(eval.cluster_members.empty());
}

TEST_CASE("mixed-scene evaluation matches a counting oracle") {
  for (std::uint64_t seed = 40; seed <= 50; ++seed) {
    const auto scene = random_scene(seed, 160, 340);
    std::vector<Record> relevant;
    const double rbar = scene.config.search_radius();
    for (const Record& rec : scene.dataset.records) {
      if (rec.relevant && distance(scene.config.c0, rec.coord) <= rbar) {
        relevant.push_back(rec);
      }
    }
    const DbscanResult clustering = dbscan(relevant, {5, scene.config.r_cover});
    const ClusterEvaluation eval =
        evaluate_poi_cluster(clustering.clusters, scene.dataset, scene.config);
    if (clustering.clusters.empty()) continue;

    // Independent recount from the definitions.
    auto min_id = [](const std::vector<Record>& cluster) {
      std::string best = cluster.front().id;
      for (const Record& r : cluster) best = std::min(best, r.id);
      return best;
    };
    const std::vector<Record>* largest = nullptr;
    for (const auto& cluster : clustering.clusters) {
      if (!largest || cluster.size() > largest->size() ||
          (cluster.size() == largest->size() && min_id(cluster) < min_id(*largest))) {
        largest = &cluster;
      }
    }
    double lat = 0.0, lon = 0.0;
    for (const Record& r : *largest) {
      lat += r.coord.lat;
      lon += r.coord.lon;
    }
    const GeoCoord c{lat / largest->size(), lon / largest->size()};
    double r_d = 0.0;
    for (const Record& r : *largest) r_d = std::max(r_d, distance(c, r.coord));

    std::int64_t tp = 0, fp = 0, fn = 0;
    for (const Record& r : scene.dataset.records) {
      const bool inside = distance(c, r.coord) <= r_d;
      if (inside && r.relevant) ++tp;
      if (inside && !r.relevant) ++fp;
      if (!inside && r.relevant && distance(scene.config.c0, r.coord) <= rbar) ++fn;
    }
    const double p = tp + fp ? double(tp) / double(tp + fp) : 0.0;
    const double rec = tp + fn ? double(tp) / double(tp + fn) : 0.0;
    const double f = p + rec ? 2 * p * rec / (p + rec) : 0.0;
    CAPTURE(seed);
    CHECK(eval.r_d == r_d);
    CHECK(eval.f_measure == Catch::Approx(f).margin(1e-12));
  }
}
