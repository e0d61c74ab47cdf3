#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "poibound/geo.hpp"
#include "poibound/model.hpp"

using namespace poibound;

TEST_CASE("distance identity") {
  const GeoCoord esb{40.74871, -73.98597};
  CHECK(distance(esb, esb) == 0.0);
}

TEST_CASE("distance small-angle equator check") {
  // R * dlambda in radians: 6371000 * 0.001 * pi/180.
  const double expected = kEarthRadiusM * 0.001 * kDegToRad;
  CHECK(distance({0.0, 0.0}, {0.0, 0.001}) == Catch::Approx(expected).margin(1e-3));
}

TEST_CASE("distance antipodal half circumference") {
  const double half = std::numbers::pi * kEarthRadiusM;
  CHECK(distance({0.0, 0.0}, {0.0, 180.0}) == Catch::Approx(half).margin(1.0));
  CHECK(std::isfinite(distance({0.0, 0.0}, {0.0, 180.0})));
}

TEST_CASE("distance symmetry and no NaN on random coordinates") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> lat(-90.0, 90.0);
  std::uniform_real_distribution<double> lon(-180.0, 180.0);
  for (int i = 0; i < 500; ++i) {
    const GeoCoord a{lat(rng), lon(rng)};
    const GeoCoord b{lat(rng), lon(rng)};
    const double dab = distance(a, b);
    const double dba = distance(b, a);
    CHECK(dab == dba);
    CHECK(std::isfinite(dab));
    CHECK(dab >= 0.0);
    CHECK(distance(a, a) == 0.0);
  }
}

TEST_CASE("centroid examples") {
  CHECK(centroid(std::vector<GeoCoord>{{10.0, 10.0}}) == GeoCoord{10.0, 10.0});

  const GeoCoord square = centroid(std::vector<GeoCoord>{
      {0.0, 0.0}, {2.0, 0.0}, {0.0, 2.0}, {2.0, 2.0}});
  CHECK(square.lat == Catch::Approx(1.0).margin(1e-12));
  CHECK(square.lon == Catch::Approx(1.0).margin(1e-12));

  const GeoCoord mean = centroid(std::vector<GeoCoord>{
      {40.0, -73.0}, {40.2, -73.4}, {40.4, -73.2}});
  CHECK(mean.lat == Catch::Approx(40.2).margin(1e-12));
  CHECK(mean.lon == Catch::Approx(-73.2).margin(1e-12));
}

TEST_CASE("centroid of empty input throws") {
  CHECK_THROWS_AS(centroid(std::vector<GeoCoord>{}), EmptyInputError);
}

TEST_CASE("centroid is permutation invariant") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> lat(40.0, 41.0);
  std::uniform_real_distribution<double> lon(-74.0, -73.0);
  std::vector<GeoCoord> pts;
  for (int i = 0; i < 50; ++i) pts.push_back({lat(rng), lon(rng)});
  const GeoCoord base = centroid(pts);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(pts.begin(), pts.end(), rng);
    const GeoCoord shuffled = centroid(pts);
    CHECK(shuffled.lat == Catch::Approx(base.lat).margin(1e-9));
    CHECK(shuffled.lon == Catch::Approx(base.lon).margin(1e-9));
  }
}

TEST_CASE("make_coord validates and normalizes") {
  CHECK_THROWS_AS(make_coord(91.0, 0.0), InvalidParamsError);
  CHECK_THROWS_AS(make_coord(0.0, std::nan("")), InvalidParamsError);
  CHECK(make_coord(0.0, 180.0).lon == -180.0);
  CHECK(make_coord(0.0, 370.0).lon == Catch::Approx(10.0).margin(1e-12));
  CHECK(make_coord(0.0, -180.0).lon == -180.0);
}

TEST_CASE("local frame round trip") {
  const GeoCoord origin{40.7, -74.0};
  const LocalFrame frame(origin);
  const GeoCoord p = frame.coord_at(123.0, -456.0);
  CHECK(frame.x_of(p) == Catch::Approx(123.0).margin(1e-9));
  CHECK(frame.y_of(p) == Catch::Approx(-456.0).margin(1e-9));
  // Planar offset and great-circle distance agree at POI scale.
  CHECK(distance(origin, p) == Catch::Approx(std::hypot(123.0, 456.0)).margin(0.01));
}
