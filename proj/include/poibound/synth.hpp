#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "poibound/errors.hpp"
#include "poibound/geo.hpp"
#include "poibound/model.hpp"
#include "poibound/tagging.hpp"

namespace poibound {

/// Seeded synthetic scene: relevant records form an isotropic Gaussian blob
/// around true_center, irrelevant records fill a uniform disk around the
/// (possibly displaced) reported c0. Generation is a pure function of the
/// spec: identical specs produce byte-identical datasets.
struct SceneSpec {
  std::uint64_t seed = 0;
  GeoCoord true_center;
  std::int64_t n_relevant = 0;
  std::int64_t n_irrelevant = 0;
  double relevant_sigma = 0.0;     // meters
  double irrelevant_extent = 0.0;  // meters; uniform-disk radius about c0
  double c0_offset = 0.0;          // meters from true_center to reported c0
  double offset_bearing = 0.0;     // degrees clockwise from north

  // POI parameters carried into the generated config. r_cover is derived:
  // r_cover = irrelevant_extent / gamma, so r_bar equals the background
  // disk radius and precision at r_bar comes out small.
  std::string name = "Synthetic Landmark";
  std::vector<std::string> queries = {"#synthlandmark", "Synthetic Landmark"};
  double gamma = 10.0;
  double eta = 0.5;
  double delta_r = 10.0;
  double alpha = 0.0;
  double delta = 1e-4;
};

struct Scene {
  Dataset dataset;
  PoiConfig config;
};

namespace detail {

// Sampling helpers pinned to the mt19937_64 bit stream, so datasets are
// reproducible across standard libraries (std distributions are not).
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::pair<double, double> gaussian_pair(std::mt19937_64& rng) {
  const double u1 = 1.0 - uniform01(rng);  // (0, 1]; keeps the log finite
  const double u2 = uniform01(rng);
  const double mag = std::sqrt(-2.0 * std::log(u1));
  const double ang = 2.0 * std::numbers::pi * u2;
  return {mag * std::cos(ang), mag * std::sin(ang)};
}

inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  // Rejection sampling; bias-free and implementation-independent.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

inline const std::array<std::string_view, 4>& relevant_templates() {
  static const std::array<std::string_view, 4> t = {
      "Checked in at {} today", "Loving the view from {}", "{} with friends!",
      "Evening walk around {}"};
  return t;
}

inline const std::array<std::string_view, 6>& irrelevant_texts() {
  static const std::array<std::string_view, 6> t = {
      "coffee break downtown",   "stuck in traffic again",
      "sunny afternoon, no plans", "new sneakers day",
      "lunch was amazing",       "rainy morning run"};
  return t;
}

inline std::string fill_template(std::string_view tmpl, std::string_view query) {
  std::string out;
  out.reserve(tmpl.size() + query.size());
  const std::size_t pos = tmpl.find("{}");
  out.append(tmpl.substr(0, pos));
  out.append(query);
  out.append(tmpl.substr(pos + 2));
  return out;
}

}  // namespace detail

inline void validate(const SceneSpec& spec) {
  if (spec.n_relevant < 0 || spec.n_irrelevant < 0) {
    throw InvalidSpecError("record counts must be >= 0");
  }
  if (spec.n_relevant > 0 && !(spec.relevant_sigma > 0.0)) {
    throw InvalidSpecError("relevant_sigma must be > 0");
  }
  if (!(spec.irrelevant_extent > 0.0)) {
    throw InvalidSpecError("irrelevant_extent must be > 0");
  }
  if (spec.c0_offset < 0.0) throw InvalidSpecError("c0_offset must be >= 0");
  if (!(spec.gamma > 0.0)) throw InvalidSpecError("gamma must be > 0");
  if (spec.queries.empty()) throw InvalidSpecError("queries must be nonempty");
}

/// Generates the dataset plus the PoiConfig whose c0 is true_center
/// displaced by c0_offset along offset_bearing. Record texts round-trip
/// through tag_relevance: relevant texts embed a query, irrelevant texts
/// are checked to match none.
inline Scene generate(const SceneSpec& spec) {
  validate(spec);

  const LocalFrame frame(spec.true_center);
  const double bearing_rad = spec.offset_bearing * kDegToRad;
  const GeoCoord c0 = frame.coord_at(spec.c0_offset * std::sin(bearing_rad),
                                     spec.c0_offset * std::cos(bearing_rad));

  std::mt19937_64 rng(spec.seed);
  std::vector<Record> records;
  records.reserve(static_cast<std::size_t>(spec.n_relevant + spec.n_irrelevant));

  const auto& templates = detail::relevant_templates();
  for (std::int64_t i = 0; i < spec.n_relevant; ++i) {
    const auto [gx, gy] = detail::gaussian_pair(rng);
    const GeoCoord coord =
        frame.coord_at(gx * spec.relevant_sigma, gy * spec.relevant_sigma);
    const std::string& query =
        spec.queries[detail::bounded(rng, spec.queries.size())];
    const std::string_view tmpl =
        templates[detail::bounded(rng, templates.size())];
    records.push_back({"", coord, detail::fill_template(tmpl, query), true});
  }

  const auto& pool = detail::irrelevant_texts();
  for (std::int64_t i = 0; i < spec.n_irrelevant; ++i) {
    const double r = spec.irrelevant_extent * std::sqrt(detail::uniform01(rng));
    const double theta = 2.0 * std::numbers::pi * detail::uniform01(rng);
    const GeoCoord coord = frame.coord_at(
        frame.x_of(c0) + r * std::cos(theta), frame.y_of(c0) + r * std::sin(theta));
    std::size_t pick = detail::bounded(rng, pool.size());
    std::size_t tried = 0;
    while (matches_any(pool[pick], spec.queries) && ++tried < pool.size()) {
      pick = (pick + 1) % pool.size();
    }
    if (tried == pool.size()) {
      throw InvalidSpecError("every irrelevant text matches a query");
    }
    records.push_back({"", coord, std::string(pool[pick]), false});
  }

  // Deterministic Fisher-Yates shuffle, then sequential ids in final order
  // (zero-padded so lexicographic id order equals dataset order).
  for (std::size_t i = records.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(detail::bounded(rng, i));
    std::swap(records[i - 1], records[j]);
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "g%07zu", i);
    records[i].id = buf;
  }

  Scene scene;
  scene.dataset.records = std::move(records);
  scene.dataset.provenance = "synth:seed=" + std::to_string(spec.seed);
  scene.config.name = spec.name;
  scene.config.queries = spec.queries;
  scene.config.c0 = c0;
  scene.config.r_cover = spec.irrelevant_extent / spec.gamma;
  scene.config.gamma = spec.gamma;
  scene.config.eta = spec.eta;
  scene.config.delta_r = spec.delta_r;
  scene.config.alpha = spec.alpha;
  scene.config.delta = spec.delta;
  return scene;
}

/// Presets mirroring the published per-POI statistics (relevant count,
/// total count, r_cover); the spatial layout (sigma) is synthetic.
inline SceneSpec scene_preset(std::string_view name) {
  SceneSpec spec;
  if (name == "esb") {
    spec.true_center = {40.74871, -73.98597};
    spec.n_relevant = 1061;
    spec.n_irrelevant = 6812 - 1061;
    spec.relevant_sigma = 60.0;
    spec.irrelevant_extent = 2010.0;  // r_cover 201
    spec.name = "Empire State Building";
    spec.queries = {"#empirestate", "Empire State", "Empirestate"};
  } else if (name == "dodger") {
    spec.true_center = {34.073611, -118.24};
    spec.n_relevant = 941;
    spec.n_irrelevant = 2228 - 941;
    spec.relevant_sigma = 120.0;
    spec.irrelevant_extent = 1500.0;  // r_cover 150
    spec.name = "Dodger Stadium";
    spec.queries = {"#dodgerstadium", "Dodger Stadium"};
  } else if (name == "met") {
    spec.true_center = {40.77891, -73.96367};
    spec.n_relevant = 591;
    spec.n_irrelevant = 18413 - 591;
    spec.relevant_sigma = 75.0;
    spec.irrelevant_extent = 2390.0;  // r_cover 239
    spec.name = "Metropolitan Museum of Art";
    spec.queries = {"#themet", "#metropolitanmuseumofart",
                    "Metropolitan Museum of Art", "The Met", "Themet",
                    "Metropolitainmuseumofart"};
  } else if (name == "busch") {
    spec.true_center = {28.03363, -82.41648};
    spec.n_relevant = 166;
    spec.n_irrelevant = 297 - 166;
    spec.relevant_sigma = 300.0;
    spec.irrelevant_extent = 6600.0;  // r_cover 660
    spec.name = "Busch Gardens";
    spec.queries = {"#buschgardens", "Buschgardens", "Busch Gardens",
                    "Busch Park"};
  } else {
    throw InvalidSpecError("unknown preset: " + std::string(name));
  }
  return spec;
}

}  // namespace poibound
