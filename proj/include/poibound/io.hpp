#pragma once

#include <cmath>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "poibound/errors.hpp"
#include "poibound/geo.hpp"
#include "poibound/hull.hpp"
#include "poibound/isobest.hpp"
#include "poibound/model.hpp"
#include "poibound/synth.hpp"

namespace poibound {

struct LoadStats {
  std::size_t dropped_invalid_coords = 0;
  bool all_tagged = true;  // every kept record carried a relevant field
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

inline std::vector<std::string> split_list(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = s.find(sep, start);
    const std::string item =
        trim(s.substr(start, end == std::string_view::npos ? end : end - start));
    if (!item.empty()) out.push_back(item);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

/// Validates a raw coordinate; nullopt marks a droppable record.
inline std::optional<GeoCoord> checked_coord(double lat, double lon) {
  if (!std::isfinite(lat) || !std::isfinite(lon)) return std::nullopt;
  if (lat < -90.0 || lat > 90.0) return std::nullopt;
  return GeoCoord{lat, normalize_lon(lon)};
}

inline std::string json_id(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  throw ParseError("record id must be a string or integer");
}

/// RFC 4180 row split with quoted fields and "" escapes.
inline std::vector<std::string> csv_fields(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (quoted) {
    throw ParseError("unterminated quote at line " + std::to_string(line_no));
  }
  fields.push_back(cur);
  return fields;
}

inline double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw ParseError("");
    return v;
  } catch (...) {
    throw ParseError("bad numeric value for " + what + ": '" + s + "'");
  }
}

inline bool parse_bool(const std::string& s, const std::string& what) {
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  throw ParseError("bad boolean value for " + what + ": '" + s + "'");
}

/// Parses `key = value` lines. Comment lines start with '#'; there are no
/// inline comments, since values legitimately contain '#' (hashtag queries).
inline std::map<std::string, std::string> read_kv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(stripped.substr(0, eq));
    if (key.empty()) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": empty key");
    }
    kv[key] = trim(stripped.substr(eq + 1));
  }
  return kv;
}

}  // namespace detail

/// One JSON object per line with fields id, lat, lon, text and an optional
/// relevant flag. Records with out-of-range coordinates are dropped and
/// counted; malformed lines and duplicate ids are hard errors.
inline Dataset load_records_jsonl(const std::string& path, LoadStats* stats = nullptr) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Dataset dataset;
  dataset.provenance = path;
  LoadStats local;
  std::set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (!obj.is_object() || !obj.contains("id") || !obj.contains("lat") ||
        !obj.contains("lon") || !obj.contains("text")) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": record needs id, lat, lon, text");
    }
    if (!obj["lat"].is_number() || !obj["lon"].is_number() || !obj["text"].is_string()) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": bad field types");
    }
    const auto coord =
        detail::checked_coord(obj["lat"].get<double>(), obj["lon"].get<double>());
    if (!coord) {
      ++local.dropped_invalid_coords;
      continue;
    }
    Record rec{detail::json_id(obj["id"]), *coord, obj["text"].get<std::string>(), false};
    if (!seen_ids.insert(rec.id).second) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": duplicate id '" +
                       rec.id + "'");
    }
    if (obj.contains("relevant")) {
      if (!obj["relevant"].is_boolean()) {
        throw ParseError(path + ":" + std::to_string(line_no) + ": relevant must be boolean");
      }
      rec.relevant = obj["relevant"].get<bool>();
    } else {
      local.all_tagged = false;
    }
    dataset.records.push_back(std::move(rec));
  }
  if (stats) *stats = local;
  return dataset;
}

/// CSV with a header naming id, lat, lon, text and optionally relevant.
inline Dataset load_records_csv(const std::string& path, LoadStats* stats = nullptr) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Dataset dataset;
  dataset.provenance = path;
  LoadStats local;

  std::string line;
  if (!std::getline(in, line)) throw ParseError(path + ": missing header");
  const std::vector<std::string> header = detail::csv_fields(line, 1);
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) col[detail::trim(header[i])] = i;
  for (const char* required : {"id", "lat", "lon", "text"}) {
    if (!col.count(required)) {
      throw ParseError(path + ": header lacks column '" + required + "'");
    }
  }
  const bool has_relevant = col.count("relevant") > 0;
  if (!has_relevant) local.all_tagged = false;

  std::set<std::string> seen_ids;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::vector<std::string> fields = detail::csv_fields(line, line_no);
    if (fields.size() != header.size()) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(header.size()) + " fields, got " +
                       std::to_string(fields.size()));
    }
    const double lat = detail::parse_double(fields[col["lat"]], "lat");
    const double lon = detail::parse_double(fields[col["lon"]], "lon");
    const auto coord = detail::checked_coord(lat, lon);
    if (!coord) {
      ++local.dropped_invalid_coords;
      continue;
    }
    Record rec{fields[col["id"]], *coord, fields[col["text"]], false};
    if (!seen_ids.insert(rec.id).second) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": duplicate id '" +
                       rec.id + "'");
    }
    if (has_relevant) rec.relevant = detail::parse_bool(fields[col["relevant"]], "relevant");
    dataset.records.push_back(std::move(rec));
  }
  if (stats) *stats = local;
  return dataset;
}

/// Dispatches on extension: .csv goes to the CSV reader, everything else is
/// treated as JSONL.
inline Dataset load_records(const std::string& path, LoadStats* stats = nullptr) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
    return load_records_csv(path, stats);
  }
  return load_records_jsonl(path, stats);
}

inline void write_records_jsonl(const std::string& path, const Dataset& dataset) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  for (const Record& rec : dataset.records) {
    nlohmann::json obj{{"id", rec.id},
                       {"lat", rec.coord.lat},
                       {"lon", rec.coord.lon},
                       {"text", rec.text},
                       {"relevant", rec.relevant}};
    out << obj.dump() << '\n';
  }
}

inline PoiConfig load_poi_config(const std::string& path) {
  const auto kv = detail::read_kv_file(path);
  PoiConfig cfg;
  bool have_lat = false, have_lon = false;
  double lat = 0.0, lon = 0.0;
  for (const auto& [key, value] : kv) {
    if (key == "name") {
      cfg.name = value;
    } else if (key == "queries") {
      cfg.queries = detail::split_list(value, ',');
    } else if (key == "c0_lat") {
      lat = detail::parse_double(value, key);
      have_lat = true;
    } else if (key == "c0_lon") {
      lon = detail::parse_double(value, key);
      have_lon = true;
    } else if (key == "r_cover_m") {
      cfg.r_cover = detail::parse_double(value, key);
    } else if (key == "gamma") {
      cfg.gamma = detail::parse_double(value, key);
    } else if (key == "eta") {
      cfg.eta = detail::parse_double(value, key);
    } else if (key == "delta_r_m") {
      cfg.delta_r = detail::parse_double(value, key);
    } else if (key == "alpha") {
      cfg.alpha = detail::parse_double(value, key);
    } else if (key == "delta") {
      cfg.delta = detail::parse_double(value, key);
    } else {
      throw ParseError(path + ": unknown key '" + key + "'");
    }
  }
  if (!have_lat || !have_lon) throw ParseError(path + ": c0_lat and c0_lon are required");
  cfg.c0 = make_coord(lat, lon);
  if (!(cfg.r_cover > 0.0)) throw ParseError(path + ": r_cover_m is required and > 0");
  return cfg;
}

inline void write_poi_config(const std::string& path, const PoiConfig& cfg) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << "name = " << cfg.name << '\n';
  out << "queries = ";
  for (std::size_t i = 0; i < cfg.queries.size(); ++i) {
    if (i) out << ", ";
    out << cfg.queries[i];
  }
  out << '\n';
  out.precision(17);
  out << "c0_lat = " << cfg.c0.lat << '\n';
  out << "c0_lon = " << cfg.c0.lon << '\n';
  out << "r_cover_m = " << cfg.r_cover << '\n';
  out << "gamma = " << cfg.gamma << '\n';
  out << "eta = " << cfg.eta << '\n';
  out << "delta_r_m = " << cfg.delta_r << '\n';
  out << "alpha = " << cfg.alpha << '\n';
  out << "delta = " << cfg.delta << '\n';
}

/// Scene files may start from `preset = esb|dodger|met|busch` and override
/// individual keys.
inline SceneSpec load_scene_spec(const std::string& path) {
  const auto kv = detail::read_kv_file(path);
  SceneSpec spec;
  if (const auto it = kv.find("preset"); it != kv.end()) {
    spec = scene_preset(it->second);
  }
  double lat = spec.true_center.lat, lon = spec.true_center.lon;
  for (const auto& [key, value] : kv) {
    if (key == "preset") {
      continue;
    } else if (key == "seed") {
      spec.seed = static_cast<std::uint64_t>(std::stoull(value));
    } else if (key == "true_center_lat") {
      lat = detail::parse_double(value, key);
    } else if (key == "true_center_lon") {
      lon = detail::parse_double(value, key);
    } else if (key == "n_relevant") {
      spec.n_relevant = static_cast<std::int64_t>(std::stoll(value));
    } else if (key == "n_irrelevant") {
      spec.n_irrelevant = static_cast<std::int64_t>(std::stoll(value));
    } else if (key == "relevant_sigma_m") {
      spec.relevant_sigma = detail::parse_double(value, key);
    } else if (key == "irrelevant_extent_m") {
      spec.irrelevant_extent = detail::parse_double(value, key);
    } else if (key == "c0_offset_m") {
      spec.c0_offset = detail::parse_double(value, key);
    } else if (key == "offset_bearing_deg") {
      spec.offset_bearing = detail::parse_double(value, key);
    } else if (key == "name") {
      spec.name = value;
    } else if (key == "queries") {
      spec.queries = detail::split_list(value, ',');
    } else if (key == "gamma") {
      spec.gamma = detail::parse_double(value, key);
    } else if (key == "eta") {
      spec.eta = detail::parse_double(value, key);
    } else if (key == "delta_r_m") {
      spec.delta_r = detail::parse_double(value, key);
    } else if (key == "alpha") {
      spec.alpha = detail::parse_double(value, key);
    } else if (key == "delta") {
      spec.delta = detail::parse_double(value, key);
    } else {
      throw ParseError(path + ": unknown key '" + key + "'");
    }
  }
  spec.true_center = make_coord(lat, lon);
  return spec;
}

/// One query per line; blank lines are skipped. There is no comment
/// syntax: hashtag queries like "#themet" are literal.
inline std::vector<std::string> load_queries(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::vector<std::string> queries;
  std::string line;
  while (std::getline(in, line)) {
    const std::string q = detail::trim(line);
    if (q.empty()) continue;
    queries.push_back(q);
  }
  return queries;
}

/// RFC 7946 FeatureCollection: the boundary (closed CCW ring, or the
/// matching degenerate geometry) plus point features for the initial and
/// final centers.
inline nlohmann::json geojson_estimate(const BoundaryEstimate& estimate,
                                       const BoundaryPolygon& boundary,
                                       const PoiConfig& config,
                                       std::string_view method) {
  auto position = [](const GeoCoord& c) {
    return nlohmann::json::array({c.lon, c.lat});
  };

  nlohmann::json geometry;
  const char* kind = "empty";
  switch (boundary.degenerate) {
    case HullKind::polygon: {
      kind = "polygon";
      nlohmann::json ring = nlohmann::json::array();
      for (const GeoCoord& v : boundary.vertices) ring.push_back(position(v));
      ring.push_back(position(boundary.vertices.front()));  // close the ring
      geometry = {{"type", "Polygon"}, {"coordinates", nlohmann::json::array({ring})}};
      break;
    }
    case HullKind::segment: {
      kind = "segment";
      geometry = {{"type", "LineString"},
                  {"coordinates", nlohmann::json::array({position(boundary.vertices[0]),
                                                         position(boundary.vertices[1])})}};
      break;
    }
    case HullKind::point:
      kind = "point";
      geometry = {{"type", "Point"}, {"coordinates", position(boundary.vertices[0])}};
      break;
    case HullKind::empty:
      geometry = nullptr;
      break;
  }

  nlohmann::json boundary_feature = {
      {"type", "Feature"},
      {"geometry", geometry},
      {"properties",
       {{"poi", config.name},
        {"method", std::string(method)},
        {"alpha", config.alpha},
        {"r_star_m", estimate.radius},
        {"f_measure", estimate.f_measure},
        {"beq", estimate.beq},
        {"iterations", estimate.iterations},
        {"n_members", estimate.members.size()},
        {"area_m2", boundary.area_m2},
        {"degenerate", kind},
        {"c_star", position(estimate.center)}}}};

  nlohmann::json c0_feature = {
      {"type", "Feature"},
      {"geometry", {{"type", "Point"}, {"coordinates", position(config.c0)}}},
      {"properties", {{"role", "initial_center"}}}};
  nlohmann::json cstar_feature = {
      {"type", "Feature"},
      {"geometry", {{"type", "Point"}, {"coordinates", position(estimate.center)}}},
      {"properties", {{"role", "final_center"}}}};

  return nlohmann::json{
      {"type", "FeatureCollection"},
      {"features", nlohmann::json::array({boundary_feature, c0_feature, cstar_feature})}};
}

}  // namespace poibound
