// Command-line front end: scene generation, relevance tagging, boundary
// estimation with GeoJSON output, method comparison, and the runtime
// scaling benchmark.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "poibound/poibound.hpp"

namespace {

using namespace poibound;

constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

Dataset load_tagged(const std::string& path, const PoiConfig& config) {
  LoadStats stats;
  Dataset dataset = load_records(path, &stats);
  if (stats.dropped_invalid_coords > 0) {
    std::cerr << "note: dropped " << stats.dropped_invalid_coords
              << " record(s) with invalid coordinates\n";
  }
  if (!stats.all_tagged) {
    if (config.queries.empty()) {
      throw InvalidParamsError(
          "records lack a relevant field and the POI config has no queries");
    }
    dataset = tag_relevance(std::move(dataset), config.queries);
  }
  return dataset;
}

struct MethodRow {
  std::string method;
  double alpha = 0.0;
  double radius = 0.0;
  double f_measure = 0.0;
  double beq = 0.0;
  int iterations = 0;
};

std::vector<MethodRow> compare_at_alpha(const Dataset& dataset, PoiConfig config,
                                        double alpha) {
  config.alpha = alpha;
  std::vector<MethodRow> rows;

  const SobestResult fixed = sobest(dataset, config.c0, config);
  rows.push_back({"sobest", alpha, fixed.radius, fixed.f_measure, fixed.beq, 0});

  const BoundaryEstimate iterative = isobest(dataset, config);
  rows.push_back({"isobest", alpha, iterative.radius, iterative.f_measure,
                  iterative.beq, iterative.iterations});

  const double rbar = config.search_radius();
  std::vector<Record> relevant;
  for (const Record& rec : dataset.records) {
    if (rec.relevant && distance(config.c0, rec.coord) <= rbar) {
      relevant.push_back(rec);
    }
  }
  const DbscanResult clustering =
      dbscan(relevant, DbscanParams{5, config.r_cover});
  const ClusterEvaluation eval =
      evaluate_poi_cluster(clustering.clusters, dataset, config);
  rows.push_back({"dbscan", alpha, eval.r_d, eval.f_measure, eval.beq, 0});
  return rows;
}

int run_gen(const std::string& spec_path, const std::string& preset_name,
            const std::string& out_dir) {
  SceneSpec spec;
  if (!spec_path.empty()) {
    spec = load_scene_spec(spec_path);
  } else {
    spec = scene_preset(preset_name);
  }
  const Scene scene = generate(spec);
  std::filesystem::create_directories(out_dir);
  const std::string records_path = out_dir + "/records.jsonl";
  const std::string poi_path = out_dir + "/poi.conf";
  write_records_jsonl(records_path, scene.dataset);
  write_poi_config(poi_path, scene.config);
  std::cout << "wrote " << scene.dataset.size() << " records to " << records_path
            << "\nwrote POI config to " << poi_path << "\n";
  return 0;
}

int run_tag(const std::string& in_path, const std::string& queries_path,
            const std::string& out_path) {
  const std::vector<std::string> queries = load_queries(queries_path);
  LoadStats stats;
  Dataset dataset = load_records(in_path, &stats);
  if (stats.dropped_invalid_coords > 0) {
    std::cerr << "note: dropped " << stats.dropped_invalid_coords
              << " record(s) with invalid coordinates\n";
  }
  dataset = tag_relevance(std::move(dataset), queries);
  std::size_t n_relevant = 0;
  for (const Record& rec : dataset.records) n_relevant += rec.relevant ? 1 : 0;
  write_records_jsonl(out_path, dataset);
  std::cout << "tagged " << n_relevant << "/" << dataset.size()
            << " records relevant -> " << out_path << "\n";
  return 0;
}

int run_estimate(const std::string& data_path, const std::string& poi_path,
                 const std::string& method, double alpha,
                 const std::string& out_path) {
  PoiConfig config = load_poi_config(poi_path);
  config.alpha = alpha;
  validate(config);
  const Dataset dataset = load_tagged(data_path, config);

  BoundaryEstimate estimate;
  if (method == "sobest") {
    const SobestSolve solve = sobest_solve(dataset, config.c0, config);
    estimate.center = config.c0;
    estimate.radius = solve.result.radius;
    estimate.f_measure = solve.result.f_measure;
    estimate.beq = solve.result.beq;
    if (solve.result.radius > 0.0) {
      estimate.members = members_within(*solve.profile, dataset, solve.result.radius);
    }
    estimate.trace.push_back({0, config.c0, estimate.radius, estimate.f_measure,
                              estimate.beq,
                              static_cast<std::int64_t>(estimate.members.size())});
  } else {
    estimate = isobest(dataset, config);
  }

  const BoundaryPolygon boundary = convex_hull(estimate.members, estimate.center);
  const nlohmann::json geojson = geojson_estimate(estimate, boundary, config, method);
  if (out_path.empty() || out_path == "-") {
    std::cout << geojson.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write " + out_path);
    out << geojson.dump(2) << "\n";
    std::cout << "wrote " << out_path << " (r*=" << estimate.radius
              << " m, F=" << estimate.f_measure << ", BEQ=" << estimate.beq << ")\n";
  }
  return 0;
}

int run_compare(const std::string& data_path, const std::string& poi_path,
                const std::string& alphas_csv, const std::string& tsv_path) {
  const PoiConfig config = load_poi_config(poi_path);
  validate(config);
  const Dataset dataset = load_tagged(data_path, config);

  std::vector<double> alphas;
  for (const std::string& item : detail::split_list(alphas_csv, ',')) {
    alphas.push_back(detail::parse_double(item, "alpha"));
  }
  if (alphas.empty()) throw InvalidParamsError("no alphas given");

  std::vector<std::future<std::vector<MethodRow>>> jobs;
  for (double alpha : alphas) {
    jobs.push_back(std::async(std::launch::async, compare_at_alpha,
                              std::cref(dataset), config, alpha));
  }
  std::vector<MethodRow> rows;
  for (auto& job : jobs) {
    for (MethodRow& row : job.get()) rows.push_back(std::move(row));
  }

  std::printf("%-10s %7s %12s %10s %10s %6s\n", "method", "alpha", "radius_m",
              "f_measure", "beq", "iters");
  for (const MethodRow& row : rows) {
    std::printf("%-10s %7.2f %12.1f %10.4f %10.4f %6d\n", row.method.c_str(),
                row.alpha, row.radius, row.f_measure, row.beq, row.iterations);
  }

  if (!tsv_path.empty()) {
    std::ofstream tsv(tsv_path);
    if (!tsv) throw ParseError("cannot write " + tsv_path);
    tsv << "method\talpha\tradius_m\tf_measure\tbeq\titerations\n";
    tsv.precision(17);
    for (const MethodRow& row : rows) {
      tsv << row.method << '\t' << row.alpha << '\t' << row.radius << '\t'
          << row.f_measure << '\t' << row.beq << '\t' << row.iterations << '\n';
    }
    std::cout << "wrote " << tsv_path << "\n";
  }
  return 0;
}

int run_bench_cmd(const std::string& sizes_spec, int reps, std::uint64_t seed,
                  double alpha, const std::string& csv_path) {
  const std::vector<std::int64_t> sizes = parse_sizes(sizes_spec);

  SceneSpec spec = scene_preset("esb");
  spec.seed = seed;
  spec.alpha = alpha;
  const Scene scene = generate(spec);
  if (sizes.back() > static_cast<std::int64_t>(scene.dataset.size())) {
    throw InvalidParamsError("largest size exceeds the ESB-preset scene (" +
                             std::to_string(scene.dataset.size()) + " records)");
  }

  const std::vector<BenchPoint> points =
      run_bench(scene.dataset, scene.config, sizes, reps, seed);
  const LinearFit fit = linear_fit(points);

  std::printf("%8s %16s %16s\n", "n_all", "mean_runtime", "stdev");
  for (const BenchPoint& p : points) {
    std::printf("%8lld %16.6e %16.6e\n", static_cast<long long>(p.n_all),
                p.mean_runtime_s, p.stdev_s);
  }
  std::printf("linear fit: slope=%.6e s/record, intercept=%.6e s, R^2=%.4f\n",
              fit.slope, fit.intercept, fit.r_squared);

  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw ParseError("cannot write " + csv_path);
    csv << "n_all,mean_runtime,stdev\n";
    csv.precision(17);
    for (const BenchPoint& p : points) {
      csv << p.n_all << ',' << p.mean_runtime_s << ',' << p.stdev_s << '\n';
    }
    std::cout << "wrote " << csv_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Social POI boundary estimation"};
  app.require_subcommand(1);

  std::string spec_path, preset_name, out_dir;
  auto* gen = app.add_subcommand("gen", "generate a synthetic scene");
  auto* spec_opt = gen->add_option("--spec", spec_path, "scene spec file (key = value)");
  gen->add_option("--preset", preset_name, "preset name: esb|dodger|met|busch")
      ->excludes(spec_opt);
  gen->add_option("--out", out_dir, "output directory")->required();

  std::string tag_in, tag_queries, tag_out;
  auto* tag = app.add_subcommand("tag", "tag records with keyword relevance");
  tag->add_option("--in", tag_in, "input records (.jsonl or .csv)")->required();
  tag->add_option("--queries", tag_queries, "query file, one per line")->required();
  tag->add_option("--out", tag_out, "output records (.jsonl)")->required();

  std::string est_data, est_poi, est_method = "isobest", est_out;
  double est_alpha = 0.0;
  auto* est = app.add_subcommand("estimate", "estimate one POI boundary as GeoJSON");
  est->add_option("--data", est_data, "records file")->required();
  est->add_option("--poi", est_poi, "POI config file")->required();
  est->add_option("--method", est_method, "sobest|isobest")
      ->check(CLI::IsMember({"sobest", "isobest"}));
  est->add_option("--alpha", est_alpha, "radius exponent");
  est->add_option("--out", est_out, "GeoJSON output path (default stdout)");

  std::string cmp_data, cmp_poi, cmp_alphas = "0,0.5,1", cmp_tsv;
  auto* cmp = app.add_subcommand("compare", "compare sobest/isobest/dbscan BEQ");
  cmp->add_option("--data", cmp_data, "records file")->required();
  cmp->add_option("--poi", cmp_poi, "POI config file")->required();
  cmp->add_option("--alphas", cmp_alphas, "comma-separated radius exponents");
  cmp->add_option("--tsv", cmp_tsv, "also write a TSV table");

  std::string bench_sizes = "2000:5500:500", bench_csv;
  int bench_reps = 10;
  std::uint64_t bench_seed = 1;
  double bench_alpha = 1.0;
  auto* bench = app.add_subcommand("bench", "runtime scaling benchmark (ESB preset)");
  bench->add_option("--sizes", bench_sizes, "subsample sizes start:stop:step");
  bench->add_option("--seeds", bench_reps, "repetitions (distinct subsample seeds) per size");
  bench->add_option("--seed", bench_seed, "base RNG seed");
  bench->add_option("--alpha", bench_alpha, "radius exponent");
  bench->add_option("--out", bench_csv, "runtime CSV output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      if (spec_path.empty() && preset_name.empty()) {
        std::cerr << "error: gen needs --spec or --preset\n";
        return kExitError;
      }
      return run_gen(spec_path, preset_name, out_dir);
    }
    if (tag->parsed()) return run_tag(tag_in, tag_queries, tag_out);
    if (est->parsed()) return run_estimate(est_data, est_poi, est_method, est_alpha, est_out);
    if (cmp->parsed()) return run_compare(cmp_data, cmp_poi, cmp_alphas, cmp_tsv);
    if (bench->parsed()) return run_bench_cmd(bench_sizes, bench_reps, bench_seed,
                                              bench_alpha, bench_csv);
  } catch (const InvalidParamsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const InfeasibleCenterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const InvalidSpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
