#include "rmnk/pipeline/pipeline.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "rmnk/csv.hpp"
#include "rmnk/landscape.hpp"
#include "rmnk/meta/cluster.hpp"
#include "rmnk/meta/footprint.hpp"
#include "rmnk/meta/forest.hpp"
#include "rmnk/meta/shap.hpp"
#include "rmnk/metrics.hpp"
#include "rmnk/moea.hpp"
#include "rmnk/parallel.hpp"
#include "rmnk/pipeline/svg_report.hpp"
#include "rmnk/plos_net.hpp"
#include "rmnk/rng.hpp"
#include "json.hpp"

namespace rmnk::pipeline {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kStreamInstance = 0x494e5354;  // "INST"
constexpr std::uint64_t kStreamForest = 0x46525354;    // "FRST"

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int worker_count(const ExperimentConfig& cfg) {
  return cfg.workers > 0 ? cfg.workers : default_worker_count();
}

void require_file(const fs::path& path, const std::string& producer) {
  if (!fs::exists(path))
    throw MissingInputError("missing " + path.string() + "; run '" + producer +
                            "' first");
}

void write_text(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

// Algorithm name as a file-name fragment: lower case, non-alnum -> '-'.
std::string file_label(std::string_view name) {
  std::string out;
  for (char c : name)
    out += std::isalnum(static_cast<unsigned char>(c))
               ? static_cast<char>(std::tolower(static_cast<unsigned char>(c)))
               : '-';
  return out;
}

struct ComboLess {
  bool operator()(const meta::Combo& a, const meta::Combo& b) const {
    if (a.rho != b.rho) return a.rho < b.rho;
    if (a.m != b.m) return a.m < b.m;
    return a.k < b.k;
  }
};

}  // namespace

std::string instance_id(const ProblemSpec& spec, int index) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "rmnk_r%.9g_m%d_n%d_k%d_i%02d", spec.rho,
                spec.num_objectives, spec.num_variables, spec.num_interactions,
                index);
  return buf;
}

std::uint64_t derive_instance_seed(std::uint64_t master_seed, double rho, int m,
                                   int n, int k, int index) {
  return stream_key(master_seed,
                    {kStreamInstance, std::bit_cast<std::uint64_t>(rho),
                     static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n),
                     static_cast<std::uint64_t>(k),
                     static_cast<std::uint64_t>(index)});
}

Manifest plan_manifest(const ExperimentConfig& cfg) {
  Manifest manifest;
  manifest.master_seed = cfg.master_seed;
  for (double rho : cfg.rhos)
    for (int m : cfg.ms)
      for (int k : cfg.ks)
        for (int i = 0; i < cfg.instances_per_combo; ++i) {
          ProblemSpec spec;
          spec.rho = rho;
          spec.num_objectives = m;
          spec.num_variables = cfg.n;
          spec.num_interactions = k;
          spec.instance_seed =
              derive_instance_seed(cfg.master_seed, rho, m, cfg.n, k, i);
          manifest.instances.push_back({instance_id(spec, i), spec});
        }
  return manifest;
}

void write_manifest(const Manifest& manifest, const std::string& path) {
  std::ostringstream out;
  out << "{\n  \"master_seed\": " << manifest.master_seed
      << ",\n  \"instances\": [\n";
  for (std::size_t i = 0; i < manifest.instances.size(); ++i) {
    const auto& [id, spec] = manifest.instances[i];
    out << "    {\"id\": \"" << id << "\", \"rho\": " << format_double(spec.rho)
        << ", \"m\": " << spec.num_objectives << ", \"n\": " << spec.num_variables
        << ", \"k\": " << spec.num_interactions << ", \"seed\": " << spec.instance_seed
        << '}' << (i + 1 < manifest.instances.size() ? "," : "") << '\n';
  }
  out << "  ]\n}\n";
  write_text(path, out.str());
}

Manifest read_manifest(const std::string& path) {
  require_file(path, "generate");
  std::ifstream in(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw MissingInputError("malformed manifest " + path + ": " + e.what());
  }
  Manifest manifest;
  try {
    manifest.master_seed = doc.at("master_seed").get<std::uint64_t>();
    for (const auto& item : doc.at("instances")) {
      ProblemSpec spec;
      spec.rho = item.at("rho").get<double>();
      spec.num_objectives = item.at("m").get<int>();
      spec.num_variables = item.at("n").get<int>();
      spec.num_interactions = item.at("k").get<int>();
      spec.instance_seed = item.at("seed").get<std::uint64_t>();
      manifest.instances.push_back({item.at("id").get<std::string>(), spec});
    }
  } catch (const nlohmann::json::exception& e) {
    throw MissingInputError("malformed manifest " + path + ": " + e.what());
  }
  return manifest;
}

void cmd_generate(const ExperimentConfig& cfg) {
  auto t0 = Clock::now();
  Manifest manifest = plan_manifest(cfg);
  fs::path out_dir(cfg.output_dir);
  fs::create_directories(out_dir / "instances");

  parallel_for(manifest.instances.size(), worker_count(cfg), [&](std::size_t i) {
    const auto& planned = manifest.instances[i];
    RhoMnkInstance instance = generate_instance(planned.spec);
    save_instance(instance, (out_dir / "instances" / (planned.id + ".json")).string());
  });
  write_manifest(manifest, (out_dir / "manifest.json").string());
  std::cout << "[generate] " << manifest.instances.size() << " instances -> "
            << (out_dir / "instances").string() << " (" << seconds_since(t0)
            << "s)\n";
}

void cmd_features(const ExperimentConfig& cfg) {
  auto t0 = Clock::now();
  fs::path out_dir(cfg.output_dir);
  Manifest manifest = read_manifest((out_dir / "manifest.json").string());
  for (const auto& planned : manifest.instances)
    require_file(out_dir / "instances" / (planned.id + ".json"), "generate");

  std::vector<FeatureRow> rows(manifest.instances.size());
  parallel_for(manifest.instances.size(), worker_count(cfg), [&](std::size_t i) {
    const auto& planned = manifest.instances[i];
    RhoMnkInstance instance =
        load_instance((out_dir / "instances" / (planned.id + ".json")).string());
    EnumeratedLandscape landscape = enumerate_landscape(instance);
    PlosNet net = build_plos_net(landscape);
    CPlosNet cnet = compress(net, landscape);
    rows[i] = {planned.id, instance.spec, compute_features(net, cnet, landscape)};
  });
  write_feature_table(rows, (out_dir / "features.csv").string());
  std::cout << "[features] " << rows.size() << " rows -> "
            << (out_dir / "features.csv").string() << " (" << seconds_since(t0)
            << "s)\n";
}

void cmd_run(const ExperimentConfig& cfg) {
  auto t0 = Clock::now();
  fs::path out_dir(cfg.output_dir);
  Manifest manifest = read_manifest((out_dir / "manifest.json").string());
  for (const auto& planned : manifest.instances)
    require_file(out_dir / "instances" / (planned.id + ".json"), "generate");

  constexpr std::array<Algorithm, 3> kAlgs = {Algorithm::kPls, Algorithm::kGsemo,
                                              Algorithm::kNsga2};
  struct RunRow {
    long long evaluations = 0;
    std::size_t archive_size = 0;
  };
  const std::size_t num_instances = manifest.instances.size();
  const int runs = cfg.runs_per_algorithm;
  std::vector<PerformanceRecord> records(num_instances * kAlgs.size());
  std::vector<RunRow> run_rows(num_instances * kAlgs.size() * runs);

  parallel_for(num_instances, worker_count(cfg), [&](std::size_t i) {
    const auto& planned = manifest.instances[i];
    RhoMnkInstance instance =
        load_instance((out_dir / "instances" / (planned.id + ".json")).string());
    EnumeratedLandscape landscape = enumerate_landscape(instance);
    EvaluationContext ctx(instance, &landscape.objectives);
    RunOptions opts;
    opts.budget = cfg.budget;
    opts.population = cfg.population;

    for (std::size_t a = 0; a < kAlgs.size(); ++a) {
      std::vector<RunResult> results;
      results.reserve(runs);
      for (int r = 0; r < runs; ++r) {
        std::uint64_t seed =
            derive_run_seed(cfg.master_seed, planned.id, kAlgs[a], r);
        switch (kAlgs[a]) {
          case Algorithm::kPls: results.push_back(run_pls(ctx, seed, opts)); break;
          case Algorithm::kGsemo: results.push_back(run_gsemo(ctx, seed, opts)); break;
          case Algorithm::kNsga2: results.push_back(run_nsga2(ctx, seed, opts)); break;
        }
        run_rows[(i * kAlgs.size() + a) * runs + r] = {
            results.back().evaluations_used, results.back().archive.size()};
      }
      PerformanceRecord record = aggregate(results, landscape);
      record.instance_id = planned.id;
      records[i * kAlgs.size() + a] = record;
    }
  });

  std::ostringstream perf;
  perf << "instance_id,algorithm,reso_mean,reso_std,hv_mean,hv_std,runs\n";
  for (const auto& record : records)
    perf << record.instance_id << ',' << algorithm_name(record.algorithm) << ','
         << format_double(record.reso_mean) << ',' << format_double(record.reso_std)
         << ',' << format_double(record.hv_mean) << ','
         << format_double(record.hv_std) << ',' << record.runs << '\n';
  write_text(out_dir / "performance.csv", perf.str());

  std::ostringstream log;
  log << "instance_id,algorithm,run_index,evaluations_used,archive_size\n";
  for (std::size_t i = 0; i < num_instances; ++i)
    for (std::size_t a = 0; a < kAlgs.size(); ++a)
      for (int r = 0; r < runs; ++r) {
        const auto& row = run_rows[(i * kAlgs.size() + a) * runs + r];
        log << manifest.instances[i].id << ',' << algorithm_name(kAlgs[a]) << ','
            << r << ',' << row.evaluations << ',' << row.archive_size << '\n';
      }
  write_text(out_dir / "runs.csv", log.str());

  std::cout << "[run] " << num_instances << " instances x " << kAlgs.size()
            << " algorithms x " << runs << " runs -> "
            << (out_dir / "performance.csv").string() << " (" << seconds_since(t0)
            << "s)\n";
}

void cmd_explain(const ExperimentConfig& cfg) {
  auto t0 = Clock::now();
  fs::path out_dir(cfg.output_dir);
  require_file(out_dir / "features.csv", "features");
  require_file(out_dir / "performance.csv", "run");

  meta::Dataset ds = meta::build_dataset((out_dir / "features.csv").string(),
                                         (out_dir / "performance.csv").string(),
                                         cfg.metric, cfg.master_seed);
  const std::uint64_t forest_seed = stream_key(cfg.master_seed, {kStreamForest});

  std::vector<int> subset;
  meta::SffsResult selection;
  if (cfg.feature_selection) {
    selection = meta::sffs(ds, cfg.forest, forest_seed);
    subset.assign(selection.order.begin(),
                  selection.order.begin() + selection.best_prefix);
    std::sort(subset.begin(), subset.end());
  }
  const std::vector<int>* subset_ptr = cfg.feature_selection ? &subset : nullptr;

  meta::ForestModel model = meta::train_forest(ds, cfg.forest, forest_seed, subset_ptr);
  meta::CvScores cv = meta::cross_validate(ds, cfg.forest, forest_seed, subset_ptr);
  meta::CvScores baseline = meta::cross_validate_baseline(ds);

  auto model_input = [&](std::size_t row) {
    if (!subset_ptr) return ds.x[row];
    std::vector<double> out;
    out.reserve(subset.size());
    for (int c : subset) out.push_back(ds.x[row][c]);
    return out;
  };

  std::vector<std::size_t> explained;
  for (std::size_t i = 0; i < ds.size(); ++i)
    if (cfg.explain_all_rows || ds.is_test[i]) explained.push_back(i);

  std::vector<meta::ShapExplanation> explanations(explained.size());
  parallel_for(explained.size(), worker_count(cfg), [&](std::size_t j) {
    explanations[j] = meta::tree_shap(model, model_input(explained[j]));
  });

  std::ostringstream shap_csv;
  shap_csv << "instance_id,algorithm,feature,value\n";
  for (std::size_t j = 0; j < explained.size(); ++j)
    for (std::size_t t = 0; t < meta::kTargetAlgorithms.size(); ++t)
      for (std::size_t f = 0; f < model.feature_names.size(); ++f)
        shap_csv << ds.ids[explained[j]] << ','
                 << algorithm_name(meta::kTargetAlgorithms[t]) << ','
                 << model.feature_names[f] << ','
                 << format_double(explanations[j].attributions[t][f]) << '\n';
  write_text(out_dir / "shap.csv", shap_csv.str());

  // Meta-representation space: one point per explained test row per target.
  std::vector<meta::MetaRep> reps;
  std::vector<std::vector<double>> rep_points;
  for (std::size_t j = 0; j < explained.size(); ++j) {
    const std::size_t row = explained[j];
    if (!ds.is_test[row]) continue;
    for (std::size_t t = 0; t < meta::kTargetAlgorithms.size(); ++t) {
      meta::MetaRep rep;
      rep.instance_id = ds.ids[row];
      rep.algorithm = meta::kTargetAlgorithms[t];
      rep.combo = ds.combos[row];
      rep.shap = explanations[j].attributions[t];
      rep.prediction = explanations[j].prediction[t];
      rep.actual = ds.y[row][static_cast<std::size_t>(t)];
      rep_points.push_back(rep.shap);
      reps.push_back(std::move(rep));
    }
  }

  meta::ClusterModel clusters =
      meta::relabel_by_performance(meta::cluster_meta(rep_points), reps);
  meta::Pca2D pca = meta::project_2d(rep_points);

  std::ostringstream clusters_csv;
  clusters_csv << "meta_rep_id,cluster\n";
  for (std::size_t j = 0; j < reps.size(); ++j)
    clusters_csv << meta::meta_rep_id(reps[j]) << ',' << clusters.assignment[j] + 1
                 << '\n';
  write_text(out_dir / "clusters.csv", clusters_csv.str());

  std::ostringstream scatter_csv;
  scatter_csv << "meta_rep_id,instance_id,algorithm,combo,cluster,x,y,prediction,actual\n";
  for (std::size_t j = 0; j < reps.size(); ++j)
    scatter_csv << meta::meta_rep_id(reps[j]) << ',' << reps[j].instance_id << ','
                << algorithm_name(reps[j].algorithm) << ','
                << meta::combo_label(reps[j].combo) << ','
                << clusters.assignment[j] + 1 << ','
                << format_double(pca.coords[j][0]) << ','
                << format_double(pca.coords[j][1]) << ','
                << format_double(reps[j].prediction) << ','
                << format_double(reps[j].actual) << '\n';
  write_text(out_dir / "scatter.csv", scatter_csv.str());

  std::vector<meta::Combo> combos;
  for (const auto& combo : ds.combos)
    if (std::find(combos.begin(), combos.end(), combo) == combos.end())
      combos.push_back(combo);
  std::sort(combos.begin(), combos.end(), ComboLess{});

  std::ostringstream fp_csv;
  fp_csv << "algorithm,cluster,combo,count,mean_pred\n";
  for (const auto& fp : meta::build_footprints(clusters, reps, combos))
    for (const auto& cell : fp.cells)
      fp_csv << algorithm_name(fp.algorithm) << ',' << cell.cluster + 1 << ','
             << meta::combo_label(cell.combo) << ',' << cell.count << ','
             << format_double(cell.mean_pred) << '\n';
  write_text(out_dir / "footprint.csv", fp_csv.str());

  std::ostringstream imp_csv;
  imp_csv << "cluster,rank,feature,mean_abs\n";
  auto importance = meta::cluster_importance(clusters, reps);
  for (std::size_t c = 0; c < importance.size(); ++c)
    for (std::size_t r = 0; r < importance[c].size(); ++r)
      imp_csv << c + 1 << ',' << r + 1 << ','
              << model.feature_names[importance[c][r].feature] << ','
              << format_double(importance[c][r].mean_abs) << '\n';
  write_text(out_dir / "cluster_importance.csv", imp_csv.str());

  std::ostringstream path_csv;
  path_csv << "instance_id,algorithm,step,feature,attribution,cumulative\n";
  for (std::size_t j = 0; j < explained.size(); ++j) {
    const std::size_t row = explained[j];
    if (!ds.is_test[row]) continue;
    meta::DecisionPath path = meta::decision_path(explanations[j]);
    for (std::size_t t = 0; t < meta::kTargetAlgorithms.size(); ++t) {
      path_csv << ds.ids[row] << ',' << algorithm_name(meta::kTargetAlgorithms[t])
               << ",0,base," << format_double(0.0) << ','
               << format_double(path.cumulative[t][0]) << '\n';
      for (std::size_t s = 0; s < path.feature_order.size(); ++s) {
        const int f = path.feature_order[s];
        path_csv << ds.ids[row] << ','
                 << algorithm_name(meta::kTargetAlgorithms[t]) << ',' << s + 1
                 << ',' << model.feature_names[f] << ','
                 << format_double(explanations[j].attributions[t][f]) << ','
                 << format_double(path.cumulative[t][s + 1]) << '\n';
      }
    }
  }
  write_text(out_dir / "decision_paths.csv", path_csv.str());

  meta::save_model(model, (out_dir / "model.json").string());

  auto number_list = [](const std::vector<double>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i)
      out += (i ? ", " : "") + format_double(values[i]);
    return out + "]";
  };
  auto name_list = [](const std::vector<std::string>& names) {
    std::string out = "[";
    for (std::size_t i = 0; i < names.size(); ++i)
      out += std::string(i ? ", " : "") + '"' + names[i] + '"';
    return out + "]";
  };
  std::size_t num_test = 0;
  for (auto flag : ds.is_test) num_test += flag != 0;

  std::ostringstream summary;
  summary << "{\n"
          << "  \"metric\": \"" << cfg.metric << "\",\n"
          << "  \"num_rows\": " << ds.size() << ",\n"
          << "  \"num_test\": " << num_test << ",\n"
          << "  \"num_folds\": " << ds.num_folds << ",\n"
          << "  \"targets\": [\"PLS\", \"GSEMO\", \"NSGA-II\"],\n"
          << "  \"features\": " << name_list(model.feature_names) << ",\n"
          << "  \"feature_selection\": " << (cfg.feature_selection ? "true" : "false")
          << ",\n";
  if (cfg.feature_selection)
    summary << "  \"sffs_scores\": " << number_list(selection.scores) << ",\n";
  summary << "  \"cv_mae\": " << number_list(cv.mae) << ",\n"
          << "  \"cv_r2\": " << number_list(cv.r2) << ",\n"
          << "  \"baseline_mae\": " << number_list(baseline.mae) << ",\n"
          << "  \"baseline_r2\": " << number_list(baseline.r2) << ",\n"
          << "  \"num_clusters\": " << clusters.num_clusters << ",\n"
          << "  \"silhouette\": " << format_double(clusters.silhouette) << ",\n"
          << "  \"pca_eigenvalues\": "
          << number_list({pca.eigenvalues[0], pca.eigenvalues[1]}) << "\n}\n";
  write_text(out_dir / "summary.json", summary.str());

  std::cout << "[explain] " << explained.size() << " rows, " << reps.size()
            << " meta-reps, " << clusters.num_clusters << " clusters -> "
            << (out_dir / "model.json").string() << " (" << seconds_since(t0)
            << "s)\n";
}

void cmd_report(const ExperimentConfig& cfg) {
  auto t0 = Clock::now();
  fs::path out_dir(cfg.output_dir);
  require_file(out_dir / "scatter.csv", "explain");
  require_file(out_dir / "footprint.csv", "explain");
  require_file(out_dir / "cluster_importance.csv", "explain");
  require_file(out_dir / "decision_paths.csv", "explain");
  fs::path report_dir = out_dir / "report";
  fs::create_directories(report_dir);
  int rendered = 0;

  {
    CsvTable table = read_csv((out_dir / "scatter.csv").string());
    const int cx = table.column("x"), cy = table.column("y");
    const int cc = table.column("cluster");
    std::vector<ScatterPoint> points;
    for (const auto& row : table.rows)
      points.push_back({std::stod(row[cx]), std::stod(row[cy]), std::stoi(row[cc])});
    write_text(report_dir / "scatter.svg",
               render_scatter_svg(points, "meta-representation map"));
    ++rendered;
  }

  {
    CsvTable table = read_csv((out_dir / "footprint.csv").string());
    const int ca = table.column("algorithm"), cc = table.column("cluster");
    const int cb = table.column("combo"), cn = table.column("count");
    const int cp = table.column("mean_pred");
    std::vector<std::string> algorithms;
    for (const auto& row : table.rows)
      if (std::find(algorithms.begin(), algorithms.end(), row[ca]) == algorithms.end())
        algorithms.push_back(row[ca]);
    for (const auto& algorithm : algorithms) {
      std::vector<std::string> row_labels, col_labels;
      std::vector<HeatCell> cells;
      for (const auto& row : table.rows) {
        if (row[ca] != algorithm) continue;
        std::string cluster_label = "C" + row[cc];
        auto rit = std::find(row_labels.begin(), row_labels.end(), cluster_label);
        if (rit == row_labels.end()) rit = row_labels.insert(row_labels.end(), cluster_label);
        auto cit = std::find(col_labels.begin(), col_labels.end(), row[cb]);
        if (cit == col_labels.end()) cit = col_labels.insert(col_labels.end(), row[cb]);
        cells.push_back({static_cast<int>(rit - row_labels.begin()),
                         static_cast<int>(cit - col_labels.begin()),
                         std::stod(row[cp]), std::stoi(row[cn])});
      }
      write_text(report_dir / ("footprint_" + file_label(algorithm) + ".svg"),
                 render_heatmap_svg(row_labels, col_labels, cells,
                                    algorithm + " footprint"));
      ++rendered;
    }
  }

  {
    CsvTable table = read_csv((out_dir / "cluster_importance.csv").string());
    const int cc = table.column("cluster"), cr = table.column("rank");
    const int cf = table.column("feature"), cv = table.column("mean_abs");
    std::vector<std::string> cluster_order;
    std::map<std::string, std::vector<std::pair<int, BarEntry>>> per_cluster;
    for (const auto& row : table.rows) {
      if (!per_cluster.count(row[cc])) cluster_order.push_back(row[cc]);
      per_cluster[row[cc]].push_back(
          {std::stoi(row[cr]), {row[cf], std::stod(row[cv])}});
    }
    for (const auto& cluster : cluster_order) {
      auto& ranked = per_cluster[cluster];
      std::sort(ranked.begin(), ranked.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      std::vector<BarEntry> bars;
      for (const auto& [rank, bar] : ranked) {
        bars.push_back(bar);
        if (bars.size() == 10) break;
      }
      write_text(report_dir / ("importance_c" + cluster + ".svg"),
                 render_bars_svg(bars, "cluster " + cluster + " |SHAP|"));
      ++rendered;
    }
  }

  {
    CsvTable table = read_csv((out_dir / "decision_paths.csv").string());
    const int ci = table.column("instance_id"), ca = table.column("algorithm");
    const int cf = table.column("feature"), cv = table.column("cumulative");
    if (!table.rows.empty()) {
      const std::string first = table.rows.front()[ci];
      std::vector<PathSeries> series;
      std::vector<std::string> step_labels;
      for (const auto& row : table.rows) {
        if (row[ci] != first) continue;
        if (series.empty() || series.back().label != row[ca]) {
          bool seen = false;
          for (const auto& s : series) seen = seen || s.label == row[ca];
          if (seen) continue;
          series.push_back({row[ca], {}});
        }
        series.back().cumulative.push_back(std::stod(row[cv]));
        if (series.size() == 1) step_labels.push_back(row[cf]);
      }
      write_text(report_dir / "decision_path.svg",
                 render_path_svg(series, step_labels, first + " decision path"));
      ++rendered;
    }
  }

  std::cout << "[report] " << rendered << " figures -> " << report_dir.string()
            << " (" << seconds_since(t0) << "s)\n";
}

void cmd_all(const ExperimentConfig& cfg) {
  cmd_generate(cfg);
  cmd_features(cfg);
  cmd_run(cfg);
  cmd_explain(cfg);
  cmd_report(cfg);
}

}  // namespace rmnk::pipeline
