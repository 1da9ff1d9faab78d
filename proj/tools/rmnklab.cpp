#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "rmnk/pipeline/config.hpp"
#include "rmnk/pipeline/pipeline.hpp"
#include "CLI11.hpp"

// Exit codes: 0 success, 2 configuration error (bad flags/config file),
// 3 missing upstream artifact.

int main(int argc, char** argv) {
  CLI::App app{
      "rmnklab — rho-MNK landscape laboratory: instance generation, exhaustive "
      "landscape features, multi-objective search campaigns, and SHAP-based "
      "meta-analysis"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("-c,--config", config_path, "JSON config file")
      ->check(CLI::ExistingFile);

  std::string out_dir, metric;
  std::uint64_t seed = 0;
  int workers = 0, runs = 0, instances = 0, population = 0, n = 0;
  long long budget = 0;
  std::vector<int> ks, ms;
  std::vector<double> rhos;
  bool feature_selection = false, explain_all = false;

  auto* o_out = app.add_option("-o,--out", out_dir, "output directory");
  auto* o_seed = app.add_option("--seed", seed, "master seed");
  auto* o_metric = app.add_option("--metric", metric, "performance metric: reso or hv");
  auto* o_workers = app.add_option("--workers", workers,
                                   "worker threads (0: RMNK_WORKERS env, then hardware)");
  auto* o_runs = app.add_option("--runs", runs, "runs per algorithm per instance");
  auto* o_instances = app.add_option("--instances", instances, "instances per combo");
  auto* o_budget = app.add_option("--budget", budget, "evaluation budget per run");
  auto* o_population = app.add_option("--population", population, "NSGA-II population (even)");
  auto* o_n = app.add_option("--n", n, "number of binary variables");
  auto* o_k = app.add_option("--k", ks, "epistasis degrees")->delimiter(',');
  auto* o_m = app.add_option("--m", ms, "objective counts")->delimiter(',');
  auto* o_rho = app.add_option("--rho", rhos, "objective correlations")->delimiter(',');
  auto* f_selection =
      app.add_flag("--feature-selection", feature_selection, "run SFFS before training");
  auto* f_all = app.add_flag("--explain-all", explain_all,
                             "explain every dataset row, not only test rows");

  auto* c_generate = app.add_subcommand("generate", "sample instances, write manifest");
  auto* c_features = app.add_subcommand("features", "enumerate landscapes, emit features.csv");
  auto* c_run = app.add_subcommand("run", "execute the search campaign");
  auto* c_explain = app.add_subcommand("explain", "train the meta-model and explain it");
  auto* c_report = app.add_subcommand("report", "render SVG figures");
  auto* c_all = app.add_subcommand("all", "full pipeline, generate through report");
  for (auto* sub : {c_generate, c_features, c_run, c_explain, c_report, c_all})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  using namespace rmnk::pipeline;
  try {
    ExperimentConfig cfg;
    if (!config_path.empty()) cfg = load_config(config_path);
    if (o_out->count()) cfg.output_dir = out_dir;
    if (o_seed->count()) cfg.master_seed = seed;
    if (o_metric->count()) cfg.metric = metric;
    if (o_workers->count()) cfg.workers = workers;
    if (o_runs->count()) cfg.runs_per_algorithm = runs;
    if (o_instances->count()) cfg.instances_per_combo = instances;
    if (o_budget->count()) cfg.budget = budget;
    if (o_population->count()) cfg.population = population;
    if (o_n->count()) cfg.n = n;
    if (o_k->count()) cfg.ks = ks;
    if (o_m->count()) cfg.ms = ms;
    if (o_rho->count()) cfg.rhos = rhos;
    if (f_selection->count()) cfg.feature_selection = true;
    if (f_all->count()) cfg.explain_all_rows = true;
    cfg.validate();

    if (c_generate->parsed()) cmd_generate(cfg);
    else if (c_features->parsed()) cmd_features(cfg);
    else if (c_run->parsed()) cmd_run(cfg);
    else if (c_explain->parsed()) cmd_explain(cfg);
    else if (c_report->parsed()) cmd_report(cfg);
    else if (c_all->parsed()) cmd_all(cfg);
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const MissingInputError& e) {
    std::cerr << "missing input: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
