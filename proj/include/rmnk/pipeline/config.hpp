#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rmnk/meta/forest.hpp"

namespace rmnk::pipeline {

// Exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exit code 3: an upstream artifact is absent or malformed.
struct MissingInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  int n = 16;
  std::vector<int> ks{1, 2, 4};
  std::vector<int> ms{2, 3};
  std::vector<double> rhos{-0.4, 0.0, 0.4};
  int instances_per_combo = 10;
  int runs_per_algorithm = 30;
  long long budget = 10000;
  int population = 100;
  std::string metric = "reso";
  std::uint64_t master_seed = 1;
  std::string output_dir = "out";
  int workers = 0;  // 0: RMNK_WORKERS env var, then hardware concurrency
  bool feature_selection = false;
  bool explain_all_rows = false;
  meta::ForestHyperparams forest;

  void validate() const;  // throws ConfigError
};

// Parses the JSON config document; missing fields keep their defaults.
ExperimentConfig load_config(const std::string& path);

}  // namespace rmnk::pipeline
