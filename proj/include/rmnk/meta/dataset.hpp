#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rmnk/moea.hpp"

namespace rmnk::meta {

struct Combo {
  double rho = 0.0;
  int m = 0;
  int k = 0;

  friend bool operator==(const Combo&, const Combo&) = default;
};

// Short stable label used in footprint/scatter files, e.g. "r-0.4_m2_k1".
std::string combo_label(const Combo& combo);

inline constexpr std::array<Algorithm, 3> kTargetAlgorithms = {
    Algorithm::kPls, Algorithm::kGsemo, Algorithm::kNsga2};

// Feature rows joined with the three per-algorithm targets for one metric.
// Exactly one test row per combo; remaining rows carry fold ids 0..F-1 with
// one row per combo per fold. Features are min-max scaled on train rows;
// constant train columns map to 0.
struct Dataset {
  std::vector<std::string> ids;
  std::vector<Combo> combos;                  // per row
  std::vector<std::string> feature_names;
  std::vector<std::vector<double>> x;         // scaled
  std::vector<std::array<double, 3>> y;       // PLS, GSEMO, NSGA-II
  std::vector<std::uint8_t> is_test;
  std::vector<int> fold;                      // -1 on test rows
  int num_folds = 0;
  std::vector<double> scale_min, scale_max;   // fitted on train rows

  std::size_t size() const { return ids.size(); }
};

Dataset build_dataset(const std::string& features_csv_path,
                      const std::string& performance_csv_path,
                      const std::string& metric, std::uint64_t master_seed);

}  // namespace rmnk::meta
