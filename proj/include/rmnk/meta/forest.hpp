#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rmnk/meta/dataset.hpp"

namespace rmnk::meta {

struct ForestHyperparams {
  int n_trees = 192;
  int max_depth = 7;
  int min_split = 3;
  int min_leaf = 1;
  int max_features = 0;   // <=0 or >= q: consider every feature per split
  bool bootstrap = true;
};

struct TreeNode {
  int feature = -1;            // -1 marks a leaf
  double threshold = 0.0;      // x[feature] <= threshold goes left
  int left = -1;
  int right = -1;
  double cover = 0.0;          // training rows reaching this node
  std::vector<double> value;   // per-target mean (leaves only)
};

struct Tree {
  std::vector<TreeNode> nodes;  // root at index 0

  void predict_into(const std::vector<double>& x, double* out, int num_targets) const;
};

struct ForestModel {
  ForestHyperparams params;
  std::vector<std::string> feature_names;  // one per model input column
  std::vector<double> base;                // per-target training mean
  int num_targets = 0;
  std::vector<Tree> trees;

  std::vector<double> predict(const std::vector<double>& x) const;
};

// Bootstrap-sampled trees split by summed per-target variance reduction.
// Deterministic under seed; ties resolve to the lowest feature index and
// then the first threshold in ascending feature order.
ForestModel train_forest(const std::vector<std::vector<double>>& x,
                         const std::vector<std::vector<double>>& y,
                         const ForestHyperparams& hp, std::uint64_t seed);

// Convenience wrapper over the dataset's train rows; columns restricted to
// feature_subset when given (indices into the catalog order).
ForestModel train_forest(const Dataset& ds, const ForestHyperparams& hp, std::uint64_t seed,
                         const std::vector<int>* feature_subset = nullptr);

struct CvScores {
  std::vector<double> mae;  // per target, mean over folds
  std::vector<double> r2;   // per target, mean over folds (can be negative)
};

// 9-fold (num_folds) stratified CV on the train rows. R^2 per fold uses the
// held-out fold's own target variance; a zero-variance fold scores 1 on an
// exact fit and 0 otherwise.
CvScores cross_validate(const Dataset& ds, const ForestHyperparams& hp, std::uint64_t seed,
                        const std::vector<int>* feature_subset = nullptr);

// Predicts the per-target mean of each fold's training rows.
CvScores cross_validate_baseline(const Dataset& ds);

struct SffsResult {
  std::vector<int> order;      // features in the greedy insertion order
  std::vector<double> scores;  // mean CV MAE after each insertion
  int best_prefix = 0;         // prefix length with the lowest score
};

// Greedy forward selection scored by mean CV MAE over targets; ties keep
// catalog order.
SffsResult sffs(const Dataset& ds, const ForestHyperparams& hp, std::uint64_t seed);

void save_model(const ForestModel& model, const std::string& path);
ForestModel load_model(const std::string& path);

}  // namespace rmnk::meta
