#pragma once

#include <vector>

#include "rmnk/meta/forest.hpp"

namespace rmnk::meta {

struct ShapExplanation {
  std::vector<double> base;                       // per target: mean tree expectation
  std::vector<std::vector<double>> attributions;  // [target][feature]
  std::vector<double> prediction;                 // per target

  // base + sum(attributions) - prediction, worst target.
  double local_accuracy_error() const;
};

// Exact path-dependent SHAP over the forest: per-tree Shapley values of the
// cover-weighted conditional expectation, averaged across trees.
ShapExplanation tree_shap(const ForestModel& model, const std::vector<double>& x);

// Cover-weighted expectation of one tree (the SHAP base value component).
std::vector<double> tree_expectation(const Tree& tree, int num_targets);

}  // namespace rmnk::meta
