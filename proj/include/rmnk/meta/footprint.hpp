#pragma once

#include <string>
#include <vector>

#include "rmnk/meta/cluster.hpp"
#include "rmnk/meta/dataset.hpp"
#include "rmnk/meta/shap.hpp"

namespace rmnk::meta {

// One explained (instance, algorithm) pairing: the SHAP attribution vector
// for that algorithm's target plus the model's prediction for it.
struct MetaRep {
  std::string instance_id;
  Algorithm algorithm = Algorithm::kPls;
  Combo combo;
  std::vector<double> shap;
  double prediction = 0.0;
  double actual = 0.0;
};

std::string meta_rep_id(const MetaRep& rep);  // "<instance_id>:<algorithm>"

// Permutes cluster ids so id 0 has the highest mean predicted performance.
// Contents are unchanged.
ClusterModel relabel_by_performance(const ClusterModel& model,
                                    const std::vector<MetaRep>& reps);

struct FootprintCell {
  int cluster = 0;
  Combo combo;
  int count = 0;
  double mean_pred = 0.0;  // 0 for empty cells
};

// Full cluster x combo contingency matrix per algorithm.
struct Footprint {
  Algorithm algorithm = Algorithm::kPls;
  std::vector<FootprintCell> cells;  // cluster-major, combo order as given
};

std::vector<Footprint> build_footprints(const ClusterModel& model,
                                        const std::vector<MetaRep>& reps,
                                        const std::vector<Combo>& combos);

struct ImportanceEntry {
  int feature = 0;
  double mean_abs = 0.0;
};

// Per cluster: mean absolute attribution per feature over the members,
// ranked descending; ties keep catalog order.
std::vector<std::vector<ImportanceEntry>> cluster_importance(const ClusterModel& model,
                                                             const std::vector<MetaRep>& reps);

struct DecisionPath {
  std::vector<int> feature_order;               // ascending aggregate importance
  std::vector<std::vector<double>> cumulative;  // [target][0..q], base -> prediction
};

// Cumulative attribution path; default ordering sorts features by the sum
// of |attribution| across the row's targets, ascending.
DecisionPath decision_path(const ShapExplanation& explanation);
DecisionPath decision_path(const ShapExplanation& explanation, const std::vector<int>& ordering);

}  // namespace rmnk::meta
