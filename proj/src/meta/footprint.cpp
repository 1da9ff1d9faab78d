#include "rmnk/meta/footprint.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rmnk::meta {

std::string meta_rep_id(const MetaRep& rep) {
  return rep.instance_id + ":" + algorithm_name(rep.algorithm);
}

ClusterModel relabel_by_performance(const ClusterModel& model,
                                    const std::vector<MetaRep>& reps) {
  if (reps.size() != model.assignment.size()) {
    throw std::invalid_argument("meta-rep count does not match assignment");
  }
  const std::size_t k = static_cast<std::size_t>(model.num_clusters);
  std::vector<double> sum(k, 0.0);
  std::vector<int> count(k, 0);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto c = static_cast<std::size_t>(model.assignment[i]);
    sum[c] += reps[i].prediction;
    ++count[c];
  }
  std::vector<int> order(static_cast<int>(k));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const double ma = sum[static_cast<std::size_t>(a)] / std::max(1, count[static_cast<std::size_t>(a)]);
    const double mb = sum[static_cast<std::size_t>(b)] / std::max(1, count[static_cast<std::size_t>(b)]);
    if (ma != mb) return ma > mb;
    return a < b;
  });
  std::vector<int> new_id(k);
  for (std::size_t rank = 0; rank < k; ++rank) {
    new_id[static_cast<std::size_t>(order[rank])] = static_cast<int>(rank);
  }
  ClusterModel out = model;
  for (int& c : out.assignment) c = new_id[static_cast<std::size_t>(c)];
  return out;
}

std::vector<Footprint> build_footprints(const ClusterModel& model,
                                        const std::vector<MetaRep>& reps,
                                        const std::vector<Combo>& combos) {
  if (reps.size() != model.assignment.size()) {
    throw std::invalid_argument("meta-rep count does not match assignment");
  }
  std::vector<Footprint> out;
  for (const Algorithm alg : kTargetAlgorithms) {
    Footprint fp;
    fp.algorithm = alg;
    for (int c = 0; c < model.num_clusters; ++c) {
      for (const Combo& combo : combos) {
        FootprintCell cell;
        cell.cluster = c;
        cell.combo = combo;
        double sum = 0.0;
        for (std::size_t i = 0; i < reps.size(); ++i) {
          if (reps[i].algorithm != alg || model.assignment[i] != c || !(reps[i].combo == combo)) {
            continue;
          }
          ++cell.count;
          sum += reps[i].prediction;
        }
        if (cell.count > 0) cell.mean_pred = sum / cell.count;
        fp.cells.push_back(cell);
      }
    }
    out.push_back(std::move(fp));
  }
  return out;
}

std::vector<std::vector<ImportanceEntry>> cluster_importance(const ClusterModel& model,
                                                             const std::vector<MetaRep>& reps) {
  if (reps.size() != model.assignment.size()) {
    throw std::invalid_argument("meta-rep count does not match assignment");
  }
  const std::size_t q = reps.empty() ? 0 : reps.front().shap.size();
  std::vector<std::vector<ImportanceEntry>> out(static_cast<std::size_t>(model.num_clusters));
  for (int c = 0; c < model.num_clusters; ++c) {
    std::vector<double> mean(q, 0.0);
    int members = 0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (model.assignment[i] != c) continue;
      ++members;
      for (std::size_t f = 0; f < q; ++f) mean[f] += std::abs(reps[i].shap[f]);
    }
    for (double& v : mean) v /= std::max(1, members);
    auto& ranked = out[static_cast<std::size_t>(c)];
    for (std::size_t f = 0; f < q; ++f) ranked.push_back({static_cast<int>(f), mean[f]});
    std::sort(ranked.begin(), ranked.end(), [](const ImportanceEntry& a, const ImportanceEntry& b) {
      if (a.mean_abs != b.mean_abs) return a.mean_abs > b.mean_abs;
      return a.feature < b.feature;
    });
  }
  return out;
}

DecisionPath decision_path(const ShapExplanation& explanation) {
  const std::size_t q = explanation.attributions.empty() ? 0 : explanation.attributions.front().size();
  std::vector<double> aggregate(q, 0.0);
  for (const auto& row : explanation.attributions) {
    for (std::size_t f = 0; f < q; ++f) aggregate[f] += std::abs(row[f]);
  }
  std::vector<int> order(static_cast<int>(q));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const double ia = aggregate[static_cast<std::size_t>(a)];
    const double ib = aggregate[static_cast<std::size_t>(b)];
    if (ia != ib) return ia < ib;
    return a < b;
  });
  return decision_path(explanation, order);
}

DecisionPath decision_path(const ShapExplanation& explanation, const std::vector<int>& ordering) {
  const std::size_t q = explanation.attributions.empty() ? 0 : explanation.attributions.front().size();
  if (ordering.size() != q) throw std::invalid_argument("ordering must cover every feature");
  DecisionPath path;
  path.feature_order = ordering;
  path.cumulative.resize(explanation.base.size());
  for (std::size_t t = 0; t < explanation.base.size(); ++t) {
    auto& line = path.cumulative[t];
    line.reserve(q + 1);
    line.push_back(explanation.base[t]);
    for (int f : ordering) {
      line.push_back(line.back() + explanation.attributions[t][static_cast<std::size_t>(f)]);
    }
  }
  return path;
}

}  // namespace rmnk::meta
