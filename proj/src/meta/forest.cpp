#include "rmnk/meta/forest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rmnk/core.hpp"
#include "rmnk/parallel.hpp"
#include "rmnk/rng.hpp"
#include "json.hpp"

namespace rmnk::meta {
namespace {

constexpr std::uint64_t kStreamTree = 0x54524545ULL;
constexpr std::uint64_t kStreamFold = 0x464f4c44ULL;

struct TreeBuilder {
  const std::vector<std::vector<double>>& x;
  const std::vector<std::vector<double>>& y;
  const ForestHyperparams& hp;
  int q;
  int t;
  int max_features;
  SubstreamRng& rng;
  Tree& tree;
  std::vector<int> feature_pool;  // scratch for per-split feature sampling

  int build(std::vector<int>& rows, int depth) {
    const int idx = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();
    tree.nodes[static_cast<std::size_t>(idx)].cover = static_cast<double>(rows.size());

    int best_feature = -1;
    double best_threshold = 0.0;
    double best_gain = 0.0;
    if (depth < hp.max_depth && static_cast<int>(rows.size()) >= hp.min_split) {
      find_split(rows, best_feature, best_threshold, best_gain);
    }

    if (best_feature < 0) {
      TreeNode& leaf = tree.nodes[static_cast<std::size_t>(idx)];
      leaf.value.assign(static_cast<std::size_t>(t), 0.0);
      for (int r : rows) {
        for (int i = 0; i < t; ++i) {
          leaf.value[static_cast<std::size_t>(i)] += y[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
        }
      }
      for (int i = 0; i < t; ++i) {
        leaf.value[static_cast<std::size_t>(i)] /= static_cast<double>(rows.size());
      }
      return idx;
    }

    std::vector<int> left_rows, right_rows;
    for (int r : rows) {
      if (x[static_cast<std::size_t>(r)][static_cast<std::size_t>(best_feature)] <= best_threshold) {
        left_rows.push_back(r);
      } else {
        right_rows.push_back(r);
      }
    }
    const int left = build(left_rows, depth + 1);
    const int right = build(right_rows, depth + 1);
    TreeNode& node = tree.nodes[static_cast<std::size_t>(idx)];
    node.feature = best_feature;
    node.threshold = best_threshold;
    node.left = left;
    node.right = right;
    return idx;
  }

  // Maximizes the summed per-target SSE reduction; ties keep the first
  // candidate in ascending (feature, threshold) order.
  void find_split(const std::vector<int>& rows, int& best_feature, double& best_threshold,
                  double& best_gain) {
    const std::size_t count = rows.size();
    feature_pool.resize(static_cast<std::size_t>(q));
    std::iota(feature_pool.begin(), feature_pool.end(), 0);
    int considered = q;
    if (max_features < q) {
      for (int i = 0; i < max_features; ++i) {  // partial Fisher-Yates, then sort
        const std::size_t j = i + rng.next_below(static_cast<std::uint64_t>(q - i));
        std::swap(feature_pool[static_cast<std::size_t>(i)], feature_pool[j]);
      }
      considered = max_features;
      std::sort(feature_pool.begin(), feature_pool.begin() + considered);
    }

    std::vector<std::pair<double, int>> order(count);
    std::vector<double> prefix(static_cast<std::size_t>(t));
    std::vector<double> total(static_cast<std::size_t>(t));
    for (int fi = 0; fi < considered; ++fi) {
      const int f = feature_pool[static_cast<std::size_t>(fi)];
      for (std::size_t i = 0; i < count; ++i) {
        order[i] = {x[static_cast<std::size_t>(rows[i])][static_cast<std::size_t>(f)], rows[i]};
      }
      std::sort(order.begin(), order.end());
      std::fill(total.begin(), total.end(), 0.0);
      for (std::size_t i = 0; i < count; ++i) {
        for (int j = 0; j < t; ++j) {
          total[static_cast<std::size_t>(j)] +=
              y[static_cast<std::size_t>(order[i].second)][static_cast<std::size_t>(j)];
        }
      }
      double base = 0.0;
      for (int j = 0; j < t; ++j) {
        base += total[static_cast<std::size_t>(j)] * total[static_cast<std::size_t>(j)] /
                static_cast<double>(count);
      }
      std::fill(prefix.begin(), prefix.end(), 0.0);
      for (std::size_t p = 1; p < count; ++p) {
        for (int j = 0; j < t; ++j) {
          prefix[static_cast<std::size_t>(j)] +=
              y[static_cast<std::size_t>(order[p - 1].second)][static_cast<std::size_t>(j)];
        }
        if (order[p - 1].first >= order[p].first) continue;  // no value gap
        if (p < static_cast<std::size_t>(hp.min_leaf) ||
            count - p < static_cast<std::size_t>(hp.min_leaf)) {
          continue;
        }
        double gain = -base;
        for (int j = 0; j < t; ++j) {
          const double l = prefix[static_cast<std::size_t>(j)];
          const double r = total[static_cast<std::size_t>(j)] - l;
          gain += l * l / static_cast<double>(p) +
                  r * r / static_cast<double>(count - p);
        }
        if (gain > best_gain) {
          best_gain = gain;
          best_feature = f;
          best_threshold = (order[p - 1].first + order[p].first) / 2.0;
        }
      }
    }
  }
};

}  // namespace

void Tree::predict_into(const std::vector<double>& x, double* out, int num_targets) const {
  int idx = 0;
  while (nodes[static_cast<std::size_t>(idx)].feature >= 0) {
    const TreeNode& node = nodes[static_cast<std::size_t>(idx)];
    idx = x[static_cast<std::size_t>(node.feature)] <= node.threshold ? node.left : node.right;
  }
  const TreeNode& leaf = nodes[static_cast<std::size_t>(idx)];
  for (int i = 0; i < num_targets; ++i) out[static_cast<std::size_t>(i)] += leaf.value[static_cast<std::size_t>(i)];
}

std::vector<double> ForestModel::predict(const std::vector<double>& x) const {
  if (x.size() != feature_names.size()) {
    throw std::invalid_argument("feature dimension mismatch");
  }
  std::vector<double> out(static_cast<std::size_t>(num_targets), 0.0);
  for (const Tree& tree : trees) tree.predict_into(x, out.data(), num_targets);
  for (double& v : out) v /= static_cast<double>(trees.size());
  return out;
}

ForestModel train_forest(const std::vector<std::vector<double>>& x,
                         const std::vector<std::vector<double>>& y,
                         const ForestHyperparams& hp, std::uint64_t seed) {
  if (x.empty()) throw std::invalid_argument("empty training set");
  if (x.size() != y.size()) throw std::invalid_argument("x/y row count mismatch");
  if (hp.n_trees < 1 || hp.max_depth < 0 || hp.min_split < 2 || hp.min_leaf < 1) {
    throw std::invalid_argument("bad hyperparameters");
  }
  const int q = static_cast<int>(x.front().size());
  const int t = static_cast<int>(y.front().size());

  ForestModel model;
  model.params = hp;
  model.num_targets = t;
  model.feature_names.resize(static_cast<std::size_t>(q));  // caller may rename
  for (int f = 0; f < q; ++f) model.feature_names[static_cast<std::size_t>(f)] = "f" + std::to_string(f);
  model.base.assign(static_cast<std::size_t>(t), 0.0);
  for (const auto& row : y) {
    for (int i = 0; i < t; ++i) model.base[static_cast<std::size_t>(i)] += row[static_cast<std::size_t>(i)];
  }
  for (double& b : model.base) b /= static_cast<double>(y.size());

  const int mf = (hp.max_features <= 0 || hp.max_features > q) ? q : hp.max_features;
  model.trees.resize(static_cast<std::size_t>(hp.n_trees));
  parallel_for(static_cast<std::size_t>(hp.n_trees), 0, [&](std::size_t ti) {
    SubstreamRng rng = SubstreamRng::of(seed, {kStreamTree, static_cast<std::uint64_t>(ti)});
    std::vector<int> rows(x.size());
    if (hp.bootstrap) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        rows[i] = static_cast<int>(rng.next_below(x.size()));
      }
    } else {
      std::iota(rows.begin(), rows.end(), 0);
    }
    TreeBuilder builder{x, y, hp, q, t, mf, rng, model.trees[ti], {}};
    builder.build(rows, 0);
  });
  return model;
}

namespace {

// Column-sliced copy of the dataset's rows selected by keep(row).
template <typename Keep>
void slice_rows(const Dataset& ds, const std::vector<int>* subset, Keep keep,
                std::vector<std::vector<double>>& x, std::vector<std::vector<double>>& y) {
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (!keep(i)) continue;
    if (subset == nullptr) {
      x.push_back(ds.x[i]);
    } else {
      std::vector<double> row;
      row.reserve(subset->size());
      for (int c : *subset) row.push_back(ds.x[i][static_cast<std::size_t>(c)]);
      x.push_back(std::move(row));
    }
    y.emplace_back(ds.y[i].begin(), ds.y[i].end());
  }
}

void apply_names(ForestModel& model, const Dataset& ds, const std::vector<int>* subset) {
  if (subset == nullptr) {
    model.feature_names = ds.feature_names;
  } else {
    model.feature_names.clear();
    for (int c : *subset) model.feature_names.push_back(ds.feature_names[static_cast<std::size_t>(c)]);
  }
}

}  // namespace

ForestModel train_forest(const Dataset& ds, const ForestHyperparams& hp, std::uint64_t seed,
                         const std::vector<int>* feature_subset) {
  std::vector<std::vector<double>> x, y;
  slice_rows(ds, feature_subset, [&](std::size_t i) { return ds.is_test[i] == 0; }, x, y);
  ForestModel model = train_forest(x, y, hp, seed);
  apply_names(model, ds, feature_subset);
  return model;
}

namespace {

CvScores evaluate_folds(const Dataset& ds,
                        const std::function<std::vector<std::vector<double>>(
                            int fold, const std::vector<std::vector<double>>& vx)>& fold_predict,
                        const std::vector<int>* subset) {
  const int targets = static_cast<int>(kTargetAlgorithms.size());
  CvScores scores;
  scores.mae.assign(static_cast<std::size_t>(targets), 0.0);
  scores.r2.assign(static_cast<std::size_t>(targets), 0.0);
  for (int fold = 0; fold < ds.num_folds; ++fold) {
    std::vector<std::vector<double>> vx, vy;
    slice_rows(ds, subset, [&](std::size_t i) { return ds.fold[i] == fold; }, vx, vy);
    const std::vector<std::vector<double>> pred = fold_predict(fold, vx);
    for (int j = 0; j < targets; ++j) {
      double mae = 0.0, sse = 0.0, mean = 0.0;
      for (std::size_t i = 0; i < vy.size(); ++i) mean += vy[i][static_cast<std::size_t>(j)];
      mean /= static_cast<double>(vy.size());
      double sst = 0.0;
      for (std::size_t i = 0; i < vy.size(); ++i) {
        const double truth = vy[i][static_cast<std::size_t>(j)];
        const double err = pred[i][static_cast<std::size_t>(j)] - truth;
        mae += std::abs(err);
        sse += err * err;
        sst += (truth - mean) * (truth - mean);
      }
      mae /= static_cast<double>(vy.size());
      const double r2 = sst > 0.0 ? 1.0 - sse / sst : (sse == 0.0 ? 1.0 : 0.0);
      scores.mae[static_cast<std::size_t>(j)] += mae;
      scores.r2[static_cast<std::size_t>(j)] += r2;
    }
  }
  for (double& v : scores.mae) v /= static_cast<double>(ds.num_folds);
  for (double& v : scores.r2) v /= static_cast<double>(ds.num_folds);
  return scores;
}

}  // namespace

CvScores cross_validate(const Dataset& ds, const ForestHyperparams& hp, std::uint64_t seed,
                        const std::vector<int>* feature_subset) {
  if (ds.num_folds < 1) throw std::invalid_argument("dataset has no folds");
  return evaluate_folds(
      ds,
      [&](int fold, const std::vector<std::vector<double>>& vx) {
        std::vector<std::vector<double>> tx, ty;
        slice_rows(ds, feature_subset,
                   [&](std::size_t i) { return ds.is_test[i] == 0 && ds.fold[i] != fold; }, tx, ty);
        const ForestModel model =
            train_forest(tx, ty, hp, hash_combine(seed, stream_key(kStreamFold, {static_cast<std::uint64_t>(fold)})));
        std::vector<std::vector<double>> pred;
        pred.reserve(vx.size());
        for (const auto& row : vx) pred.push_back(model.predict(row));
        return pred;
      },
      feature_subset);
}

CvScores cross_validate_baseline(const Dataset& ds) {
  if (ds.num_folds < 1) throw std::invalid_argument("dataset has no folds");
  return evaluate_folds(
      ds,
      [&](int fold, const std::vector<std::vector<double>>& vx) {
        std::vector<std::vector<double>> tx, ty;
        slice_rows(ds, nullptr,
                   [&](std::size_t i) { return ds.is_test[i] == 0 && ds.fold[i] != fold; }, tx, ty);
        std::vector<double> mean(kTargetAlgorithms.size(), 0.0);
        for (const auto& row : ty) {
          for (std::size_t j = 0; j < mean.size(); ++j) mean[j] += row[j];
        }
        for (double& v : mean) v /= static_cast<double>(ty.size());
        return std::vector<std::vector<double>>(vx.size(), mean);
      },
      nullptr);
}

SffsResult sffs(const Dataset& ds, const ForestHyperparams& hp, std::uint64_t seed) {
  const int q = static_cast<int>(ds.feature_names.size());
  if (q < 1) throw std::invalid_argument("no features");
  SffsResult result;
  std::vector<int> remaining(static_cast<std::size_t>(q));
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<int> selected;

  auto mean_mae = [&](const std::vector<int>& subset) {
    const CvScores scores = cross_validate(ds, hp, seed, &subset);
    double total = 0.0;
    for (double v : scores.mae) total += v;
    return total / static_cast<double>(scores.mae.size());
  };

  while (!remaining.empty()) {
    int best_candidate = -1;
    double best_score = 0.0;
    for (int candidate : remaining) {  // ascending = catalog order
      std::vector<int> trial = selected;
      trial.push_back(candidate);
      std::sort(trial.begin(), trial.end());
      const double score = mean_mae(trial);
      if (best_candidate < 0 || score < best_score) {
        best_candidate = candidate;
        best_score = score;
      }
    }
    selected.push_back(best_candidate);
    remaining.erase(std::find(remaining.begin(), remaining.end(), best_candidate));
    result.order.push_back(best_candidate);
    result.scores.push_back(best_score);
  }

  result.best_prefix = 1;
  for (std::size_t i = 1; i < result.scores.size(); ++i) {
    if (result.scores[i] < result.scores[static_cast<std::size_t>(result.best_prefix - 1)]) {
      result.best_prefix = static_cast<int>(i) + 1;
    }
  }
  return result;
}

void save_model(const ForestModel& model, const std::string& path) {
  std::ostringstream out;
  out << "{\n  \"params\": {\"n_trees\": " << model.params.n_trees
      << ", \"max_depth\": " << model.params.max_depth
      << ", \"min_split\": " << model.params.min_split
      << ", \"min_leaf\": " << model.params.min_leaf
      << ", \"max_features\": " << model.params.max_features
      << ", \"bootstrap\": " << (model.params.bootstrap ? "true" : "false") << "},\n";
  out << "  \"feature_names\": [";
  for (std::size_t i = 0; i < model.feature_names.size(); ++i) {
    out << (i ? ", " : "") << '"' << model.feature_names[i] << '"';
  }
  out << "],\n  \"base\": [";
  for (std::size_t i = 0; i < model.base.size(); ++i) {
    out << (i ? ", " : "") << format_double(model.base[i]);
  }
  out << "],\n  \"num_targets\": " << model.num_targets << ",\n  \"trees\": [\n";
  for (std::size_t ti = 0; ti < model.trees.size(); ++ti) {
    out << "    [";
    const Tree& tree = model.trees[ti];
    for (std::size_t ni = 0; ni < tree.nodes.size(); ++ni) {
      const TreeNode& n = tree.nodes[ni];
      out << (ni ? ", " : "") << "{\"feature\": " << n.feature
          << ", \"threshold\": " << format_double(n.threshold) << ", \"left\": " << n.left
          << ", \"right\": " << n.right << ", \"cover\": " << format_double(n.cover)
          << ", \"value\": [";
      for (std::size_t vi = 0; vi < n.value.size(); ++vi) {
        out << (vi ? ", " : "") << format_double(n.value[vi]);
      }
      out << "]}";
    }
    out << (ti + 1 < model.trees.size() ? "],\n" : "]\n");
  }
  out << "  ]\n}\n";
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open for writing: " + path);
  file << out.str();
  if (!file.flush()) throw std::runtime_error("write failed: " + path);
}

ForestModel load_model(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open: " + path);
  nlohmann::json doc = nlohmann::json::parse(file);
  ForestModel model;
  const auto& params = doc.at("params");
  model.params.n_trees = params.at("n_trees").get<int>();
  model.params.max_depth = params.at("max_depth").get<int>();
  model.params.min_split = params.at("min_split").get<int>();
  model.params.min_leaf = params.at("min_leaf").get<int>();
  model.params.max_features = params.at("max_features").get<int>();
  model.params.bootstrap = params.at("bootstrap").get<bool>();
  model.feature_names = doc.at("feature_names").get<std::vector<std::string>>();
  model.base = doc.at("base").get<std::vector<double>>();
  model.num_targets = doc.at("num_targets").get<int>();
  for (const auto& tree_doc : doc.at("trees")) {
    Tree tree;
    for (const auto& node_doc : tree_doc) {
      TreeNode node;
      node.feature = node_doc.at("feature").get<int>();
      node.threshold = node_doc.at("threshold").get<double>();
      node.left = node_doc.at("left").get<int>();
      node.right = node_doc.at("right").get<int>();
      node.cover = node_doc.at("cover").get<double>();
      node.value = node_doc.at("value").get<std::vector<double>>();
      tree.nodes.push_back(std::move(node));
    }
    model.trees.push_back(std::move(tree));
  }
  return model;
}

}  // namespace rmnk::meta
