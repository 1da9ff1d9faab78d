#include "rmnk/meta/shap.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace rmnk::meta {
namespace {

struct PathElement {
  int feature = -1;
  double zero = 1.0;   // fraction of cover flowing through when excluded
  double one = 1.0;    // 0/1 indicator of x following the split when included
  double pweight = 1.0;
};

void extend(std::vector<PathElement>& path, double zero, double one, int feature) {
  const int depth = static_cast<int>(path.size());
  path.push_back({feature, zero, one, depth == 0 ? 1.0 : 0.0});
  for (int i = depth - 1; i >= 0; --i) {
    path[static_cast<std::size_t>(i + 1)].pweight +=
        one * path[static_cast<std::size_t>(i)].pweight * (i + 1) / static_cast<double>(depth + 1);
    path[static_cast<std::size_t>(i)].pweight =
        zero * path[static_cast<std::size_t>(i)].pweight * (depth - i) / static_cast<double>(depth + 1);
  }
}

void unwind(std::vector<PathElement>& path, int index) {
  const int depth = static_cast<int>(path.size()) - 1;
  const double one = path[static_cast<std::size_t>(index)].one;
  const double zero = path[static_cast<std::size_t>(index)].zero;
  double next_one = path[static_cast<std::size_t>(depth)].pweight;
  for (int i = depth - 1; i >= 0; --i) {
    if (one != 0.0) {
      const double tmp = path[static_cast<std::size_t>(i)].pweight;
      path[static_cast<std::size_t>(i)].pweight =
          next_one * (depth + 1) / static_cast<double>((i + 1) * one);
      next_one = tmp - path[static_cast<std::size_t>(i)].pweight * zero * (depth - i) /
                           static_cast<double>(depth + 1);
    } else {
      path[static_cast<std::size_t>(i)].pweight = path[static_cast<std::size_t>(i)].pweight *
                                                  (depth + 1) /
                                                  static_cast<double>(zero * (depth - i));
    }
  }
  for (int i = index; i < depth; ++i) {
    path[static_cast<std::size_t>(i)].feature = path[static_cast<std::size_t>(i + 1)].feature;
    path[static_cast<std::size_t>(i)].zero = path[static_cast<std::size_t>(i + 1)].zero;
    path[static_cast<std::size_t>(i)].one = path[static_cast<std::size_t>(i + 1)].one;
  }
  path.pop_back();
}

double unwound_sum(const std::vector<PathElement>& path, int index) {
  const int depth = static_cast<int>(path.size()) - 1;
  const double one = path[static_cast<std::size_t>(index)].one;
  const double zero = path[static_cast<std::size_t>(index)].zero;
  double next_one = path[static_cast<std::size_t>(depth)].pweight;
  double total = 0.0;
  for (int i = depth - 1; i >= 0; --i) {
    if (one != 0.0) {
      const double tmp = next_one * (depth + 1) / static_cast<double>((i + 1) * one);
      total += tmp;
      next_one = path[static_cast<std::size_t>(i)].pweight -
                 tmp * zero * (depth - i) / static_cast<double>(depth + 1);
    } else {
      total += path[static_cast<std::size_t>(i)].pweight * (depth + 1) /
               static_cast<double>(zero * (depth - i));
    }
  }
  return total;
}

struct TreeShapWalker {
  const Tree& tree;
  const std::vector<double>& x;
  int num_targets;
  std::vector<std::vector<double>>& phi;  // [target][feature]

  void recurse(int node_index, std::vector<PathElement> path, double zero, double one,
               int parent_feature) {
    extend(path, zero, one, parent_feature);
    const TreeNode& node = tree.nodes[static_cast<std::size_t>(node_index)];
    if (node.feature < 0) {
      for (int i = 1; i < static_cast<int>(path.size()); ++i) {
        const double w = unwound_sum(path, i);
        const PathElement& el = path[static_cast<std::size_t>(i)];
        const double scale = w * (el.one - el.zero);
        for (int j = 0; j < num_targets; ++j) {
          phi[static_cast<std::size_t>(j)][static_cast<std::size_t>(el.feature)] +=
              scale * node.value[static_cast<std::size_t>(j)];
        }
      }
      return;
    }
    const bool go_left = x[static_cast<std::size_t>(node.feature)] <= node.threshold;
    const int hot = go_left ? node.left : node.right;
    const int cold = go_left ? node.right : node.left;
    double incoming_zero = 1.0;
    double incoming_one = 1.0;
    for (int i = 1; i < static_cast<int>(path.size()); ++i) {
      if (path[static_cast<std::size_t>(i)].feature == node.feature) {
        incoming_zero = path[static_cast<std::size_t>(i)].zero;
        incoming_one = path[static_cast<std::size_t>(i)].one;
        unwind(path, i);
        break;
      }
    }
    const double hot_cover = tree.nodes[static_cast<std::size_t>(hot)].cover;
    const double cold_cover = tree.nodes[static_cast<std::size_t>(cold)].cover;
    recurse(hot, path, incoming_zero * hot_cover / node.cover, incoming_one, node.feature);
    recurse(cold, std::move(path), incoming_zero * cold_cover / node.cover, 0.0, node.feature);
  }
};

}  // namespace

std::vector<double> tree_expectation(const Tree& tree, int num_targets) {
  std::vector<double> total(static_cast<std::size_t>(num_targets), 0.0);
  for (const TreeNode& node : tree.nodes) {
    if (node.feature >= 0) continue;
    for (int j = 0; j < num_targets; ++j) {
      total[static_cast<std::size_t>(j)] += node.cover * node.value[static_cast<std::size_t>(j)];
    }
  }
  const double root_cover = tree.nodes.front().cover;
  for (double& v : total) v /= root_cover;
  return total;
}

double ShapExplanation::local_accuracy_error() const {
  double worst = 0.0;
  for (std::size_t j = 0; j < base.size(); ++j) {
    double total = base[j];
    for (double a : attributions[j]) total += a;
    worst = std::max(worst, std::abs(total - prediction[j]));
  }
  return worst;
}

ShapExplanation tree_shap(const ForestModel& model, const std::vector<double>& x) {
  const std::size_t q = model.feature_names.size();
  if (x.size() != q) throw std::invalid_argument("feature dimension mismatch");
  const int t = model.num_targets;

  ShapExplanation out;
  out.base.assign(static_cast<std::size_t>(t), 0.0);
  out.attributions.assign(static_cast<std::size_t>(t), std::vector<double>(q, 0.0));
  for (const Tree& tree : model.trees) {
    const std::vector<double> expectation = tree_expectation(tree, t);
    for (int j = 0; j < t; ++j) out.base[static_cast<std::size_t>(j)] += expectation[static_cast<std::size_t>(j)];
    TreeShapWalker walker{tree, x, t, out.attributions};
    walker.recurse(0, {}, 1.0, 1.0, -1);
  }
  const double n_trees = static_cast<double>(model.trees.size());
  for (double& b : out.base) b /= n_trees;
  for (auto& row : out.attributions) {
    for (double& v : row) v /= n_trees;
  }
  out.prediction = model.predict(x);
  return out;
}

}  // namespace rmnk::meta
