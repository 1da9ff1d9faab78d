#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "rmnk/meta/forest.hpp"
#include "rmnk/meta/shap.hpp"
#include "rmnk/rng.hpp"

using namespace rmnk;
using namespace rmnk::meta;

namespace {

ForestHyperparams exact_hp(int trees, int depth) {
  ForestHyperparams hp;
  hp.n_trees = trees;
  hp.max_depth = depth;
  hp.min_split = 2;
  hp.min_leaf = 1;
  hp.bootstrap = false;
  return hp;
}

// Random regression problem with q features and two targets.
ForestModel random_model(int q, int rows, int depth, int trees, std::uint64_t seed,
                         bool bootstrap, std::vector<std::vector<double>>* probes) {
  SubstreamRng rng = SubstreamRng::of(seed, {0x7e57});
  std::vector<std::vector<double>> x, y;
  for (int i = 0; i < rows; ++i) {
    std::vector<double> row;
    for (int c = 0; c < q; ++c) row.push_back(rng.next_unit());
    double a = 0.0;
    for (int c = 0; c < q; ++c) a += (c % 2 ? 1.0 : -1.0) * row[static_cast<std::size_t>(c)];
    x.push_back(row);
    y.push_back({a + rng.next_unit(), row[0] * row[std::size_t(q > 1 ? 1 : 0)] + rng.next_unit()});
  }
  if (probes) {
    for (int i = 0; i < 8; ++i) {
      std::vector<double> p;
      for (int c = 0; c < q; ++c) p.push_back(rng.next_unit() * 1.2 - 0.1);
      probes->push_back(p);
    }
  }
  ForestHyperparams hp;
  hp.n_trees = trees;
  hp.max_depth = depth;
  hp.min_split = 2;
  hp.min_leaf = 1;
  hp.bootstrap = bootstrap;
  return train_forest(x, y, hp, seed);
}

}  // namespace

TEST_CASE("tree_shap: a split-free forest attributes nothing") {
  const std::vector<std::vector<double>> x = {{0.0}, {1.0}, {2.0}};
  const std::vector<std::vector<double>> y = {{1.0, 10.0}, {2.0, 20.0}, {3.0, 30.0}};
  ForestModel model = train_forest(x, y, exact_hp(3, 0), 42);
  ShapExplanation ex = tree_shap(model, {9.0});
  CHECK(ex.base == std::vector<double>{2.0, 20.0});
  CHECK(ex.prediction == std::vector<double>{2.0, 20.0});
  REQUIRE(ex.attributions.size() == 2);
  for (const auto& target : ex.attributions) {
    REQUIRE(target.size() == 1);
    CHECK(target[0] == 0.0);
  }
  CHECK(ex.local_accuracy_error() == 0.0);
}

TEST_CASE("tree_shap: single stump by hand") {
  // Leaves: x<=0.5 -> 5 (cover 2), else 8 (cover 1); expectation (2*5+8)/3 = 6.
  const std::vector<std::vector<double>> x = {{0.0}, {0.0}, {1.0}};
  const std::vector<std::vector<double>> y = {{5.0}, {5.0}, {8.0}};
  ForestModel model = train_forest(x, y, exact_hp(1, 1), 7);
  REQUIRE(model.trees.size() == 1);
  REQUIRE(model.trees[0].nodes.size() == 3);
  CHECK(model.trees[0].nodes[0].threshold == 0.5);
  CHECK(tree_expectation(model.trees[0], 1) == std::vector<double>{6.0});

  ShapExplanation hi = tree_shap(model, {2.0});
  CHECK(hi.base == std::vector<double>{6.0});
  CHECK(hi.prediction == std::vector<double>{8.0});
  CHECK(hi.attributions[0][0] == doctest::Approx(2.0).epsilon(1e-12));

  ShapExplanation lo = tree_shap(model, {0.0});
  CHECK(lo.base == std::vector<double>{6.0});
  CHECK(lo.prediction == std::vector<double>{5.0});
  CHECK(lo.attributions[0][0] == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("tree_shap: matches brute-force Shapley values on small forests") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    std::vector<std::vector<double>> probes;
    ForestModel model = random_model(6, 40, 3, 4, seed, false, &probes);
    for (const auto& probe : probes) {
      ShapExplanation ex = tree_shap(model, probe);
      const auto brute = oracle::shapley_brute(model, probe);
      REQUIRE(ex.attributions.size() == brute.size());
      for (std::size_t t = 0; t < brute.size(); ++t) {
        for (std::size_t f = 0; f < brute[t].size(); ++f) {
          CHECK(ex.attributions[t][f] ==
                doctest::Approx(brute[t][f]).epsilon(1e-9).scale(1.0));
        }
      }
    }
  }
}

TEST_CASE("tree_shap: base equals the mean cover-weighted tree expectation") {
  std::vector<std::vector<double>> probes;
  ForestModel model = random_model(5, 60, 4, 6, 11, true, &probes);
  std::vector<double> mean(2, 0.0);
  for (const Tree& tree : model.trees) {
    const std::vector<double> e = tree_expectation(tree, 2);
    mean[0] += e[0];
    mean[1] += e[1];
  }
  mean[0] /= static_cast<double>(model.trees.size());
  mean[1] /= static_cast<double>(model.trees.size());
  ShapExplanation ex = tree_shap(model, probes[0]);
  CHECK(ex.base[0] == doctest::Approx(mean[0]).epsilon(1e-12));
  CHECK(ex.base[1] == doctest::Approx(mean[1]).epsilon(1e-12));
  // The brute oracle computes the same quantity as v(empty set).
  const double empty = oracle::tree_exp_given(model.trees[0], probes[0], 0, 0, 0);
  const std::vector<double> e0 = tree_expectation(model.trees[0], 2);
  CHECK(e0[0] == doctest::Approx(empty).epsilon(1e-12).scale(1.0));
}

TEST_CASE("tree_shap: local accuracy holds on bootstrapped deep forests") {
  for (std::uint64_t seed : {5ull, 6ull}) {
    std::vector<std::vector<double>> probes;
    ForestModel model = random_model(8, 80, 6, 10, seed, true, &probes);
    for (const auto& probe : probes) {
      ShapExplanation ex = tree_shap(model, probe);
      CHECK(ex.local_accuracy_error() < 1e-9);
      for (std::size_t t = 0; t < ex.prediction.size(); ++t) {
        double sum = ex.base[t];
        for (double a : ex.attributions[t]) sum += a;
        CHECK(sum == doctest::Approx(ex.prediction[t]).epsilon(1e-9).scale(1.0));
      }
      // Prediction surfaced by the explanation equals the model's own.
      const std::vector<double> direct = model.predict(probe);
      for (std::size_t t = 0; t < direct.size(); ++t) {
        CHECK(ex.prediction[t] == doctest::Approx(direct[t]).epsilon(1e-12).scale(1.0));
      }
    }
  }
}

TEST_CASE("tree_shap: features absent from every split get exactly zero") {
  // Third column is constant in training, so no tree can split on it.
  SubstreamRng rng = SubstreamRng::of(99, {0xd00d});
  std::vector<std::vector<double>> x, y;
  for (int i = 0; i < 30; ++i) {
    x.push_back({rng.next_unit(), rng.next_unit(), 0.25});
    y.push_back({x.back()[0] + 2.0 * x.back()[1]});
  }
  ForestModel model = train_forest(x, y, exact_hp(4, 4), 3);
  for (const Tree& tree : model.trees) {
    for (const TreeNode& node : tree.nodes) CHECK(node.feature != 2);
  }
  ShapExplanation ex = tree_shap(model, {0.9, 0.1, 77.0});
  CHECK(ex.attributions[0][2] == 0.0);
}

TEST_CASE("tree_shap: rejects inputs of the wrong width") {
  const std::vector<std::vector<double>> x = {{0.0, 1.0}, {1.0, 0.0}, {2.0, 2.0}};
  const std::vector<std::vector<double>> y = {{1.0}, {2.0}, {3.0}};
  ForestModel model = train_forest(x, y, exact_hp(2, 2), 1);
  CHECK_THROWS_AS(tree_shap(model, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(tree_shap(model, {1.0, 2.0, 3.0}), std::invalid_argument);
}
