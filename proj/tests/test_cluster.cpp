#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "rmnk/meta/cluster.hpp"
#include "rmnk/rng.hpp"

using namespace rmnk;
using namespace rmnk::meta;

namespace {

// Tight blobs in clearly separated cosine directions.
std::vector<std::vector<double>> blob_cloud(int blobs, int per_blob, std::uint64_t seed) {
  static const std::vector<std::vector<double>> centers = {
      {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {1.0, 1.0, 0.0}};
  SubstreamRng rng = SubstreamRng::of(seed, {0xb10b});
  std::vector<std::vector<double>> pts;
  for (int b = 0; b < blobs; ++b) {
    for (int i = 0; i < per_blob; ++i) {
      std::vector<double> p = centers[static_cast<std::size_t>(b)];
      for (double& v : p) v += 0.02 * (rng.next_unit() - 0.5);
      pts.push_back(p);
    }
  }
  return pts;
}

double l2(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1]);
}

double l2v(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("cosine_distance: parallel, orthogonal, opposite, zero") {
  const std::vector<double> a = {1.0, 2.0, 3.0};
  const std::vector<double> b = {2.0, 4.0, 6.0};
  const std::vector<double> c = {0.0, 0.0, 0.0};
  const std::vector<double> d = {-1.0, -2.0, -3.0};
  const std::vector<double> ex = {1.0, 0.0};
  const std::vector<double> ey = {0.0, 5.0};
  CHECK(cosine_distance(a, b) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  CHECK(cosine_distance(ex, ey) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(cosine_distance(a, d) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(cosine_distance(a, c) == 1.0);
  CHECK(cosine_distance(c, c) == 1.0);
  CHECK(cosine_distance(a, a) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
}

TEST_CASE("cosine_distance: agrees with the oracle on random vectors") {
  SubstreamRng rng = SubstreamRng::of(5, {0xc05});
  for (int it = 0; it < 50; ++it) {
    std::vector<double> a, b;
    for (int i = 0; i < 6; ++i) {
      a.push_back(rng.next_unit() * 2.0 - 1.0);
      b.push_back(rng.next_unit() * 2.0 - 1.0);
    }
    CHECK(cosine_distance(a, b) ==
          doctest::Approx(oracle::cosine_distance(a, b)).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("silhouette_score: matches the oracle on random labelings") {
  SubstreamRng rng = SubstreamRng::of(9, {0x51});
  for (int it = 0; it < 50; ++it) {
    const std::size_t n = 5 + rng.next_below(10);
    const int k = 1 + static_cast<int>(rng.next_below(4));
    std::vector<std::vector<double>> pts;
    std::vector<int> labels;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> p;
      for (int d = 0; d < 4; ++d) p.push_back(rng.next_unit() * 2.0 - 1.0);
      pts.push_back(p);
      labels.push_back(static_cast<int>(rng.next_below(static_cast<std::uint64_t>(k))));
    }
    CHECK(silhouette_score(pts, labels) ==
          doctest::Approx(oracle::silhouette(pts, labels)).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("silhouette_score: hand cases") {
  // Two tight pairs: near-perfect separation.
  const std::vector<std::vector<double>> pts = {
      {1.0, 0.0}, {1.0, 0.01}, {0.0, 1.0}, {0.01, 1.0}};
  const double s = silhouette_score(pts, {0, 0, 1, 1});
  CHECK(s > 0.9);
  CHECK(s <= 1.0);
  // Singletons contribute 0; a single cluster over everything scores 0.
  CHECK(silhouette_score(pts, {0, 1, 2, 3}) == 0.0);
  CHECK(silhouette_score(pts, {0, 0, 0, 0}) == 0.0);
}

TEST_CASE("cluster_meta: recovers two separated blobs") {
  const auto pts = blob_cloud(2, 5, 3);
  ClusterModel model = cluster_meta(pts);
  CHECK(model.num_clusters == 2);
  REQUIRE(model.assignment.size() == 10);
  // First blob one label, second the other.
  for (int i = 1; i < 5; ++i) CHECK(model.assignment[i] == model.assignment[0]);
  for (int i = 6; i < 10; ++i) CHECK(model.assignment[i] == model.assignment[5]);
  CHECK(model.assignment[0] != model.assignment[5]);
  CHECK(model.silhouette == silhouette_score(pts, model.assignment));
  CHECK(model.silhouette > 0.9);
}

TEST_CASE("cluster_meta: recovers three blobs and labels by first member") {
  const auto pts = blob_cloud(3, 4, 8);
  ClusterModel model = cluster_meta(pts);
  CHECK(model.num_clusters == 3);
  // Labels are assigned by ascending smallest member index.
  CHECK(model.assignment[0] == 0);
  CHECK(model.assignment[4] == 1);
  CHECK(model.assignment[8] == 2);
  std::set<int> seen(model.assignment.begin(), model.assignment.end());
  CHECK(seen == std::set<int>{0, 1, 2});
}

TEST_CASE("cluster_meta_at: dendrogram cuts nest as k decreases") {
  const auto pts = blob_cloud(4, 4, 21);
  for (int k = 5; k >= 2; --k) {
    ClusterModel fine = cluster_meta_at(pts, k);
    ClusterModel coarse = cluster_meta_at(pts, k - 1);
    CHECK(fine.num_clusters == k);
    CHECK(coarse.num_clusters == k - 1);
    // Merging one pair: every fine cluster maps into exactly one coarse one.
    std::vector<int> image(static_cast<std::size_t>(k), -1);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      int& slot = image[static_cast<std::size_t>(fine.assignment[i])];
      if (slot < 0) slot = coarse.assignment[i];
      CHECK(slot == coarse.assignment[i]);
    }
  }
}

TEST_CASE("cluster_meta_at: trivial and invalid cuts") {
  const auto pts = blob_cloud(2, 3, 4);
  ClusterModel all = cluster_meta_at(pts, 1);
  CHECK(all.num_clusters == 1);
  for (int label : all.assignment) CHECK(label == 0);
  CHECK(all.silhouette == 0.0);

  ClusterModel each = cluster_meta_at(pts, static_cast<int>(pts.size()));
  CHECK(each.num_clusters == static_cast<int>(pts.size()));
  CHECK(each.silhouette == 0.0);  // all singletons

  CHECK_THROWS_AS(cluster_meta_at(pts, 0), std::invalid_argument);
  CHECK_THROWS_AS(cluster_meta_at(pts, static_cast<int>(pts.size()) + 1),
                  std::invalid_argument);
}

TEST_CASE("cluster_meta: needs at least three points") {
  CHECK_THROWS_AS(cluster_meta({}), std::invalid_argument);
  CHECK_THROWS_AS(cluster_meta({{1.0, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(cluster_meta({{1.0, 0.0}, {0.0, 1.0}}), std::invalid_argument);
}

TEST_CASE("cluster_meta: the selected cut maximizes the silhouette over 2..min(20,N-1)") {
  const auto pts = blob_cloud(3, 4, 13);
  ClusterModel best = cluster_meta(pts);
  for (int k = 2; k <= static_cast<int>(pts.size()) - 1 && k <= 20; ++k) {
    ClusterModel cut = cluster_meta_at(pts, k);
    CHECK(best.silhouette >= cut.silhouette - 1e-15);
  }
}

TEST_CASE("project_2d: two points on a line") {
  Pca2D pca = project_2d({{0.0, 0.0}, {2.0, 0.0}});
  REQUIRE(pca.coords.size() == 2);
  CHECK(pca.coords[0][0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(pca.coords[0][1] == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(pca.coords[1][0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pca.coords[1][1] == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(pca.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(pca.eigenvalues[1] == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("project_2d: collinear clouds collapse to one axis") {
  // Points along direction (-3, 1): the axis sign flips so the largest
  // loading is positive, giving the largest-x point a positive coordinate.
  std::vector<std::vector<double>> pts;
  for (int i = -3; i <= 3; ++i) {
    pts.push_back({-3.0 * i, 1.0 * i});
  }
  Pca2D pca = project_2d(pts);
  for (const auto& c : pca.coords) {
    CHECK(c[1] == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
  }
  CHECK(pca.eigenvalues[1] == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
  // i = -3 has the largest first component (+9): positive score.
  CHECK(pca.coords[0][0] > 0.0);
  CHECK(pca.coords[6][0] < 0.0);
}

TEST_CASE("project_2d: rank-2 data preserves pairwise distances") {
  // Plane embedded in 5 dims: distances survive the projection exactly.
  SubstreamRng rng = SubstreamRng::of(31, {0x9a7e});
  const std::vector<double> u = {1.0, 0.0, 2.0, 0.0, -1.0};
  const std::vector<double> v = {0.0, 3.0, -1.0, 1.0, 0.0};
  std::vector<std::vector<double>> pts;
  for (int i = 0; i < 12; ++i) {
    const double a = rng.next_unit() * 4.0 - 2.0;
    const double b = rng.next_unit() * 4.0 - 2.0;
    std::vector<double> p(5, 0.0);
    for (int d = 0; d < 5; ++d) {
      p[static_cast<std::size_t>(d)] =
          a * u[static_cast<std::size_t>(d)] + b * v[static_cast<std::size_t>(d)];
    }
    pts.push_back(p);
  }
  Pca2D pca = project_2d(pts);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      CHECK(l2(pca.coords[i], pca.coords[j]) ==
            doctest::Approx(l2v(pts[i], pts[j])).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("project_2d: eigenvalues match the coordinate variances and power iteration") {
  SubstreamRng rng = SubstreamRng::of(17, {0xeea});
  std::vector<std::vector<double>> pts;
  for (int i = 0; i < 20; ++i) {
    std::vector<double> p;
    for (int d = 0; d < 4; ++d) p.push_back(rng.next_unit() * 3.0);
    pts.push_back(p);
  }
  Pca2D pca = project_2d(pts);
  CHECK(pca.eigenvalues[0] >= pca.eigenvalues[1]);
  CHECK(pca.eigenvalues[0] ==
        doctest::Approx(oracle::power_iter_top_eig(pts)).epsilon(1e-8));

  const double denom = static_cast<double>(pts.size()) - 1.0;
  for (int axis = 0; axis < 2; ++axis) {
    double mean = 0.0;
    for (const auto& c : pca.coords) mean += c[static_cast<std::size_t>(axis)];
    mean /= static_cast<double>(pts.size());
    double var = 0.0, cross = 0.0;
    for (const auto& c : pca.coords) {
      var += (c[static_cast<std::size_t>(axis)] - mean) *
             (c[static_cast<std::size_t>(axis)] - mean);
      cross += c[0] * c[1];
    }
    CHECK(var / denom ==
          doctest::Approx(pca.eigenvalues[static_cast<std::size_t>(axis)]).epsilon(1e-9));
    if (axis == 0) {
      CHECK(cross == doctest::Approx(0.0).scale(1.0).epsilon(1e-8));
    }
  }
}

TEST_CASE("project_2d: needs at least two points") {
  CHECK_THROWS_AS(project_2d({}), std::invalid_argument);
  CHECK_THROWS_AS(project_2d({{1.0, 2.0}}), std::invalid_argument);
}
