#pragma once

#include <array>
#include <span>
#include <vector>

namespace rmnk::meta {

// 1 - cos(a, b); an all-zero vector is at distance 1 from everything.
double cosine_distance(std::span<const double> a, std::span<const double> b);

// Mean silhouette over all points; singleton clusters score 0.
double silhouette_score(const std::vector<std::vector<double>>& points,
                        const std::vector<int>& assignment);

struct ClusterModel {
  std::vector<int> assignment;  // cluster ids 0..num_clusters-1
  int num_clusters = 0;
  double silhouette = 0.0;
};

// Agglomerative clustering with cosine distance and average linkage; the
// cluster count in 2..min(20, N-1) maximizes the silhouette, smaller count
// on ties. Requires at least 3 points.
ClusterModel cluster_meta(const std::vector<std::vector<double>>& meta_reps);

// Cut of the same dendrogram at a fixed cluster count.
ClusterModel cluster_meta_at(const std::vector<std::vector<double>>& meta_reps, int num_clusters);

struct Pca2D {
  std::vector<std::array<double, 2>> coords;
  std::array<double, 2> eigenvalues{};  // top-2 covariance eigenvalues
};

// Mean-centered projection onto the top-2 principal axes; each axis is
// signed so its largest-magnitude loading is positive.
Pca2D project_2d(const std::vector<std::vector<double>>& points);

}  // namespace rmnk::meta
