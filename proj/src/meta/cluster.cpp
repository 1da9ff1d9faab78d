#include "rmnk/meta/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rmnk::meta {

double cosine_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  double dot = 0.0, aa = 0.0, bb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    aa += a[i] * a[i];
    bb += b[i] * b[i];
  }
  if (aa == 0.0 || bb == 0.0) return 1.0;
  return 1.0 - dot / std::sqrt(aa * bb);
}

namespace {

std::vector<std::vector<double>> distance_matrix(const std::vector<std::vector<double>>& points) {
  const std::size_t n = points.size();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i][j] = d[j][i] = cosine_distance(points[i], points[j]);
    }
  }
  return d;
}

}  // namespace

double silhouette_score(const std::vector<std::vector<double>>& points,
                        const std::vector<int>& assignment) {
  const std::size_t n = points.size();
  if (assignment.size() != n) throw std::invalid_argument("assignment size mismatch");
  if (n == 0) throw std::invalid_argument("no points");
  const int num_clusters = *std::max_element(assignment.begin(), assignment.end()) + 1;
  std::vector<std::size_t> sizes(static_cast<std::size_t>(num_clusters), 0);
  for (int c : assignment) ++sizes[static_cast<std::size_t>(c)];

  const std::vector<std::vector<double>> d = distance_matrix(points);
  double total = 0.0;
  std::vector<double> sums(static_cast<std::size_t>(num_clusters));
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(sums.begin(), sums.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) sums[static_cast<std::size_t>(assignment[j])] += d[i][j];
    }
    const auto own = static_cast<std::size_t>(assignment[i]);
    if (sizes[own] <= 1) continue;  // singleton: s = 0
    const double a = sums[own] / static_cast<double>(sizes[own] - 1);
    double b = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < sums.size(); ++c) {
      if (c == own || sizes[c] == 0) continue;
      b = std::min(b, sums[c] / static_cast<double>(sizes[c]));
    }
    if (!std::isfinite(b)) continue;  // single cluster overall
    const double denom = std::max(a, b);
    total += denom > 0.0 ? (b - a) / denom : 0.0;
  }
  return total / static_cast<double>(n);
}

namespace {

// Average-linkage agglomeration over a precomputed distance matrix.
// Snapshots labels at every requested cluster count.
struct Agglomerator {
  std::vector<std::vector<double>> dist;  // cluster-to-cluster
  std::vector<std::vector<int>> members;
  std::vector<bool> active;

  explicit Agglomerator(const std::vector<std::vector<double>>& points)
      : dist(distance_matrix(points)), members(points.size()), active(points.size(), true) {
    for (std::size_t i = 0; i < points.size(); ++i) members[i] = {static_cast<int>(i)};
  }

  // Labels clusters by ascending smallest member.
  std::vector<int> labels(std::size_t point_count) const {
    std::vector<int> out(point_count, -1);
    int next = 0;
    for (std::size_t c = 0; c < members.size(); ++c) {
      if (!active[c]) continue;
      for (int p : members[c]) out[static_cast<std::size_t>(p)] = next;
      ++next;
    }
    return out;
  }

  void merge_step() {
    const std::size_t n = members.size();
    std::size_t best_i = 0, best_j = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!active[j]) continue;
        if (dist[i][j] < best) {
          best = dist[i][j];
          best_i = i;
          best_j = j;
        }
      }
    }
    const double si = static_cast<double>(members[best_i].size());
    const double sj = static_cast<double>(members[best_j].size());
    for (std::size_t c = 0; c < n; ++c) {
      if (!active[c] || c == best_i || c == best_j) continue;
      const double merged = (si * dist[best_i][c] + sj * dist[best_j][c]) / (si + sj);
      dist[best_i][c] = dist[c][best_i] = merged;
    }
    members[best_i].insert(members[best_i].end(), members[best_j].begin(), members[best_j].end());
    std::sort(members[best_i].begin(), members[best_i].end());
    members[best_j].clear();
    active[best_j] = false;
  }
};

}  // namespace

ClusterModel cluster_meta_at(const std::vector<std::vector<double>>& meta_reps, int num_clusters) {
  const std::size_t n = meta_reps.size();
  if (num_clusters < 1 || static_cast<std::size_t>(num_clusters) > n) {
    throw std::invalid_argument("cluster count out of range");
  }
  Agglomerator agg(meta_reps);
  for (std::size_t remaining = n; remaining > static_cast<std::size_t>(num_clusters); --remaining) {
    agg.merge_step();
  }
  ClusterModel model;
  model.assignment = agg.labels(n);
  model.num_clusters = num_clusters;
  model.silhouette = num_clusters >= 2 ? silhouette_score(meta_reps, model.assignment) : 0.0;
  return model;
}

ClusterModel cluster_meta(const std::vector<std::vector<double>>& meta_reps) {
  const std::size_t n = meta_reps.size();
  if (n < 3) throw std::invalid_argument("need at least 3 meta-representations");
  const int max_k = static_cast<int>(std::min<std::size_t>(20, n - 1));

  Agglomerator agg(meta_reps);
  ClusterModel best;
  for (std::size_t remaining = n; remaining > 1; --remaining) {
    if (remaining <= static_cast<std::size_t>(max_k) && remaining >= 2) {
      std::vector<int> labels = agg.labels(n);
      const double score = silhouette_score(meta_reps, labels);
      // Descending k order here, so >= keeps the smaller count on ties.
      if (best.num_clusters == 0 || score >= best.silhouette) {
        best.assignment = std::move(labels);
        best.num_clusters = static_cast<int>(remaining);
        best.silhouette = score;
      }
    }
    if (remaining > 2) agg.merge_step();
  }
  return best;
}

namespace {

// Cyclic Jacobi eigensolver for a symmetric matrix; returns eigenvalues on
// the diagonal of a and eigenvectors as columns of v.
void jacobi_eigen(std::vector<std::vector<double>>& a, std::vector<std::vector<double>>& v) {
  const std::size_t q = a.size();
  v.assign(q, std::vector<double>(q, 0.0));
  for (std::size_t i = 0; i < q; ++i) v[i][i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0, total = 0.0;
    for (std::size_t p = 0; p < q; ++p) {
      for (std::size_t r = 0; r < q; ++r) {
        total += a[p][r] * a[p][r];
        if (r > p) off += a[p][r] * a[p][r];
      }
    }
    if (off <= 1e-24 * std::max(total, 1e-300)) break;
    for (std::size_t p = 0; p < q; ++p) {
      for (std::size_t r = p + 1; r < q; ++r) {
        if (std::abs(a[p][r]) < 1e-300) continue;
        const double theta = (a[r][r] - a[p][p]) / (2.0 * a[p][r]);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t i = 0; i < q; ++i) {
          const double aip = a[i][p], air = a[i][r];
          a[i][p] = c * aip - s * air;
          a[i][r] = s * aip + c * air;
        }
        for (std::size_t i = 0; i < q; ++i) {
          const double api = a[p][i], ari = a[r][i];
          a[p][i] = c * api - s * ari;
          a[r][i] = s * api + c * ari;
        }
        for (std::size_t i = 0; i < q; ++i) {
          const double vip = v[i][p], vir = v[i][r];
          v[i][p] = c * vip - s * vir;
          v[i][r] = s * vip + c * vir;
        }
      }
    }
  }
}

}  // namespace

Pca2D project_2d(const std::vector<std::vector<double>>& points) {
  const std::size_t n = points.size();
  if (n < 2) throw std::invalid_argument("need at least 2 points");
  const std::size_t q = points.front().size();

  std::vector<double> mean(q, 0.0);
  for (const auto& p : points) {
    for (std::size_t c = 0; c < q; ++c) mean[c] += p[c];
  }
  for (double& m : mean) m /= static_cast<double>(n);

  std::vector<std::vector<double>> cov(q, std::vector<double>(q, 0.0));
  for (const auto& p : points) {
    for (std::size_t i = 0; i < q; ++i) {
      const double di = p[i] - mean[i];
      for (std::size_t j = i; j < q; ++j) cov[i][j] += di * (p[j] - mean[j]);
    }
  }
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = i; j < q; ++j) {
      cov[i][j] /= static_cast<double>(n - 1);
      cov[j][i] = cov[i][j];
    }
  }

  std::vector<std::vector<double>> vectors;
  jacobi_eigen(cov, vectors);
  std::vector<std::size_t> order(q);
  for (std::size_t i = 0; i < q; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (cov[a][a] != cov[b][b]) return cov[a][a] > cov[b][b];
    return a < b;
  });

  Pca2D out;
  out.coords.assign(n, {0.0, 0.0});
  std::vector<std::vector<double>> axes(2, std::vector<double>(q, 0.0));
  for (std::size_t axis = 0; axis < 2 && axis < q; ++axis) {
    const std::size_t col = order[axis];
    out.eigenvalues[axis] = cov[col][col];
    std::size_t peak = 0;
    for (std::size_t i = 1; i < q; ++i) {
      if (std::abs(vectors[i][col]) > std::abs(vectors[peak][col])) peak = i;
    }
    const double sign = vectors[peak][col] < 0.0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < q; ++i) axes[axis][i] = sign * vectors[i][col];
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t axis = 0; axis < 2 && axis < q; ++axis) {
      double dot = 0.0;
      for (std::size_t i = 0; i < q; ++i) dot += (points[r][i] - mean[i]) * axes[axis][i];
      out.coords[r][axis] = dot;
    }
  }
  return out;
}

}  // namespace rmnk::meta
