#include "rmnk/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace rmnk {

double resolution(const std::vector<ArchiveItem>& archive,
                  const std::vector<Genotype>& pareto) {
  if (pareto.empty()) throw std::invalid_argument("empty Pareto set");
  std::unordered_set<std::uint64_t> optimal;
  optimal.reserve(pareto.size());
  for (const Genotype& g : pareto) optimal.insert(g.bits);
  std::size_t hits = 0;
  for (const ArchiveItem& item : archive) hits += optimal.count(item.genotype.bits);
  return static_cast<double>(hits) / static_cast<double>(optimal.size());
}

namespace {

double hypervolume_2d(std::vector<ObjectiveVector> pts) {
  std::sort(pts.begin(), pts.end(), [](const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a[0] != b[0]) return a[0] > b[0];
    return a[1] > b[1];
  });
  double hv = 0.0;
  double best = 0.0;  // highest f2 seen while sweeping f1 downward
  for (const ObjectiveVector& p : pts) {
    if (p[1] > best) {
      hv += p[0] * (p[1] - best);
      best = p[1];
    }
  }
  return hv;
}

// 2D staircase of mutually non-dominated (x, y); keys ascend, values
// strictly descend. Tracks the covered area incrementally.
class Staircase {
 public:
  // Returns the area gained by adding the box [0,x] x [0,y].
  double add(double x, double y) {
    const auto geq = steps_.lower_bound(x);
    if (geq != steps_.end() && geq->second >= y) return 0.0;  // weakly dominated
    // Strip (a, b] of the old cover has the height of its right-end entry;
    // walk left over now-dominated entries, summing the area they covered.
    auto it = steps_.upper_bound(x);
    double cur_h = it == steps_.end() ? 0.0 : it->second;
    double cur_x = x;
    double covered = 0.0;
    while (it != steps_.begin()) {
      const auto prev = std::prev(it);
      if (prev->second > y) break;
      covered += (cur_x - prev->first) * cur_h;
      cur_x = prev->first;
      cur_h = prev->second;
      it = steps_.erase(prev);
    }
    const double left = it == steps_.begin() ? 0.0 : std::prev(it)->first;
    covered += (cur_x - left) * cur_h;
    const double delta = (x - left) * y - covered;
    steps_.emplace(x, y);
    area_ += delta;
    return delta;
  }

  double area() const { return area_; }

 private:
  std::map<double, double> steps_;
  double area_ = 0.0;
};

double hypervolume_3d(std::vector<ObjectiveVector> pts) {
  std::sort(pts.begin(), pts.end(), [](const ObjectiveVector& a, const ObjectiveVector& b) {
    return a[2] > b[2];
  });
  Staircase stairs;
  double hv = 0.0;
  double prev_z = pts.front()[2];
  for (const ObjectiveVector& p : pts) {
    hv += stairs.area() * (prev_z - p[2]);
    stairs.add(p[0], p[1]);
    prev_z = p[2];
  }
  hv += stairs.area() * prev_z;  // down to the reference plane
  return hv;
}

}  // namespace

double hypervolume(const std::vector<ObjectiveVector>& points, const ObjectiveVector& ref) {
  const std::size_t m = ref.size();
  if (m != 2 && m != 3) throw std::invalid_argument("hypervolume supports 2 or 3 objectives");
  if (points.empty()) return 0.0;
  std::vector<ObjectiveVector> shifted;
  shifted.reserve(points.size());
  for (const ObjectiveVector& p : points) {
    if (p.size() != m) throw std::invalid_argument("point dimension does not match reference");
    ObjectiveVector q(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (p[i] < ref[i]) throw std::invalid_argument("point below reference");
      q[i] = p[i] - ref[i];
    }
    shifted.push_back(std::move(q));
  }
  return m == 2 ? hypervolume_2d(std::move(shifted)) : hypervolume_3d(std::move(shifted));
}

double relative_hypervolume(const std::vector<ObjectiveVector>& archive,
                            const std::vector<ObjectiveVector>& front) {
  if (front.empty()) throw std::invalid_argument("empty Pareto front");
  const ObjectiveVector ref(front.front().size(), 0.0);
  const double denom = hypervolume(front, ref);
  if (denom <= 0.0) {
    const std::set<ObjectiveVector> want(front.begin(), front.end());
    const std::set<ObjectiveVector> got(archive.begin(), archive.end());
    if (want == got) return 1.0;
    throw std::domain_error("zero front hypervolume with differing archive");
  }
  return hypervolume(archive, ref) / denom;
}

PerformanceRecord aggregate(const std::vector<RunResult>& results,
                            const EnumeratedLandscape& landscape) {
  if (results.empty()) throw std::invalid_argument("no runs to aggregate");
  const std::vector<Genotype> pareto = pareto_set(landscape);
  const std::vector<ObjectiveVector> front = pareto_front(landscape);

  std::vector<double> reso, hv;
  reso.reserve(results.size());
  hv.reserve(results.size());
  for (const RunResult& run : results) {
    reso.push_back(resolution(run.archive, pareto));
    std::vector<ObjectiveVector> vectors;
    vectors.reserve(run.archive.size());
    for (const ArchiveItem& item : run.archive) vectors.push_back(item.objectives);
    hv.push_back(relative_hypervolume(vectors, front));
  }

  auto mean_of = [](const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
  };
  auto std_of = [](const std::vector<double>& xs, double mu) {
    double s = 0.0;
    for (double x : xs) s += (x - mu) * (x - mu);
    return std::sqrt(s / static_cast<double>(xs.size()));
  };

  PerformanceRecord rec;
  rec.algorithm = results.front().algorithm;
  rec.reso_mean = mean_of(reso);
  rec.reso_std = std_of(reso, rec.reso_mean);
  rec.hv_mean = mean_of(hv);
  rec.hv_std = std_of(hv, rec.hv_mean);
  rec.runs = static_cast<int>(results.size());
  return rec;
}

}  // namespace rmnk
