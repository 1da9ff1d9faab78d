#include "rmnk/landscape.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace rmnk {

bool dominates(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("objective dimension mismatch");
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
    if (a[i] > b[i]) strict = true;
  }
  return strict;
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  return dominates(std::span<const double>(a), std::span<const double>(b));
}

namespace {

struct FlatView {
  const double* data;
  int m;
  const double* row(int idx) const { return data + static_cast<std::size_t>(idx) * m; }
};

bool row_dominates(const double* a, const double* b, int m) {
  bool strict = false;
  for (int i = 0; i < m; ++i) {
    if (a[i] < b[i]) return false;
    if (a[i] > b[i]) strict = true;
  }
  return strict;
}

int compare_rows_desc(const double* a, const double* b, int m) {
  for (int i = 0; i < m; ++i) {
    if (a[i] > b[i]) return -1;
    if (a[i] < b[i]) return 1;
  }
  return 0;
}

// Two objectives: after deduplication and a lexicographic descending sort, a
// previously seen vector dominates the current one iff its f2 is >= ours.
// best[r] tracks the largest f2 in front r so far and stays non-increasing in
// r, so the target front is found by binary search.
void sort_ranks_2d(const FlatView& v, const std::vector<int>& order,
                   std::vector<int>& rank) {
  std::vector<double> best;
  const double* prev = nullptr;
  int prev_rank = 0;
  for (int idx : order) {
    const double* p = v.row(idx);
    if (prev && compare_rows_desc(prev, p, 2) == 0) {
      rank[static_cast<std::size_t>(idx)] = prev_rank;
      continue;
    }
    auto it = std::partition_point(best.begin(), best.end(),
                                   [&](double f2) { return f2 >= p[1]; });
    const auto r = static_cast<int>(it - best.begin());
    if (it == best.end())
      best.push_back(p[1]);
    else
      *it = p[1];
    rank[static_cast<std::size_t>(idx)] = r;
    prev = p;
    prev_rank = r;
  }
}

// General case: efficient non-dominated sort with binary search over fronts.
// Points arrive in lexicographic descending order, so only already-placed
// points can dominate the current one, and front membership is monotone.
void sort_ranks_general(const FlatView& v, const std::vector<int>& order,
                        std::vector<int>& rank) {
  std::vector<std::vector<int>> fronts;
  const double* prev = nullptr;
  int prev_rank = 0;
  auto front_has_dominator = [&](const std::vector<int>& front, const double* p) {
    for (auto it = front.rbegin(); it != front.rend(); ++it)
      if (row_dominates(v.row(*it), p, v.m)) return true;
    return false;
  };
  for (int idx : order) {
    const double* p = v.row(idx);
    if (prev && compare_rows_desc(prev, p, v.m) == 0) {
      rank[static_cast<std::size_t>(idx)] = prev_rank;
      fronts[static_cast<std::size_t>(prev_rank)].push_back(idx);
      continue;
    }
    std::size_t lo = 0, hi = fronts.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (front_has_dominator(fronts[mid], p))
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo == fronts.size()) fronts.emplace_back();
    fronts[lo].push_back(idx);
    rank[static_cast<std::size_t>(idx)] = static_cast<int>(lo);
    prev = p;
    prev_rank = static_cast<int>(lo);
  }
}

std::vector<int> ranks_of_rows(const double* data, std::size_t count, int m) {
  FlatView view{data, m};
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int c = compare_rows_desc(view.row(a), view.row(b), m);
    if (c != 0) return c < 0;
    return a < b;
  });
  std::vector<int> rank(count, 0);
  if (m == 2)
    sort_ranks_2d(view, order, rank);
  else
    sort_ranks_general(view, order, rank);
  return rank;
}

}  // namespace

std::vector<int> nondominated_sort(const std::vector<ObjectiveVector>& points) {
  if (points.empty()) throw std::invalid_argument("nondominated_sort on empty set");
  const auto m = points[0].size();
  for (const auto& p : points)
    if (p.size() != m) throw std::invalid_argument("objective dimension mismatch");
  std::vector<double> flat;
  flat.reserve(points.size() * m);
  for (const auto& p : points) flat.insert(flat.end(), p.begin(), p.end());
  return ranks_of_rows(flat.data(), points.size(), static_cast<int>(m));
}

std::vector<int> nondominated_sort_flat(const std::vector<double>& rows, int m) {
  if (rows.empty() || m <= 0 || rows.size() % static_cast<std::size_t>(m) != 0)
    throw std::invalid_argument("bad flat objective matrix");
  return ranks_of_rows(rows.data(), rows.size() / static_cast<std::size_t>(m), m);
}

EnumeratedLandscape enumerate_landscape(const RhoMnkInstance& instance) {
  const int n = instance.spec.num_variables;
  const int m = instance.spec.num_objectives;
  if (n > kEnumerationLimit)
    throw std::invalid_argument("enumeration limited to n <= 24");

  EnumeratedLandscape ls;
  ls.num_variables = n;
  ls.num_objectives = m;
  const std::size_t count = std::size_t(1) << n;
  ls.objectives.resize(count * static_cast<std::size_t>(m));
  for (std::uint64_t s = 0; s < count; ++s)
    instance.evaluate_into(s, ls.objectives.data() + s * static_cast<std::size_t>(m));

  ls.rank = nondominated_sort_flat(ls.objectives, m);

  ls.is_pareto.resize(count);
  ls.is_plos.resize(count);
  for (std::size_t s = 0; s < count; ++s) ls.is_pareto[s] = ls.rank[s] == 0 ? 1 : 0;

  for (std::uint64_t s = 0; s < count; ++s) {
    const double* fs = ls.objectives.data() + s * static_cast<std::size_t>(m);
    bool plos = true;
    for (int j = 0; j < n && plos; ++j) {
      const std::uint64_t t = s ^ (1ULL << j);
      if (row_dominates(ls.objectives.data() + t * static_cast<std::size_t>(m), fs, m))
        plos = false;
    }
    ls.is_plos[s] = plos ? 1 : 0;
  }
  return ls;
}

std::vector<Genotype> pareto_set(const EnumeratedLandscape& ls) {
  std::vector<Genotype> out;
  for (std::uint64_t s = 0; s < ls.size(); ++s)
    if (ls.is_pareto[s]) out.emplace_back(s, ls.num_variables);
  return out;
}

std::vector<ObjectiveVector> pareto_front(const EnumeratedLandscape& ls) {
  std::vector<ObjectiveVector> front;
  for (std::uint64_t s = 0; s < ls.size(); ++s) {
    if (!ls.is_pareto[s]) continue;
    auto r = ls.row(s);
    front.emplace_back(r.begin(), r.end());
  }
  std::sort(front.begin(), front.end());
  front.erase(std::unique(front.begin(), front.end()), front.end());
  return front;
}

void write_landscape_csv(const EnumeratedLandscape& ls, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << "genotype_int";
  for (int i = 1; i <= ls.num_objectives; ++i) f << ",f_" << i;
  f << ",rank,is_pareto,is_plos\n";
  for (std::uint64_t s = 0; s < ls.size(); ++s) {
    f << s;
    for (double v : ls.row(s)) f << ',' << format_double(v);
    f << ',' << ls.rank[s] << ',' << int(ls.is_pareto[s]) << ',' << int(ls.is_plos[s]) << '\n';
  }
}

}  // namespace rmnk
