#include "rmnk/meta/dataset.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "rmnk/csv.hpp"
#include "rmnk/rng.hpp"

namespace rmnk::meta {
namespace {

constexpr std::uint64_t kStreamSplit = 0x53504c49ULL;

std::string short_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

struct ComboLess {
  bool operator()(const Combo& a, const Combo& b) const {
    if (a.rho != b.rho) return a.rho < b.rho;
    if (a.m != b.m) return a.m < b.m;
    return a.k < b.k;
  }
};

}  // namespace

std::string combo_label(const Combo& combo) {
  return "r" + short_real(combo.rho) + "_m" + std::to_string(combo.m) + "_k" +
         std::to_string(combo.k);
}

Dataset build_dataset(const std::string& features_csv_path,
                      const std::string& performance_csv_path,
                      const std::string& metric, std::uint64_t master_seed) {
  if (metric != "reso" && metric != "hv") {
    throw std::invalid_argument("metric must be reso or hv");
  }
  const CsvTable features = read_csv(features_csv_path);
  const CsvTable performance = read_csv(performance_csv_path);

  const int id_col = features.column("instance_id");
  const int rho_col = features.column("rho");
  const int m_col = features.column("m");
  const int k_col = features.column("k");
  const int first_feature = features.column("k") + 1;

  Dataset ds;
  for (std::size_t c = static_cast<std::size_t>(first_feature); c < features.header.size(); ++c) {
    ds.feature_names.push_back(features.header[c]);
  }

  // Target lookup: (instance_id, algorithm) -> metric mean.
  const int p_id = performance.column("instance_id");
  const int p_alg = performance.column("algorithm");
  const int p_val = performance.column(metric == "reso" ? "reso_mean" : "hv_mean");
  std::map<std::pair<std::string, std::string>, double> target;
  for (const auto& row : performance.rows) {
    target[{row[static_cast<std::size_t>(p_id)], row[static_cast<std::size_t>(p_alg)]}] =
        std::stod(row[static_cast<std::size_t>(p_val)]);
  }

  for (const auto& row : features.rows) {
    ds.ids.push_back(row[static_cast<std::size_t>(id_col)]);
    ds.combos.push_back({std::stod(row[static_cast<std::size_t>(rho_col)]),
                         std::stoi(row[static_cast<std::size_t>(m_col)]),
                         std::stoi(row[static_cast<std::size_t>(k_col)])});
    std::vector<double> xs;
    xs.reserve(ds.feature_names.size());
    for (std::size_t c = static_cast<std::size_t>(first_feature); c < row.size(); ++c) {
      xs.push_back(std::stod(row[c]));
    }
    ds.x.push_back(std::move(xs));
    std::array<double, 3> ys{};
    for (std::size_t t = 0; t < kTargetAlgorithms.size(); ++t) {
      const auto it = target.find({ds.ids.back(), algorithm_name(kTargetAlgorithms[t])});
      if (it == target.end()) {
        throw std::runtime_error("missing performance row for " + ds.ids.back());
      }
      ys[t] = it->second;
    }
    ds.y.push_back(ys);
  }

  // Per-combo split: one random test row, distinct folds for the rest.
  std::map<Combo, std::vector<std::size_t>, ComboLess> groups;
  for (std::size_t i = 0; i < ds.size(); ++i) groups[ds.combos[i]].push_back(i);
  if (groups.empty()) throw std::runtime_error("empty feature table");
  const std::size_t per_combo = groups.begin()->second.size();
  if (per_combo < 2) throw std::runtime_error("need at least 2 instances per combo");
  for (const auto& [combo, members] : groups) {
    if (members.size() != per_combo) {
      throw std::runtime_error("uneven combo coverage: " + combo_label(combo));
    }
  }
  ds.num_folds = static_cast<int>(per_combo) - 1;
  ds.is_test.assign(ds.size(), 0);
  ds.fold.assign(ds.size(), -1);

  std::uint64_t combo_index = 0;
  for (const auto& [combo, members] : groups) {
    SubstreamRng rng = SubstreamRng::of(master_seed, {kStreamSplit, combo_index++});
    std::vector<std::size_t> rows = members;  // ascending row order
    const std::size_t test_pick = rng.next_below(rows.size());
    ds.is_test[rows[test_pick]] = 1;
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(test_pick));
    for (std::size_t i = rows.size(); i > 1; --i) {  // Fisher-Yates
      const std::size_t j = rng.next_below(i);
      std::swap(rows[i - 1], rows[j]);
    }
    for (std::size_t f = 0; f < rows.size(); ++f) ds.fold[rows[f]] = static_cast<int>(f);
  }

  // Min-max scaling fitted on train rows only.
  const std::size_t q = ds.feature_names.size();
  ds.scale_min.assign(q, 0.0);
  ds.scale_max.assign(q, 0.0);
  bool first_train = true;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds.is_test[i]) continue;
    for (std::size_t c = 0; c < q; ++c) {
      if (first_train || ds.x[i][c] < ds.scale_min[c]) ds.scale_min[c] = ds.x[i][c];
      if (first_train || ds.x[i][c] > ds.scale_max[c]) ds.scale_max[c] = ds.x[i][c];
    }
    first_train = false;
  }
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t c = 0; c < q; ++c) {
      const double range = ds.scale_max[c] - ds.scale_min[c];
      ds.x[i][c] = range > 0.0 ? (ds.x[i][c] - ds.scale_min[c]) / range : 0.0;
    }
  }
  return ds;
}

}  // namespace rmnk::meta
