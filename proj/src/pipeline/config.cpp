#include "rmnk/pipeline/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "rmnk/landscape.hpp"
#include "json.hpp"

namespace rmnk::pipeline {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw ConfigError(what); }

// Accepts either a scalar or an array; duplicates are rejected so the
// instance grid stays well defined.
template <typename T>
std::vector<T> number_list(const json& value, const std::string& key) {
  std::vector<T> out;
  if (value.is_array()) {
    for (const auto& item : value) {
      if (!item.is_number()) fail("config: '" + key + "' must hold numbers");
      out.push_back(item.get<T>());
    }
  } else if (value.is_number()) {
    out.push_back(value.get<T>());
  } else {
    fail("config: '" + key + "' must be a number or array of numbers");
  }
  if (out.empty()) fail("config: '" + key + "' must not be empty");
  std::set<T> seen(out.begin(), out.end());
  if (seen.size() != out.size()) fail("config: '" + key + "' has duplicates");
  return out;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (n < 1 || n > kEnumerationLimit)
    fail("config: n must be in [1, " + std::to_string(kEnumerationLimit) + "]");
  if (ks.empty()) fail("config: k list must not be empty");
  for (int k : ks)
    if (k < 0 || k >= n) fail("config: k must satisfy 0 <= k < n");
  if (ms.empty()) fail("config: m list must not be empty");
  for (int m : ms)
    if (m < 2) fail("config: m must be at least 2");
  if (rhos.empty()) fail("config: rho list must not be empty");
  for (double rho : rhos) {
    if (!std::isfinite(rho) || rho > 1.0)
      fail("config: rho must be a finite value at most 1");
    for (int m : ms) {
      double lower = -1.0 / (m - 1);
      if (rho <= lower) {
        std::ostringstream msg;
        msg << "config: rho=" << rho << " infeasible for m=" << m
            << " (needs rho > " << lower << ")";
        fail(msg.str());
      }
    }
  }
  if (instances_per_combo < 1) fail("config: instances_per_combo must be >= 1");
  if (runs_per_algorithm < 1) fail("config: runs must be >= 1");
  if (budget < 1) fail("config: budget must be >= 1");
  if (population < 2 || population % 2 != 0)
    fail("config: population must be even and >= 2");
  if (metric != "reso" && metric != "hv")
    fail("config: metric must be 'reso' or 'hv'");
  if (output_dir.empty()) fail("config: output_dir must not be empty");
  if (workers < 0) fail("config: workers must be >= 0");
  if (forest.n_trees < 1) fail("config: forest.trees must be >= 1");
  if (forest.max_depth < 0) fail("config: forest.max_depth must be >= 0");
  if (forest.min_split < 2) fail("config: forest.min_split must be >= 2");
  if (forest.min_leaf < 1) fail("config: forest.min_leaf must be >= 1");
  if (forest.max_features < 0) fail("config: forest.max_features must be >= 0");
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("config: cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    fail("config: parse error in '" + path + "': " + e.what());
  }
  if (!doc.is_object()) fail("config: top-level document must be an object");

  ExperimentConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    try {
      if (key == "n") {
        cfg.n = value.get<int>();
      } else if (key == "k") {
        cfg.ks = number_list<int>(value, key);
      } else if (key == "m") {
        cfg.ms = number_list<int>(value, key);
      } else if (key == "rho") {
        cfg.rhos = number_list<double>(value, key);
      } else if (key == "instances_per_combo") {
        cfg.instances_per_combo = value.get<int>();
      } else if (key == "runs") {
        cfg.runs_per_algorithm = value.get<int>();
      } else if (key == "budget") {
        cfg.budget = value.get<long long>();
      } else if (key == "population") {
        cfg.population = value.get<int>();
      } else if (key == "metric") {
        cfg.metric = value.get<std::string>();
      } else if (key == "seed") {
        cfg.master_seed = value.get<std::uint64_t>();
      } else if (key == "output_dir") {
        cfg.output_dir = value.get<std::string>();
      } else if (key == "workers") {
        cfg.workers = value.get<int>();
      } else if (key == "feature_selection") {
        cfg.feature_selection = value.get<bool>();
      } else if (key == "explain_all_rows") {
        cfg.explain_all_rows = value.get<bool>();
      } else if (key == "forest") {
        if (!value.is_object()) fail("config: 'forest' must be an object");
        for (const auto& [fkey, fvalue] : value.items()) {
          if (fkey == "trees") {
            cfg.forest.n_trees = fvalue.get<int>();
          } else if (fkey == "max_depth") {
            cfg.forest.max_depth = fvalue.get<int>();
          } else if (fkey == "min_split") {
            cfg.forest.min_split = fvalue.get<int>();
          } else if (fkey == "min_leaf") {
            cfg.forest.min_leaf = fvalue.get<int>();
          } else if (fkey == "max_features") {
            cfg.forest.max_features = fvalue.get<int>();
          } else if (fkey == "bootstrap") {
            cfg.forest.bootstrap = fvalue.get<bool>();
          } else {
            fail("config: unknown key 'forest." + fkey + "'");
          }
        }
      } else {
        fail("config: unknown key '" + key + "'");
      }
    } catch (const json::exception& e) {
      fail("config: bad value for '" + key + "': " + e.what());
    }
  }
  return cfg;
}

}  // namespace rmnk::pipeline
