#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rmnk/core.hpp"
#include "rmnk/landscape.hpp"

namespace rmnk {

// Undirected graph over the Pareto local optimal solutions: one node per
// PLOS, one edge per PLOS pair at Hamming distance 1.
struct PlosNet {
  std::vector<std::uint64_t> nodes;           // PLOS genotypes, ascending
  std::vector<std::pair<int, int>> edges;     // node indices, first < second
};

struct CNode {
  std::vector<int> members;  // PlosNet node indices, ascending
  int pareto_count = 0;      // members with rank 0
  int node_rank = 0;         // minimum member rank
  int size() const { return static_cast<int>(members.size()); }
};

struct CEdge {
  int from = 0;
  int to = 0;
  double weight = 0.0;
};

// Compression of the PlosNet: cnodes are its connected components, cedges
// accumulate distance-2 escapes (u, v) between distinct components where v
// is not dominated by u.
struct CPlosNet {
  std::vector<CNode> cnodes;
  std::vector<CEdge> cedges;  // sorted by (from, to)
};

PlosNet build_plos_net(const EnumeratedLandscape& landscape);
CPlosNet compress(const PlosNet& net, const EnumeratedLandscape& landscape);

inline constexpr int kFeatureCount = 18;

// Fixed catalog order; features.csv emits these columns after
// instance_id, rho, m, n, k.
extern const std::array<std::string_view, kFeatureCount> kFeatureCatalog;

struct FeatureVector {
  std::array<double, kFeatureCount> values{};

  double at(std::string_view feature_id) const;  // throws on unknown id
};

// The normative catalog. Strength of a cnode is its incoming cedge weight
// sum; a sink has no outgoing cedges; hop distances run on the undirected
// view of the cedges. Degenerate cases map to finite values: unreachable
// Pareto distance -> n, correlations with a constant side -> 0, means over
// empty sets -> 0. Degree assortativity counts each edge in both
// orientations (the symmetric convention).
FeatureVector compute_features(const PlosNet& net, const CPlosNet& cnet,
                               const EnumeratedLandscape& landscape);

struct FeatureRow {
  std::string instance_id;
  ProblemSpec spec;
  FeatureVector features;
};

// One row per instance in the given order, float cells via format_double.
void write_feature_table(const std::vector<FeatureRow>& rows, const std::string& path);

}  // namespace rmnk
