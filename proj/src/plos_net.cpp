#include "rmnk/plos_net.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <fstream>
#include <map>
#include <stdexcept>

namespace rmnk {

const std::array<std::string_view, kFeatureCount> kFeatureCatalog = {
    "pos_num",        "pos_strength",   "node_pareto_n",  "plos_num",
    "cnode_num",      "cc_n",           "cc_avg",         "edge_cmpr",
    "edge_weight_avg", "sink_num",      "sink_strength",  "dist_pareto_avg",
    "dist_max",       "path_length_avg", "path_pareto_avg", "rank_strength_cor",
    "rdc",            "assort_degree",
};

double FeatureVector::at(std::string_view feature_id) const {
  for (int i = 0; i < kFeatureCount; ++i) {
    if (kFeatureCatalog[static_cast<std::size_t>(i)] == feature_id) {
      return values[static_cast<std::size_t>(i)];
    }
  }
  throw std::invalid_argument("unknown feature id: " + std::string(feature_id));
}

PlosNet build_plos_net(const EnumeratedLandscape& landscape) {
  const int n = landscape.num_variables;
  PlosNet net;
  std::vector<std::int32_t> node_of(landscape.size(), -1);
  for (std::uint64_t s = 0; s < landscape.size(); ++s) {
    if (landscape.is_plos[s]) {
      node_of[s] = static_cast<std::int32_t>(net.nodes.size());
      net.nodes.push_back(s);
    }
  }
  for (std::size_t u = 0; u < net.nodes.size(); ++u) {
    const std::uint64_t bits = net.nodes[u];
    for (int j = 0; j < n; ++j) {
      const std::uint64_t nb = bits ^ (std::uint64_t{1} << j);
      if (nb > bits && node_of[nb] >= 0) {
        net.edges.emplace_back(static_cast<int>(u), node_of[nb]);
      }
    }
  }
  std::sort(net.edges.begin(), net.edges.end());
  return net;
}

CPlosNet compress(const PlosNet& net, const EnumeratedLandscape& landscape) {
  const int n = landscape.num_variables;
  const std::size_t count = net.nodes.size();
  CPlosNet out;
  if (count == 0) return out;

  std::vector<std::vector<int>> adj(count);
  for (const auto& [a, b] : net.edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }

  // Components labeled in order of their smallest member (nodes ascend).
  std::vector<int> comp(count, -1);
  int num_comps = 0;
  std::deque<int> queue;
  for (std::size_t start = 0; start < count; ++start) {
    if (comp[start] >= 0) continue;
    const int label = num_comps++;
    comp[start] = label;
    queue.push_back(static_cast<int>(start));
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (comp[static_cast<std::size_t>(v)] < 0) {
          comp[static_cast<std::size_t>(v)] = label;
          queue.push_back(v);
        }
      }
    }
  }

  out.cnodes.resize(static_cast<std::size_t>(num_comps));
  for (std::size_t u = 0; u < count; ++u) {
    CNode& c = out.cnodes[static_cast<std::size_t>(comp[u])];
    const int rank = landscape.rank[net.nodes[u]];
    if (c.members.empty() || rank < c.node_rank) c.node_rank = rank;
    if (rank == 0) ++c.pareto_count;
    c.members.push_back(static_cast<int>(u));
  }

  std::vector<std::int32_t> node_of(landscape.size(), -1);
  for (std::size_t u = 0; u < count; ++u) node_of[net.nodes[u]] = static_cast<std::int32_t>(u);

  std::map<std::pair<int, int>, double> weights;
  for (std::size_t u = 0; u < count; ++u) {
    const std::uint64_t bits = net.nodes[u];
    const auto fu = landscape.row(bits);
    for (int j = 0; j < n; ++j) {
      for (int l = j + 1; l < n; ++l) {
        const std::uint64_t nb = bits ^ (std::uint64_t{1} << j) ^ (std::uint64_t{1} << l);
        const std::int32_t v = node_of[nb];
        if (v < 0) continue;
        const int cu = comp[u];
        const int cv = comp[static_cast<std::size_t>(v)];
        if (cu == cv) continue;
        if (dominates(fu, landscape.row(nb))) continue;  // v dominated by u: not an escape
        weights[{cu, cv}] += 1.0;
      }
    }
  }
  out.cedges.reserve(weights.size());
  for (const auto& [key, w] : weights) out.cedges.push_back({key.first, key.second, w});
  return out;
}

namespace {

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t count = x.size();
  if (count < 2) return 0.0;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(count);
  my /= static_cast<double>(count);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx <= 0.0 || syy <= 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

// Hop distances to the nearest Pareto cnode on the undirected cedge view;
// unreachable maps to the diameter bound n.
std::vector<double> pareto_distances(const CPlosNet& cnet, int n) {
  const std::size_t count = cnet.cnodes.size();
  std::vector<std::vector<int>> adj(count);
  for (const CEdge& e : cnet.cedges) {
    adj[static_cast<std::size_t>(e.from)].push_back(e.to);
    adj[static_cast<std::size_t>(e.to)].push_back(e.from);
  }
  std::vector<int> hop(count, -1);
  std::deque<int> queue;
  for (std::size_t c = 0; c < count; ++c) {
    if (cnet.cnodes[c].pareto_count > 0) {
      hop[c] = 0;
      queue.push_back(static_cast<int>(c));
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (hop[static_cast<std::size_t>(v)] < 0) {
        hop[static_cast<std::size_t>(v)] = hop[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  }
  std::vector<double> dist(count);
  for (std::size_t c = 0; c < count; ++c) {
    dist[c] = hop[c] < 0 ? static_cast<double>(n) : static_cast<double>(hop[c]);
  }
  return dist;
}

}  // namespace

FeatureVector compute_features(const PlosNet& net, const CPlosNet& cnet,
                               const EnumeratedLandscape& landscape) {
  const int n = landscape.num_variables;
  const std::size_t num_cnodes = cnet.cnodes.size();

  std::vector<double> strength(num_cnodes, 0.0);
  std::vector<int> out_degree(num_cnodes, 0);
  double weight_sum = 0.0;
  for (const CEdge& e : cnet.cedges) {
    strength[static_cast<std::size_t>(e.to)] += e.weight;
    ++out_degree[static_cast<std::size_t>(e.from)];
    weight_sum += e.weight;
  }

  double pos_num = 0.0, plos_num = 0.0;
  for (std::uint64_t s = 0; s < landscape.size(); ++s) {
    pos_num += landscape.is_pareto[s] ? 1.0 : 0.0;
    plos_num += landscape.is_plos[s] ? 1.0 : 0.0;
  }

  double pos_strength = 0.0, node_pareto_n = 0.0;
  double sink_num = 0.0, sink_strength = 0.0;
  for (std::size_t c = 0; c < num_cnodes; ++c) {
    if (cnet.cnodes[c].pareto_count > 0) {
      node_pareto_n += 1.0;
      pos_strength += strength[c];
    }
    if (out_degree[c] == 0) {
      sink_num += 1.0;
      sink_strength += strength[c];
    }
  }

  const std::vector<double> d2p = pareto_distances(cnet, n);
  double dist_sum = 0.0, dist_max = 0.0;
  double path_pareto_sum = 0.0;
  std::size_t non_pareto = 0;
  std::vector<double> ranks(num_cnodes);
  for (std::size_t c = 0; c < num_cnodes; ++c) {
    dist_sum += d2p[c];
    dist_max = std::max(dist_max, d2p[c]);
    ranks[c] = static_cast<double>(cnet.cnodes[c].node_rank);
    if (cnet.cnodes[c].pareto_count == 0) {
      ++non_pareto;
      path_pareto_sum += d2p[c];
    }
  }

  // Mean finite pairwise hop distance between cnodes, unordered pairs.
  double path_length_avg = 0.0;
  if (num_cnodes >= 2) {
    std::vector<std::vector<int>> adj(num_cnodes);
    for (const CEdge& e : cnet.cedges) {
      adj[static_cast<std::size_t>(e.from)].push_back(e.to);
      adj[static_cast<std::size_t>(e.to)].push_back(e.from);
    }
    double total = 0.0;
    std::size_t pairs = 0;
    std::vector<int> hop(num_cnodes);
    std::deque<int> queue;
    for (std::size_t src = 0; src < num_cnodes; ++src) {
      std::fill(hop.begin(), hop.end(), -1);
      hop[src] = 0;
      queue.push_back(static_cast<int>(src));
      while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : adj[static_cast<std::size_t>(u)]) {
          if (hop[static_cast<std::size_t>(v)] < 0) {
            hop[static_cast<std::size_t>(v)] = hop[static_cast<std::size_t>(u)] + 1;
            queue.push_back(v);
          }
        }
      }
      for (std::size_t dst = src + 1; dst < num_cnodes; ++dst) {
        if (hop[dst] > 0) {
          total += static_cast<double>(hop[dst]);
          ++pairs;
        }
      }
    }
    if (pairs > 0) path_length_avg = total / static_cast<double>(pairs);
  }

  // Endpoint-degree correlation with both orientations of every edge.
  double assort = 0.0;
  if (!net.edges.empty()) {
    std::vector<double> deg(net.nodes.size(), 0.0);
    for (const auto& [a, b] : net.edges) {
      deg[static_cast<std::size_t>(a)] += 1.0;
      deg[static_cast<std::size_t>(b)] += 1.0;
    }
    std::vector<double> xs, ys;
    xs.reserve(net.edges.size() * 2);
    ys.reserve(net.edges.size() * 2);
    for (const auto& [a, b] : net.edges) {
      xs.push_back(deg[static_cast<std::size_t>(a)]);
      ys.push_back(deg[static_cast<std::size_t>(b)]);
      xs.push_back(deg[static_cast<std::size_t>(b)]);
      ys.push_back(deg[static_cast<std::size_t>(a)]);
    }
    assort = pearson(xs, ys);
  }

  FeatureVector fv;
  auto set = [&fv](int idx, double v) { fv.values[static_cast<std::size_t>(idx)] = v; };
  set(0, pos_num);
  set(1, pos_strength);
  set(2, node_pareto_n);
  set(3, plos_num);
  set(4, static_cast<double>(num_cnodes));
  set(5, static_cast<double>(num_cnodes));  // cc_n: PlosNet components = cnodes
  set(6, num_cnodes > 0 ? plos_num / static_cast<double>(num_cnodes) : 0.0);
  set(7, static_cast<double>(cnet.cedges.size()) /
             std::max<double>(1.0, static_cast<double>(net.edges.size())));
  set(8, cnet.cedges.empty() ? 0.0 : weight_sum / static_cast<double>(cnet.cedges.size()));
  set(9, sink_num);
  set(10, sink_strength);
  set(11, num_cnodes > 0 ? dist_sum / static_cast<double>(num_cnodes) : 0.0);
  set(12, dist_max);
  set(13, path_length_avg);
  set(14, non_pareto > 0 ? path_pareto_sum / static_cast<double>(non_pareto) : 0.0);
  set(15, pearson(ranks, strength));
  set(16, pearson(ranks, d2p));
  set(17, assort);
  return fv;
}

void write_feature_table(const std::vector<FeatureRow>& rows, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "instance_id,rho,m,n,k";
  for (const auto& id : kFeatureCatalog) out << ',' << id;
  out << '\n';
  for (const FeatureRow& row : rows) {
    out << row.instance_id << ',' << format_double(row.spec.rho) << ','
        << row.spec.num_objectives << ',' << row.spec.num_variables << ','
        << row.spec.num_interactions;
    for (double v : row.features.values) out << ',' << format_double(v);
    out << '\n';
  }
  if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

}  // namespace rmnk
