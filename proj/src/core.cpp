#include "rmnk/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "rmnk/rng.hpp"

namespace rmnk {

namespace {

// Stream ids for instance generation substreams.
constexpr std::uint64_t kStreamLinks = 0x4c494e4bULL;   // per (seed, variable)
constexpr std::uint64_t kStreamTables = 0x5441424cULL;  // per (seed, objective, variable)

// Lower-triangular Cholesky factor of the m x m equicorrelation matrix with
// off-diagonal r. Rows have unit norm, so L*z keeps standard normal margins.
std::vector<std::vector<double>> equicorrelation_cholesky(int m, double r) {
  std::vector<std::vector<double>> c(m, std::vector<double>(m, r));
  for (int i = 0; i < m; ++i) c[i][i] = 1.0;
  std::vector<std::vector<double>> l(m, std::vector<double>(m, 0.0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = c[i][j];
      for (int t = 0; t < j; ++t) s -= l[i][t] * l[j][t];
      if (i == j) {
        if (s <= 0.0) throw std::invalid_argument("correlation matrix not positive definite");
        l[i][i] = std::sqrt(s);
      } else {
        l[i][j] = s / l[j][j];
      }
    }
  }
  return l;
}

}  // namespace

void ProblemSpec::validate() const {
  if (num_objectives < 2) throw std::invalid_argument("m must be at least 2");
  if (num_variables < 1) throw std::invalid_argument("n must be at least 1");
  if (num_variables > 64) throw std::invalid_argument("n above the 64-bit genotype limit");
  if (num_interactions < 0 || num_interactions >= num_variables)
    throw std::invalid_argument("k must satisfy 0 <= k < n");
  if (!(rho > -1.0 / (num_objectives - 1)))
    throw std::invalid_argument("rho must exceed -1/(m-1)");
}

Genotype Genotype::from_string(std::string_view s) {
  if (s.size() > 64) throw std::invalid_argument("genotype longer than 64 bits");
  Genotype g(0, static_cast<int>(s.size()));
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] == '1')
      g.bits |= 1ULL << j;
    else if (s[j] != '0')
      throw std::invalid_argument("genotype string must be 0/1");
  }
  return g;
}

std::string Genotype::to_string() const {
  std::string s(static_cast<std::size_t>(length), '0');
  for (int j = 0; j < length; ++j)
    if (bit(j)) s[static_cast<std::size_t>(j)] = '1';
  return s;
}

void RhoMnkInstance::evaluate_into(std::uint64_t bits, double* out) const {
  const int m = spec.num_objectives;
  const int n = spec.num_variables;
  for (int i = 0; i < m; ++i) out[i] = 0.0;
  for (int j = 0; j < n; ++j) {
    const std::uint32_t idx = pattern(bits, j);
    for (int i = 0; i < m; ++i) out[i] += tables[i][j][idx];
  }
  const double inv_n = 1.0 / n;
  for (int i = 0; i < m; ++i) out[i] *= inv_n;
}

RhoMnkInstance generate_instance(const ProblemSpec& spec) {
  spec.validate();
  const int m = spec.num_objectives;
  const int n = spec.num_variables;
  const int k = spec.num_interactions;

  // Gaussian copula: normal-scale correlation calibrated so the uniform-scale
  // Pearson correlation equals rho. Feasibility of the equicorrelation matrix
  // requires r > -1/(m-1), slightly tighter than the rho bound for m >= 3;
  // clamp to the boundary in that narrow band.
  double r = 2.0 * std::sin(std::numbers::pi * spec.rho / 6.0);
  const double r_floor = -1.0 / (m - 1) + 1e-9;
  r = std::max(r, r_floor);
  const auto chol = equicorrelation_cholesky(m, r);

  RhoMnkInstance inst;
  inst.spec = spec;
  inst.links.resize(n);
  inst.tables.assign(m, std::vector<std::vector<double>>(
                            n, std::vector<double>(std::size_t(1) << (k + 1))));

  // Links: k distinct co-variables per variable, uniform without replacement.
  std::vector<int> candidates(static_cast<std::size_t>(n) - 1);
  for (int j = 0; j < n; ++j) {
    int w = 0;
    for (int v = 0; v < n; ++v)
      if (v != j) candidates[static_cast<std::size_t>(w++)] = v;
    auto rng = SubstreamRng::of(spec.instance_seed, {kStreamLinks, static_cast<std::uint64_t>(j)});
    auto& lj = inst.links[j];
    lj.resize(k);
    for (int t = 0; t < k; ++t) {
      const auto pick = static_cast<std::size_t>(t) +
                        static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(n - 1 - t)));
      std::swap(candidates[static_cast<std::size_t>(t)], candidates[pick]);
      lj[t] = candidates[static_cast<std::size_t>(t)];
    }
    std::sort(lj.begin(), lj.end());
  }

  // Tables: per cell, an m-vector of iid normals (one substream per
  // objective/variable) mixed by the Cholesky factor and mapped through the
  // normal CDF to correlated uniform marginals.
  const std::size_t tlen = std::size_t(1) << (k + 1);
  std::vector<SubstreamRng> obj_rng(m);
  std::vector<double> z(m), y(m);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i)
      obj_rng[i] = SubstreamRng::of(
          spec.instance_seed,
          {kStreamTables, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j)});
    for (std::size_t c = 0; c < tlen; ++c) {
      for (int i = 0; i < m; ++i) z[i] = obj_rng[i].next_normal();
      for (int i = 0; i < m; ++i) {
        double s = 0.0;
        for (int t = 0; t <= i; ++t) s += chol[i][t] * z[t];
        y[i] = s;
      }
      for (int i = 0; i < m; ++i) inst.tables[i][j][c] = normal_cdf(y[i]);
    }
  }
  return inst;
}

ObjectiveVector evaluate(const RhoMnkInstance& instance, const Genotype& x) {
  if (x.length != instance.spec.num_variables)
    throw std::invalid_argument("genotype length does not match instance");
  ObjectiveVector out(static_cast<std::size_t>(instance.spec.num_objectives));
  instance.evaluate_into(x.bits, out.data());
  return out;
}

std::vector<Genotype> hamming_neighbors(const Genotype& x) {
  std::vector<Genotype> out;
  out.reserve(static_cast<std::size_t>(x.length));
  for (int j = 0; j < x.length; ++j) out.push_back(x.flipped(j));
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void save_instance(const RhoMnkInstance& inst, const std::string& path) {
  std::ostringstream os;
  os << "{\n  \"spec\": {\"rho\": " << format_double(inst.spec.rho)
     << ", \"m\": " << inst.spec.num_objectives << ", \"n\": " << inst.spec.num_variables
     << ", \"k\": " << inst.spec.num_interactions << ", \"seed\": " << inst.spec.instance_seed
     << "},\n  \"links\": [";
  for (std::size_t j = 0; j < inst.links.size(); ++j) {
    if (j) os << ", ";
    os << "[";
    for (std::size_t t = 0; t < inst.links[j].size(); ++t) {
      if (t) os << ", ";
      os << inst.links[j][t];
    }
    os << "]";
  }
  os << "],\n  \"tables\": [";
  for (std::size_t i = 0; i < inst.tables.size(); ++i) {
    if (i) os << ",";
    os << "\n    [";
    for (std::size_t j = 0; j < inst.tables[i].size(); ++j) {
      if (j) os << ", ";
      os << "[";
      for (std::size_t c = 0; c < inst.tables[i][j].size(); ++c) {
        if (c) os << ", ";
        os << format_double(inst.tables[i][j][c]);
      }
      os << "]";
    }
    os << "]";
  }
  os << "\n  ]\n}\n";

  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << os.str();
}

RhoMnkInstance load_instance(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  nlohmann::json doc = nlohmann::json::parse(f);

  RhoMnkInstance inst;
  const auto& s = doc.at("spec");
  inst.spec.rho = s.at("rho").get<double>();
  inst.spec.num_objectives = s.at("m").get<int>();
  inst.spec.num_variables = s.at("n").get<int>();
  inst.spec.num_interactions = s.at("k").get<int>();
  inst.spec.instance_seed = s.at("seed").get<std::uint64_t>();
  inst.spec.validate();

  inst.links = doc.at("links").get<std::vector<std::vector<int>>>();
  inst.tables = doc.at("tables").get<std::vector<std::vector<std::vector<double>>>>();

  const auto n = static_cast<std::size_t>(inst.spec.num_variables);
  const auto m = static_cast<std::size_t>(inst.spec.num_objectives);
  const std::size_t tlen = std::size_t(1) << (inst.spec.num_interactions + 1);
  if (inst.links.size() != n || inst.tables.size() != m)
    throw std::runtime_error("instance file shape mismatch: " + path);
  for (const auto& obj : inst.tables) {
    if (obj.size() != n) throw std::runtime_error("instance file shape mismatch: " + path);
    for (const auto& tbl : obj)
      if (tbl.size() != tlen) throw std::runtime_error("instance file shape mismatch: " + path);
  }
  return inst;
}

}  // namespace rmnk
