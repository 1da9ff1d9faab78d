#include "rmnk/moea.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>

#include "rmnk/landscape.hpp"

namespace rmnk {
namespace {

constexpr std::uint64_t kStreamMoea = 0x6d6f6561ULL;

std::uint64_t genotype_mask(int n) {
  return n >= 64 ? ~0ULL : (1ULL << n) - 1;
}

std::uint64_t random_bits(SubstreamRng& rng, int n) {
  return rng.next_u64() & genotype_mask(n);
}

void log_eval(RunResult& out, const RunOptions& opts, std::uint64_t bits, int n,
              const double* f, int m) {
  if (!opts.log_evaluations) return;
  out.evaluation_log.push_back({Genotype{bits, n}, ObjectiveVector(f, f + m)});
}

std::vector<ArchiveItem> collect_archive(const ParetoArchive& arch, int n) {
  std::vector<ArchiveItem> items;
  items.reserve(arch.size());
  for (std::size_t i = 0; i < arch.size(); ++i) {
    const double* r = arch.row(i);
    items.push_back({Genotype{arch.bits_at(i), n},
                     ObjectiveVector(r, r + arch.num_objectives())});
  }
  std::sort(items.begin(), items.end(), [](const ArchiveItem& a, const ArchiveItem& b) {
    return a.genotype.bits < b.genotype.bits;
  });
  return items;
}

}  // namespace

bool ParetoArchive::insert(std::uint64_t bits, const double* f,
                           std::vector<std::uint64_t>* removed) {
  if (index_.count(bits) != 0) return false;
  const std::span<const double> cand{f, static_cast<std::size_t>(m_)};
  // Newest entries first: in local search the likely dominators are recent.
  for (std::size_t i = bits_.size(); i-- > 0;) {
    if (dominates({row(i), static_cast<std::size_t>(m_)}, cand)) return false;
  }
  for (std::size_t i = 0; i < bits_.size();) {
    if (dominates(cand, {row(i), static_cast<std::size_t>(m_)})) {
      if (removed != nullptr) removed->push_back(bits_[i]);
      erase_at(i);
    } else {
      ++i;
    }
  }
  index_[bits] = static_cast<std::uint32_t>(bits_.size());
  bits_.push_back(bits);
  obj_.insert(obj_.end(), f, f + m_);
  visited_.push_back(0);
  return true;
}

void ParetoArchive::erase_at(std::size_t i) {
  index_.erase(bits_[i]);
  const std::size_t last = bits_.size() - 1;
  if (i != last) {
    bits_[i] = bits_[last];
    std::copy(row(last), row(last) + m_, obj_.begin() + static_cast<std::ptrdiff_t>(i) * m_);
    visited_[i] = visited_[last];
    index_[bits_[i]] = static_cast<std::uint32_t>(i);
  }
  bits_.pop_back();
  obj_.resize(obj_.size() - static_cast<std::size_t>(m_));
  visited_.pop_back();
}

void ParetoArchive::mark_visited(std::uint64_t bits) {
  auto it = index_.find(bits);
  if (it != index_.end()) visited_[it->second] = 1;
}

EvaluationContext::EvaluationContext(const RhoMnkInstance& instance,
                                     const std::vector<double>* table)
    : instance_(&instance), table_(table) {
  if (table_ != nullptr) {
    const auto rows = std::uint64_t{1} << instance.spec.num_variables;
    if (table_->size() != rows * static_cast<std::uint64_t>(instance.spec.num_objectives)) {
      throw std::invalid_argument("evaluation table shape does not match instance");
    }
  }
}

void EvaluationContext::evaluate(std::uint64_t bits, double* out) const {
  if (table_ != nullptr) {
    const auto m = static_cast<std::size_t>(instance_->spec.num_objectives);
    std::copy_n(table_->data() + bits * m, m, out);
  } else {
    instance_->evaluate_into(bits, out);
  }
}

RunResult run_pls(const EvaluationContext& ctx, std::uint64_t seed, const RunOptions& opts) {
  const int n = ctx.num_variables();
  const int m = ctx.num_objectives();
  RunResult out;
  out.algorithm = Algorithm::kPls;
  out.run_seed = seed;

  SubstreamRng rng = SubstreamRng::of(seed, {kStreamMoea, static_cast<std::uint64_t>(Algorithm::kPls)});
  ParetoArchive arch(m);
  std::vector<double> f(static_cast<std::size_t>(m));
  long long evals = 0;

  const std::uint64_t start = random_bits(rng, n);
  ctx.evaluate(start, f.data());
  ++evals;
  log_eval(out, opts, start, n, f.data(), m);
  arch.insert(start, f.data());

  std::set<std::uint64_t> unvisited{start};
  std::vector<std::uint64_t> removed;
  while (!unvisited.empty()) {
    const std::uint64_t cur = *unvisited.begin();
    unvisited.erase(unvisited.begin());
    for (int j = 0; j < n; ++j) {
      const std::uint64_t nb = cur ^ (std::uint64_t{1} << j);
      ctx.evaluate(nb, f.data());
      ++evals;
      log_eval(out, opts, nb, n, f.data(), m);
      removed.clear();
      if (arch.insert(nb, f.data(), &removed)) unvisited.insert(nb);
      for (std::uint64_t r : removed) unvisited.erase(r);
    }
    arch.mark_visited(cur);
  }

  out.evaluations_used = evals;
  out.archive = collect_archive(arch, n);
  return out;
}

RunResult run_gsemo(const EvaluationContext& ctx, std::uint64_t seed, const RunOptions& opts) {
  if (opts.budget < 1) throw std::invalid_argument("budget must be positive");
  const int n = ctx.num_variables();
  const int m = ctx.num_objectives();
  RunResult out;
  out.algorithm = Algorithm::kGsemo;
  out.run_seed = seed;

  SubstreamRng rng = SubstreamRng::of(seed, {kStreamMoea, static_cast<std::uint64_t>(Algorithm::kGsemo)});
  ParetoArchive arch(m);
  std::vector<double> f(static_cast<std::size_t>(m));
  const double flip_p = 1.0 / n;

  const std::uint64_t start = random_bits(rng, n);
  ctx.evaluate(start, f.data());
  long long evals = 1;
  log_eval(out, opts, start, n, f.data(), m);
  arch.insert(start, f.data());

  while (evals < opts.budget) {
    const std::size_t pick = rng.next_below(arch.size());
    std::uint64_t child = arch.bits_at(pick);
    for (int j = 0; j < n; ++j) {
      if (rng.next_unit() < flip_p) child ^= std::uint64_t{1} << j;
    }
    ctx.evaluate(child, f.data());
    ++evals;
    log_eval(out, opts, child, n, f.data(), m);
    arch.insert(child, f.data());
  }

  out.evaluations_used = evals;
  out.archive = collect_archive(arch, n);
  return out;
}

namespace {

// Deb crowding distance within one front; boundary solutions get +inf.
std::vector<double> crowding_of_front(const std::vector<int>& front,
                                      const std::vector<double>& objs, int m) {
  const std::size_t fn = front.size();
  std::vector<double> crowd(fn, 0.0);
  if (fn <= 2) {
    std::fill(crowd.begin(), crowd.end(), std::numeric_limits<double>::infinity());
    return crowd;
  }
  std::vector<int> order(fn);
  for (int i = 0; i < m; ++i) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const double fa = objs[static_cast<std::size_t>(front[a]) * m + i];
      const double fb = objs[static_cast<std::size_t>(front[b]) * m + i];
      if (fa != fb) return fa < fb;
      return front[a] < front[b];
    });
    const double lo = objs[static_cast<std::size_t>(front[order.front()]) * m + i];
    const double hi = objs[static_cast<std::size_t>(front[order.back()]) * m + i];
    crowd[order.front()] = std::numeric_limits<double>::infinity();
    crowd[order.back()] = std::numeric_limits<double>::infinity();
    if (hi <= lo) continue;
    for (std::size_t p = 1; p + 1 < fn; ++p) {
      const double prev = objs[static_cast<std::size_t>(front[order[p - 1]]) * m + i];
      const double next = objs[static_cast<std::size_t>(front[order[p + 1]]) * m + i];
      crowd[order[p]] += (next - prev) / (hi - lo);
    }
  }
  return crowd;
}

struct RankedPopulation {
  std::vector<int> rank;
  std::vector<double> crowd;
};

RankedPopulation rank_population(const std::vector<double>& objs, std::size_t count, int m) {
  RankedPopulation rp;
  rp.rank = nondominated_sort_flat(objs, m);
  rp.crowd.assign(count, 0.0);
  const int max_rank = *std::max_element(rp.rank.begin(), rp.rank.end());
  std::vector<std::vector<int>> fronts(static_cast<std::size_t>(max_rank) + 1);
  for (std::size_t s = 0; s < count; ++s) fronts[static_cast<std::size_t>(rp.rank[s])].push_back(static_cast<int>(s));
  for (const auto& front : fronts) {
    const std::vector<double> c = crowding_of_front(front, objs, m);
    for (std::size_t p = 0; p < front.size(); ++p) rp.crowd[static_cast<std::size_t>(front[p])] = c[p];
  }
  return rp;
}

int tournament(SubstreamRng& rng, const RankedPopulation& rp, std::size_t count) {
  const int a = static_cast<int>(rng.next_below(count));
  const int b = static_cast<int>(rng.next_below(count));
  if (rp.rank[static_cast<std::size_t>(a)] != rp.rank[static_cast<std::size_t>(b)]) {
    return rp.rank[static_cast<std::size_t>(a)] < rp.rank[static_cast<std::size_t>(b)] ? a : b;
  }
  if (rp.crowd[static_cast<std::size_t>(a)] != rp.crowd[static_cast<std::size_t>(b)]) {
    return rp.crowd[static_cast<std::size_t>(a)] > rp.crowd[static_cast<std::size_t>(b)] ? a : b;
  }
  return a;  // first pick wins exact ties
}

}  // namespace

RunResult run_nsga2(const EvaluationContext& ctx, std::uint64_t seed, const RunOptions& opts) {
  if (opts.budget < 1) throw std::invalid_argument("budget must be positive");
  if (opts.population < 2 || opts.population % 2 != 0) {
    throw std::invalid_argument("population must be even and at least 2");
  }
  const int n = ctx.num_variables();
  const int m = ctx.num_objectives();
  const std::size_t pop = static_cast<std::size_t>(opts.population);
  RunResult out;
  out.algorithm = Algorithm::kNsga2;
  out.run_seed = seed;

  SubstreamRng rng = SubstreamRng::of(seed, {kStreamMoea, static_cast<std::uint64_t>(Algorithm::kNsga2)});
  ParetoArchive arch(m);
  std::vector<double> f(static_cast<std::size_t>(m));
  const double flip_p = 1.0 / n;
  long long evals = 0;

  std::vector<std::uint64_t> parents;
  std::vector<double> parent_objs;
  while (parents.size() < pop && evals < opts.budget) {
    const std::uint64_t x = random_bits(rng, n);
    ctx.evaluate(x, f.data());
    ++evals;
    log_eval(out, opts, x, n, f.data(), m);
    arch.insert(x, f.data());
    parents.push_back(x);
    parent_objs.insert(parent_objs.end(), f.begin(), f.end());
  }

  while (evals < opts.budget && parents.size() == pop) {
    const RankedPopulation rp = rank_population(parent_objs, pop, m);

    std::vector<std::uint64_t> children;
    std::vector<double> child_objs;
    while (children.size() < pop && evals < opts.budget) {
      const std::uint64_t p1 = parents[static_cast<std::size_t>(tournament(rng, rp, pop))];
      const std::uint64_t p2 = parents[static_cast<std::size_t>(tournament(rng, rp, pop))];
      std::uint64_t c1 = p1;
      std::uint64_t c2 = p2;
      if (rng.next_unit() < 0.9) {
        std::uint64_t swap_mask = 0;  // bits taken from the other parent
        for (int j = 0; j < n; ++j) {
          if (rng.next_unit() < 0.5) swap_mask |= std::uint64_t{1} << j;
        }
        c1 = (p1 & ~swap_mask) | (p2 & swap_mask);
        c2 = (p2 & ~swap_mask) | (p1 & swap_mask);
      }
      for (int j = 0; j < n; ++j) {
        if (rng.next_unit() < flip_p) c1 ^= std::uint64_t{1} << j;
      }
      for (int j = 0; j < n; ++j) {
        if (rng.next_unit() < flip_p) c2 ^= std::uint64_t{1} << j;
      }
      for (const std::uint64_t c : {c1, c2}) {
        if (children.size() >= pop || evals >= opts.budget) break;
        ctx.evaluate(c, f.data());
        ++evals;
        log_eval(out, opts, c, n, f.data(), m);
        arch.insert(c, f.data());
        children.push_back(c);
        child_objs.insert(child_objs.end(), f.begin(), f.end());
      }
    }
    if (children.empty()) break;

    // Elitist (mu+lambda) truncation on the combined pool.
    std::vector<std::uint64_t> pool = parents;
    pool.insert(pool.end(), children.begin(), children.end());
    std::vector<double> pool_objs = parent_objs;
    pool_objs.insert(pool_objs.end(), child_objs.begin(), child_objs.end());

    const std::vector<int> pool_rank = nondominated_sort_flat(pool_objs, m);
    const int max_rank = *std::max_element(pool_rank.begin(), pool_rank.end());
    std::vector<std::vector<int>> fronts(static_cast<std::size_t>(max_rank) + 1);
    for (std::size_t s = 0; s < pool.size(); ++s) {
      fronts[static_cast<std::size_t>(pool_rank[s])].push_back(static_cast<int>(s));
    }

    std::vector<std::uint64_t> next;
    std::vector<double> next_objs;
    for (const auto& front : fronts) {
      if (next.size() >= pop) break;
      std::vector<int> take = front;
      if (next.size() + take.size() > pop) {
        const std::vector<double> crowd = crowding_of_front(front, pool_objs, m);
        std::vector<int> order(front.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
          if (crowd[static_cast<std::size_t>(a)] != crowd[static_cast<std::size_t>(b)]) {
            return crowd[static_cast<std::size_t>(a)] > crowd[static_cast<std::size_t>(b)];
          }
          return front[static_cast<std::size_t>(a)] < front[static_cast<std::size_t>(b)];
        });
        take.clear();
        for (int idx : order) {
          if (next.size() + take.size() >= pop) break;
          take.push_back(front[static_cast<std::size_t>(idx)]);
        }
      }
      for (int s : take) {
        next.push_back(pool[static_cast<std::size_t>(s)]);
        next_objs.insert(next_objs.end(),
                         pool_objs.begin() + static_cast<std::ptrdiff_t>(s) * m,
                         pool_objs.begin() + static_cast<std::ptrdiff_t>(s + 1) * m);
      }
    }
    parents = std::move(next);
    parent_objs = std::move(next_objs);
  }

  out.evaluations_used = evals;
  out.archive = collect_archive(arch, n);
  return out;
}

RunResult run_pls(const RhoMnkInstance& instance, std::uint64_t seed) {
  return run_pls(EvaluationContext{instance}, seed);
}

RunResult run_gsemo(const RhoMnkInstance& instance, long long budget, std::uint64_t seed) {
  RunOptions opts;
  opts.budget = budget;
  return run_gsemo(EvaluationContext{instance}, seed, opts);
}

RunResult run_nsga2(const RhoMnkInstance& instance, long long budget, int pop,
                    std::uint64_t seed) {
  RunOptions opts;
  opts.budget = budget;
  opts.population = pop;
  return run_nsga2(EvaluationContext{instance}, seed, opts);
}

std::uint64_t derive_run_seed(std::uint64_t master_seed, std::string_view instance_id,
                              Algorithm algorithm, int run_index) {
  std::uint64_t h = stream_key(master_seed, {0x52554e53ULL});
  for (const char c : instance_id) {
    h = hash_combine(h, static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
  }
  h = hash_combine(h, static_cast<std::uint64_t>(algorithm));
  h = hash_combine(h, static_cast<std::uint64_t>(run_index));
  return h;
}

}  // namespace rmnk
