#pragma once

#include <cstdint>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rmnk/core.hpp"
#include "rmnk/rng.hpp"

namespace rmnk {

enum class Algorithm : int { kPls = 1, kGsemo = 2, kNsga2 = 3 };

inline const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kPls: return "PLS";
    case Algorithm::kGsemo: return "GSEMO";
    case Algorithm::kNsga2: return "NSGA-II";
  }
  return "?";
}

// Unbounded archive of mutually non-dominated, genotype-unique solutions.
class ParetoArchive {
 public:
  explicit ParetoArchive(int num_objectives) : m_(num_objectives) {}

  // Rejects when an entry dominates the candidate or shares its genotype;
  // on accept removes every entry the candidate dominates. Removed genotypes
  // are appended to *removed when given.
  bool insert(std::uint64_t bits, const double* f,
              std::vector<std::uint64_t>* removed = nullptr);

  std::size_t size() const { return bits_.size(); }
  int num_objectives() const { return m_; }
  std::uint64_t bits_at(std::size_t i) const { return bits_[i]; }
  const double* row(std::size_t i) const { return obj_.data() + i * static_cast<std::size_t>(m_); }
  bool contains(std::uint64_t bits) const { return index_.count(bits) != 0; }

  bool visited(std::size_t i) const { return visited_[i] != 0; }
  void mark_visited(std::uint64_t bits);

 private:
  int m_;
  std::vector<std::uint64_t> bits_;
  std::vector<double> obj_;
  std::vector<std::uint8_t> visited_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;

  void erase_at(std::size_t i);
};

// Evaluation source for one instance, optionally backed by a precomputed
// row-major objective table (2^n rows); algorithms count their own calls.
class EvaluationContext {
 public:
  explicit EvaluationContext(const RhoMnkInstance& instance)
      : instance_(&instance), table_(nullptr) {}
  EvaluationContext(const RhoMnkInstance& instance, const std::vector<double>* table);

  void evaluate(std::uint64_t bits, double* out) const;
  int num_objectives() const { return instance_->spec.num_objectives; }
  int num_variables() const { return instance_->spec.num_variables; }
  const RhoMnkInstance& instance() const { return *instance_; }

 private:
  const RhoMnkInstance* instance_;
  const std::vector<double>* table_;
};

struct ArchiveItem {
  Genotype genotype;
  ObjectiveVector objectives;
};

struct RunResult {
  Algorithm algorithm;
  std::uint64_t run_seed = 0;
  long long evaluations_used = 0;
  std::vector<ArchiveItem> archive;
  // Filled only when RunOptions::log_evaluations is set.
  std::vector<ArchiveItem> evaluation_log;
};

struct RunOptions {
  long long budget = 10000;
  int population = 100;
  bool log_evaluations = false;
};

RunResult run_pls(const EvaluationContext& ctx, std::uint64_t seed,
                  const RunOptions& opts = {});
RunResult run_gsemo(const EvaluationContext& ctx, std::uint64_t seed,
                    const RunOptions& opts = {});
RunResult run_nsga2(const EvaluationContext& ctx, std::uint64_t seed,
                    const RunOptions& opts = {});

RunResult run_pls(const RhoMnkInstance& instance, std::uint64_t seed);
RunResult run_gsemo(const RhoMnkInstance& instance, long long budget, std::uint64_t seed);
RunResult run_nsga2(const RhoMnkInstance& instance, long long budget, int pop,
                    std::uint64_t seed);

// run_seed = chained SplitMix64 mixing of (master_seed, instance_id bytes,
// algorithm id, run_index); see stream_key/hash_combine in rng.hpp.
std::uint64_t derive_run_seed(std::uint64_t master_seed, std::string_view instance_id,
                              Algorithm algorithm, int run_index);

}  // namespace rmnk
