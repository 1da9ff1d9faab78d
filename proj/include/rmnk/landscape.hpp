#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rmnk/core.hpp"

namespace rmnk {

// Pareto dominance for maximization: a >= b everywhere and > somewhere.
bool dominates(std::span<const double> a, std::span<const double> b);
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

// Non-dominated sorting ranks (0 = Pareto front). Exactly-equal vectors are
// mutually non-dominating and share a rank.
std::vector<int> nondominated_sort(const std::vector<ObjectiveVector>& points);

// Flat row-major variant used on enumerated landscapes.
std::vector<int> nondominated_sort_flat(const std::vector<double>& rows, int m);

// Full evaluation of a small search space: one row per genotype integer.
struct EnumeratedLandscape {
  int num_variables = 0;
  int num_objectives = 0;
  std::vector<double> objectives;  // [s * m + i]
  std::vector<int> rank;
  std::vector<std::uint8_t> is_pareto;
  std::vector<std::uint8_t> is_plos;

  std::size_t size() const { return rank.size(); }
  std::span<const double> row(std::uint64_t s) const {
    return {objectives.data() + s * static_cast<std::size_t>(num_objectives),
            static_cast<std::size_t>(num_objectives)};
  }
};

inline constexpr int kEnumerationLimit = 24;  // 2^n rows; resource guard

EnumeratedLandscape enumerate_landscape(const RhoMnkInstance& instance);

// Rank-0 genotypes (deduplicated by construction: one row per genotype).
std::vector<Genotype> pareto_set(const EnumeratedLandscape& landscape);

// Rank-0 objective vectors; duplicate vectors from distinct genotypes kept once.
std::vector<ObjectiveVector> pareto_front(const EnumeratedLandscape& landscape);

// genotype_int, f_1..f_m, rank, is_pareto, is_plos
void write_landscape_csv(const EnumeratedLandscape& landscape, const std::string& path);

}  // namespace rmnk
