#pragma once

#include <string>
#include <vector>

#include "rmnk/core.hpp"
#include "rmnk/landscape.hpp"
#include "rmnk/moea.hpp"

namespace rmnk {

// Share of exact Pareto-optimal genotypes present in the archive.
double resolution(const std::vector<ArchiveItem>& archive,
                  const std::vector<Genotype>& pareto);

// Lebesgue measure of the union of boxes [ref, p] under maximization.
// Supports 2 and 3 objectives; every point must weakly dominate ref.
double hypervolume(const std::vector<ObjectiveVector>& points,
                   const ObjectiveVector& ref);

// hypervolume(archive) / hypervolume(front), reference at the origin.
// A zero-hypervolume front is degenerate: 1.0 when the archive's vector set
// equals the front, otherwise a domain error.
double relative_hypervolume(const std::vector<ObjectiveVector>& archive,
                            const std::vector<ObjectiveVector>& front);

struct PerformanceRecord {
  std::string instance_id;  // filled by the caller
  Algorithm algorithm = Algorithm::kPls;
  double reso_mean = 0.0;
  double reso_std = 0.0;
  double hv_mean = 0.0;
  double hv_std = 0.0;
  int runs = 0;
};

// Mean and population standard deviation of per-run scores.
PerformanceRecord aggregate(const std::vector<RunResult>& results,
                            const EnumeratedLandscape& landscape);

}  // namespace rmnk
