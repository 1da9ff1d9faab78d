#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rmnk/core.hpp"
#include "rmnk/pipeline/config.hpp"

namespace rmnk::pipeline {

struct PlannedInstance {
  std::string id;
  ProblemSpec spec;
};

// "rmnk_r{rho}_m{m}_n{n}_k{k}_i{index:02}"; rho printed with %.9g.
std::string instance_id(const ProblemSpec& spec, int index);

std::uint64_t derive_instance_seed(std::uint64_t master_seed, double rho, int m,
                                   int n, int k, int index);

// The campaign plan: grid order rho x m x k x index. Written to
// manifest.json by `generate` and consumed by every later stage, so file
// order stays identical across reruns of the same config.
struct Manifest {
  std::uint64_t master_seed = 0;
  std::vector<PlannedInstance> instances;
};

Manifest plan_manifest(const ExperimentConfig& cfg);
void write_manifest(const Manifest& manifest, const std::string& path);
Manifest read_manifest(const std::string& path);  // throws MissingInputError

// Stages. Each reads only files produced by earlier stages plus the config;
// absent prerequisites raise MissingInputError.
void cmd_generate(const ExperimentConfig& cfg);
void cmd_features(const ExperimentConfig& cfg);
void cmd_run(const ExperimentConfig& cfg);
void cmd_explain(const ExperimentConfig& cfg);
void cmd_report(const ExperimentConfig& cfg);
void cmd_all(const ExperimentConfig& cfg);

}  // namespace rmnk::pipeline
