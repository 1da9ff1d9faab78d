#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rmnk {

using ObjectiveVector = std::vector<double>;

// Benchmark parameters of one problem instance. rho couples the contribution
// values across objectives; it must stay above -1/(m-1) for the correlation
// structure to exist.
struct ProblemSpec {
  double rho = 0.0;
  int num_objectives = 2;   // m
  int num_variables = 16;   // n
  int num_interactions = 1; // k
  std::uint64_t instance_seed = 0;

  void validate() const;  // throws std::invalid_argument on violation

  bool operator==(const ProblemSpec&) const = default;
};

// Fixed-length binary string. Variable j lives in bit j, so the integer view
// of a genotype is sum_j x_j * 2^j and string index j holds x_j.
struct Genotype {
  std::uint64_t bits = 0;
  int length = 0;

  Genotype() = default;
  Genotype(std::uint64_t b, int n) : bits(b), length(n) {}

  static Genotype from_string(std::string_view s);
  std::string to_string() const;

  bool bit(int j) const { return (bits >> j) & 1u; }
  Genotype flipped(int j) const { return Genotype(bits ^ (1ULL << j), length); }

  bool operator==(const Genotype&) const = default;
};

// Epistatic links plus per-objective contribution tables.
// tables[i][j] has 2^(k+1) entries indexed by the bit pattern
// x_j | x_links[j][0]<<1 | ... | x_links[j][k-1]<<k.
struct RhoMnkInstance {
  ProblemSpec spec;
  std::vector<std::vector<int>> links;                  // [variable][k], sorted
  std::vector<std::vector<std::vector<double>>> tables; // [objective][variable][pattern]

  // Contribution pattern of variable j in genotype bits.
  std::uint32_t pattern(std::uint64_t bits, int j) const {
    const auto& lj = links[j];
    std::uint32_t idx = (bits >> j) & 1u;
    for (std::size_t t = 0; t < lj.size(); ++t)
      idx |= static_cast<std::uint32_t>((bits >> lj[t]) & 1u) << (t + 1);
    return idx;
  }

  // f_i(x) written into out[0..m-1]; no allocation.
  void evaluate_into(std::uint64_t bits, double* out) const;
};

RhoMnkInstance generate_instance(const ProblemSpec& spec);

ObjectiveVector evaluate(const RhoMnkInstance& instance, const Genotype& x);

// All n one-bit flips of x, ordered by flipped index.
std::vector<Genotype> hamming_neighbors(const Genotype& x);

// JSON instance files: {"spec": {...}, "links": [...], "tables": [...]}.
// Floats are written with 17 significant digits so a round trip is lossless.
void save_instance(const RhoMnkInstance& instance, const std::string& path);
RhoMnkInstance load_instance(const std::string& path);

// 17-significant-digit decimal rendering used by every file this project
// writes; round-trips doubles exactly.
std::string format_double(double v);

}  // namespace rmnk
