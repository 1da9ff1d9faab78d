#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "rmnk/landscape.hpp"
#include "rmnk/moea.hpp"

using namespace rmnk;

namespace {

std::set<std::uint64_t> archive_bits(const RunResult& r) {
  std::set<std::uint64_t> out;
  for (const auto& item : r.archive) out.insert(item.genotype.bits);
  return out;
}

// Mutually non-dominated and genotype-unique.
void check_archive_invariants(const RunResult& r) {
  CHECK(archive_bits(r).size() == r.archive.size());
  for (std::size_t a = 0; a < r.archive.size(); ++a) {
    for (std::size_t b = 0; b < r.archive.size(); ++b) {
      if (a == b) continue;
      CHECK_FALSE(dominates(r.archive[a].objectives, r.archive[b].objectives));
    }
  }
  // sorted by genotype integer
  for (std::size_t i = 1; i < r.archive.size(); ++i)
    CHECK(r.archive[i - 1].genotype.bits < r.archive[i].genotype.bits);
}

// The archive must equal a non-dominated filter replayed over the
// evaluation stream.
void check_archive_is_stream_filter(const RunResult& r) {
  oracle::StreamArchive oracle_arch;
  for (const auto& e : r.evaluation_log) oracle_arch.insert(e.genotype.bits, e.objectives);

  std::map<std::uint64_t, std::vector<double>> expect;
  for (std::size_t i = 0; i < oracle_arch.bits.size(); ++i)
    expect[oracle_arch.bits[i]] = oracle_arch.points[i];
  std::map<std::uint64_t, std::vector<double>> got;
  for (const auto& item : r.archive) got[item.genotype.bits] = item.objectives;
  CHECK(got == expect);
}

}  // namespace

TEST_CASE("archive accepts incomparable points and evicts dominated ones") {
  ParetoArchive arch(2);
  const double a[] = {0.5, 0.5};
  const double b[] = {0.2, 0.8};
  const double c[] = {0.6, 0.6};
  CHECK(arch.insert(1, a));
  CHECK(arch.insert(2, b));
  CHECK(arch.size() == 2);

  // c dominates a; a's genotype must be reported as removed.
  std::vector<std::uint64_t> removed;
  CHECK(arch.insert(3, c, &removed));
  CHECK(removed == std::vector<std::uint64_t>{1});
  CHECK(arch.size() == 2);
  CHECK(arch.contains(2));
  CHECK(arch.contains(3));
  CHECK_FALSE(arch.contains(1));

  // dominated candidate rejected
  const double d[] = {0.1, 0.1};
  CHECK_FALSE(arch.insert(4, d));

  // duplicate genotype rejected even with better objectives
  const double e[] = {0.9, 0.9};
  CHECK_FALSE(arch.insert(3, e));
  CHECK(arch.size() == 2);

  // equal objective vectors are mutually non-dominating: kept
  const double c2[] = {0.6, 0.6};
  CHECK(arch.insert(5, c2));
  CHECK(arch.size() == 3);
}

TEST_CASE("archive replays a random evaluation stream like the oracle") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto rng = SubstreamRng::of(seed, {0x5354524dULL});
    ParetoArchive arch(2);
    oracle::StreamArchive expect;
    for (int i = 0; i < 200; ++i) {
      const std::uint64_t bits = rng.next_below(64);  // forced genotype collisions
      const std::vector<double> f = {rng.next_unit(), rng.next_unit()};
      arch.insert(bits, f.data());
      expect.insert(bits, f);
    }
    REQUIRE(arch.size() == expect.bits.size());
    std::map<std::uint64_t, std::vector<double>> got, want;
    for (std::size_t i = 0; i < arch.size(); ++i)
      got[arch.bits_at(i)] = std::vector<double>(arch.row(i), arch.row(i) + 2);
    for (std::size_t i = 0; i < expect.bits.size(); ++i)
      want[expect.bits[i]] = expect.points[i];
    CHECK(got == want);
  }
}

TEST_CASE("evaluation context with a table matches direct evaluation") {
  const auto inst = oracle::hand_instance();
  const auto land = enumerate_landscape(inst);
  EvaluationContext direct(inst);
  EvaluationContext tabled(inst, &land.objectives);
  double f1[2], f2[2];
  for (std::uint64_t s = 0; s < 4; ++s) {
    direct.evaluate(s, f1);
    tabled.evaluate(s, f2);
    CHECK(f1[0] == f2[0]);
    CHECK(f1[1] == f2[1]);
  }

  const std::vector<double> short_table(4, 0.0);
  CHECK_THROWS_AS(EvaluationContext(inst, &short_table), std::invalid_argument);
}

TEST_CASE("PLS on the hand instance terminates naturally with the known trace") {
  const auto inst = oracle::hand_instance();
  bool saw_full = false, saw_stuck = false;
  for (std::uint64_t seed = 0; seed < 32; ++seed) {
    const auto r = run_pls(inst, seed);
    CHECK(r.algorithm == Algorithm::kPls);
    CHECK(r.run_seed == seed);
    check_archive_invariants(r);
    if (r.archive.size() == 1) {
      // started at 11, which dominates both neighbors
      CHECK(archive_bits(r) == std::set<std::uint64_t>{3});
      CHECK(r.evaluations_used == 3);
      saw_stuck = true;
    } else {
      CHECK(archive_bits(r) == std::set<std::uint64_t>{0, 3});
      CHECK(r.evaluations_used == 7);
      saw_full = true;
    }
  }
  CHECK(saw_full);
  CHECK(saw_stuck);
}

TEST_CASE("PLS ignores the budget and stops when every member is explored") {
  const auto inst = oracle::hand_instance();
  RunOptions tight;
  tight.budget = 1;  // natural termination can exceed this
  const auto r = run_pls(EvaluationContext(inst), 0, tight);
  CHECK(r.evaluations_used >= 3);
}

TEST_CASE("PLS archives are Pareto local optimal sets") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    ProblemSpec spec;
    spec.num_variables = 8;
    spec.num_interactions = 3;
    spec.rho = seed % 2 ? 0.4 : -0.4;
    spec.instance_seed = 100 + seed;
    const auto inst = generate_instance(spec);
    const auto land = enumerate_landscape(inst);
    const auto r = run_pls(inst, seed);
    check_archive_invariants(r);
    CHECK(r.archive.size() >= 1);
    // natural-termination bound: every genotype enters the archive at most
    // once, so at most 1 + n * 2^n evaluations
    CHECK(r.evaluations_used <= 1 + 8 * 256);
    for (const auto& item : r.archive) {
      CHECK(land.is_plos[item.genotype.bits]);
      for (const auto& nb : hamming_neighbors(item.genotype)) {
        std::vector<double> fn(land.row(nb.bits).begin(), land.row(nb.bits).end());
        CHECK_FALSE(oracle::dominates(fn, item.objectives));
      }
    }
  }
}

TEST_CASE("PLS is deterministic in the seed") {
  ProblemSpec spec;
  spec.num_variables = 10;
  spec.num_interactions = 2;
  spec.instance_seed = 5;
  const auto inst = generate_instance(spec);
  const auto a = run_pls(inst, 77);
  const auto b = run_pls(inst, 77);
  CHECK(a.evaluations_used == b.evaluations_used);
  REQUIRE(a.archive.size() == b.archive.size());
  for (std::size_t i = 0; i < a.archive.size(); ++i) {
    CHECK(a.archive[i].genotype.bits == b.archive[i].genotype.bits);
    CHECK(a.archive[i].objectives == b.archive[i].objectives);
  }
}

TEST_CASE("GSEMO spends exactly the budget") {
  const auto inst = oracle::hand_instance();
  const auto one = run_gsemo(inst, 1, 9);
  CHECK(one.evaluations_used == 1);
  CHECK(one.archive.size() == 1);  // only the initial solution

  for (const long long budget : {2LL, 17LL, 100LL}) {
    const auto r = run_gsemo(inst, budget, 9);
    CHECK(r.evaluations_used == budget);
    check_archive_invariants(r);
  }
  CHECK_THROWS_AS(run_gsemo(inst, 0, 9), std::invalid_argument);

  // enough budget to certainly hit both optima of the hand instance
  const auto full = run_gsemo(inst, 64, 1);
  CHECK(archive_bits(full) == std::set<std::uint64_t>{0, 3});
}

TEST_CASE("GSEMO archive equals the stream filter of its evaluations") {
  ProblemSpec spec;
  spec.num_variables = 9;
  spec.num_interactions = 2;
  spec.instance_seed = 44;
  const auto inst = generate_instance(spec);
  RunOptions opts;
  opts.budget = 400;
  opts.log_evaluations = true;
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto r = run_gsemo(EvaluationContext(inst), seed, opts);
    REQUIRE(r.evaluation_log.size() == 400);
    check_archive_is_stream_filter(r);
  }
}

TEST_CASE("NSGA-II validates the population and spends exactly the budget") {
  const auto inst = oracle::hand_instance();
  CHECK_THROWS_AS(run_nsga2(inst, 100, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_nsga2(inst, 100, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_nsga2(inst, 0, 4, 1), std::invalid_argument);

  // init 4 evals, then generations of 4; odd remainders still land exactly
  for (const long long budget : {3LL, 4LL, 7LL, 10LL, 64LL}) {
    const auto r = run_nsga2(inst, budget, 4, 3);
    CHECK(r.evaluations_used == budget);
    check_archive_invariants(r);
  }

  const auto full = run_nsga2(inst, 64, 4, 1);
  CHECK(archive_bits(full) == std::set<std::uint64_t>{0, 3});
}

TEST_CASE("NSGA-II archive equals the stream filter of its evaluations") {
  ProblemSpec spec;
  spec.num_variables = 9;
  spec.num_interactions = 3;
  spec.instance_seed = 45;
  const auto inst = generate_instance(spec);
  RunOptions opts;
  opts.budget = 300;
  opts.population = 20;
  opts.log_evaluations = true;
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto r = run_nsga2(EvaluationContext(inst), seed, opts);
    REQUIRE(r.evaluation_log.size() == 300);
    check_archive_is_stream_filter(r);
  }
}

TEST_CASE("PLS log covers its archive too") {
  ProblemSpec spec;
  spec.num_variables = 8;
  spec.num_interactions = 2;
  spec.instance_seed = 46;
  const auto inst = generate_instance(spec);
  RunOptions opts;
  opts.log_evaluations = true;
  const auto r = run_pls(EvaluationContext(inst), 2, opts);
  CHECK(static_cast<long long>(r.evaluation_log.size()) == r.evaluations_used);
  check_archive_is_stream_filter(r);
}

TEST_CASE("runs are deterministic and differ across seeds") {
  ProblemSpec spec;
  spec.num_variables = 12;
  spec.num_interactions = 3;
  spec.instance_seed = 8;
  const auto inst = generate_instance(spec);
  const auto a1 = run_gsemo(inst, 500, 10);
  const auto a2 = run_gsemo(inst, 500, 10);
  CHECK(archive_bits(a1) == archive_bits(a2));

  // different seeds almost surely start elsewhere; check a batch differs
  std::set<std::set<std::uint64_t>> outcomes;
  for (std::uint64_t seed = 0; seed < 6; ++seed)
    outcomes.insert(archive_bits(run_nsga2(inst, 120, 8, seed)));
  CHECK(outcomes.size() > 1);
}

TEST_CASE("run seeds derive uniquely from the run coordinates") {
  const auto base = derive_run_seed(1, "rmnk_r0_m2_n16_k1_i00", Algorithm::kPls, 0);
  CHECK(base == derive_run_seed(1, "rmnk_r0_m2_n16_k1_i00", Algorithm::kPls, 0));

  std::set<std::uint64_t> seen;
  for (int run = 0; run < 30; ++run)
    for (const auto alg : {Algorithm::kPls, Algorithm::kGsemo, Algorithm::kNsga2})
      for (const auto id : {"rmnk_r0_m2_n16_k1_i00", "rmnk_r0_m2_n16_k1_i01"})
        seen.insert(derive_run_seed(1, id, alg, run));
  CHECK(seen.size() == 30u * 3u * 2u);
  CHECK(seen.count(derive_run_seed(2, "rmnk_r0_m2_n16_k1_i00", Algorithm::kPls, 0)) == 0);
}
