#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "rmnk/core.hpp"

using namespace rmnk;

namespace {

ProblemSpec make_spec(double rho, int m, int n, int k, std::uint64_t seed) {
  ProblemSpec s;
  s.rho = rho;
  s.num_objectives = m;
  s.num_variables = n;
  s.num_interactions = k;
  s.instance_seed = seed;
  return s;
}

}  // namespace

TEST_CASE("spec validation enforces the parameter domain") {
  CHECK_NOTHROW(make_spec(0.0, 2, 16, 1, 1).validate());
  CHECK_THROWS_AS(make_spec(0.0, 1, 16, 1, 1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(make_spec(0.0, 2, 0, 0, 1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(make_spec(0.0, 2, 65, 1, 1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(make_spec(0.0, 2, 16, -1, 1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(make_spec(0.0, 2, 16, 16, 1).validate(), std::invalid_argument);

  // rho bound depends on m: -0.6 is fine for two objectives, infeasible for
  // three (needs rho > -0.5).
  CHECK_NOTHROW(make_spec(-0.6, 2, 16, 1, 1).validate());
  CHECK_THROWS_AS(make_spec(-0.6, 3, 16, 1, 1).validate(), std::invalid_argument);
  CHECK_THROWS_AS(make_spec(-0.5, 3, 16, 1, 1).validate(), std::invalid_argument);
  CHECK_NOTHROW(make_spec(-0.49, 3, 16, 1, 1).validate());
  CHECK_THROWS_AS(make_spec(-1.0, 2, 16, 1, 1).validate(), std::invalid_argument);
}

TEST_CASE("genotype string round trip, bit layout, and flips") {
  const auto g = Genotype::from_string("10");
  CHECK(g.bits == 1);  // variable j lives in bit j
  CHECK(g.length == 2);
  CHECK(g.bit(0));
  CHECK_FALSE(g.bit(1));
  CHECK(g.to_string() == "10");

  const auto h = Genotype::from_string("0110");
  CHECK(h.bits == 6);
  CHECK(h.to_string() == "0110");
  CHECK(h.flipped(0).to_string() == "1110");
  CHECK(h.flipped(3).to_string() == "0111");
  CHECK(h.flipped(1).flipped(1) == h);

  CHECK_THROWS_AS(Genotype::from_string("01x"), std::invalid_argument);
}

TEST_CASE("hamming_neighbors flips each position once, in order") {
  const auto nb = hamming_neighbors(Genotype::from_string("00"));
  REQUIRE(nb.size() == 2);
  CHECK(nb[0].to_string() == "10");
  CHECK(nb[1].to_string() == "01");

  const auto g = Genotype::from_string("10110");
  const auto more = hamming_neighbors(g);
  REQUIRE(more.size() == 5);
  std::set<std::uint64_t> seen;
  for (std::size_t j = 0; j < more.size(); ++j) {
    CHECK(__builtin_popcountll(more[j].bits ^ g.bits) == 1);
    CHECK(more[j].bits == g.flipped(static_cast<int>(j)).bits);
    seen.insert(more[j].bits);
  }
  CHECK(seen.size() == 5);
}

TEST_CASE("generated instances have the documented shapes") {
  const auto spec = make_spec(0.2, 3, 10, 4, 99);
  const auto inst = generate_instance(spec);
  CHECK(inst.spec == spec);
  REQUIRE(inst.links.size() == 10);
  REQUIRE(inst.tables.size() == 3);
  for (int j = 0; j < 10; ++j) {
    const auto& lj = inst.links[static_cast<std::size_t>(j)];
    REQUIRE(lj.size() == 4);
    CHECK(std::is_sorted(lj.begin(), lj.end()));
    CHECK(std::set<int>(lj.begin(), lj.end()).size() == 4);  // distinct
    for (int v : lj) {
      CHECK(v != j);  // never self
      CHECK(v >= 0);
      CHECK(v < 10);
    }
  }
  for (const auto& obj : inst.tables) {
    REQUIRE(obj.size() == 10);
    for (const auto& tbl : obj) {
      REQUIRE(tbl.size() == 32);  // 2^(k+1)
      for (double c : tbl) {
        CHECK(c > 0.0);
        CHECK(c < 1.0);
      }
    }
  }
}

TEST_CASE("instance generation is deterministic in the seed") {
  const auto a = generate_instance(make_spec(0.4, 2, 12, 3, 7));
  const auto b = generate_instance(make_spec(0.4, 2, 12, 3, 7));
  CHECK(a.links == b.links);
  CHECK(a.tables == b.tables);

  const auto c = generate_instance(make_spec(0.4, 2, 12, 3, 8));
  CHECK(a.tables != c.tables);
}

TEST_CASE("evaluate averages the linked contribution tables") {
  // Constant tables: every objective hits the constant regardless of x.
  const auto flat = oracle::constant_instance(5, 2, 0.5);
  for (std::uint64_t s = 0; s < 32; ++s) {
    const auto f = evaluate(flat, Genotype(s, 5));
    CHECK(f[0] == 0.5);
    CHECK(f[1] == 0.5);
  }

  // n=1, k=0: f(x) is the table cell of the single variable.
  RhoMnkInstance tiny;
  tiny.spec = make_spec(0.0, 2, 1, 0, 1);
  tiny.links = {{}};
  tiny.tables = {{{0.2, 0.9}}, {{0.7, 0.1}}};
  const auto f0 = evaluate(tiny, Genotype::from_string("0"));
  CHECK(f0[0] == 0.2);
  CHECK(f0[1] == 0.7);
  const auto f1 = evaluate(tiny, Genotype::from_string("1"));
  CHECK(f1[0] == 0.9);
  CHECK(f1[1] == 0.1);
}

TEST_CASE("hand instance evaluates to the worked-out values") {
  const auto inst = oracle::hand_instance();
  // pattern for variable 0 is x0 + 2*x1; for variable 1 it is x1 + 2*x0.
  CHECK(inst.pattern(0b01, 0) == 1);
  CHECK(inst.pattern(0b10, 0) == 2);
  CHECK(inst.pattern(0b01, 1) == 2);
  CHECK(inst.pattern(0b10, 1) == 1);

  const auto f00 = evaluate(inst, Genotype::from_string("00"));
  const auto f10 = evaluate(inst, Genotype::from_string("10"));
  const auto f01 = evaluate(inst, Genotype::from_string("01"));
  const auto f11 = evaluate(inst, Genotype::from_string("11"));
  CHECK(f00 == oracle::hand_values(0, 0));
  CHECK(f10 == oracle::hand_values(1, 0));
  CHECK(f01 == oracle::hand_values(0, 1));
  CHECK(f11 == oracle::hand_values(1, 1));
  // Sanity against the worked-out decimals (1-ulp rounding aside).
  const std::array<std::pair<const ObjectiveVector*, ObjectiveVector>, 4> want =
      {{{&f00, {0.15, 0.7}},
        {&f10, {0.55, 0.425}},
        {&f01, {0.35, 0.525}},
        {&f11, {0.75, 0.6}}}};
  for (const auto& [got, dec] : want) {
    CHECK((*got)[0] == doctest::Approx(dec[0]).epsilon(1e-15));
    CHECK((*got)[1] == doctest::Approx(dec[1]).epsilon(1e-15));
  }
}

TEST_CASE("evaluate_into matches evaluate and rejects length mismatch") {
  const auto inst = generate_instance(make_spec(0.0, 3, 8, 2, 17));
  double out[3];
  for (std::uint64_t s = 0; s < 256; s += 13) {
    inst.evaluate_into(s, out);
    const auto f = evaluate(inst, Genotype(s, 8));
    for (int i = 0; i < 3; ++i) CHECK(out[i] == f[i]);
  }
  CHECK_THROWS_AS(evaluate(inst, Genotype(0, 7)), std::invalid_argument);
}

TEST_CASE("save/load round trips an instance exactly") {
  const auto inst = generate_instance(make_spec(-0.3, 2, 9, 3, 55));
  const auto path = std::filesystem::temp_directory_path() / "rmnk_roundtrip.json";
  save_instance(inst, path.string());
  const auto back = load_instance(path.string());
  CHECK(back.spec == inst.spec);
  CHECK(back.links == inst.links);
  CHECK(back.tables == inst.tables);  // 17 significant digits is lossless
  std::filesystem::remove(path);

  CHECK_THROWS(load_instance("/nonexistent/instance.json"));
}

TEST_CASE("empirical objective correlation tracks rho") {
  // Pool table cells across instances; the copula calibrates the Pearson
  // correlation of the uniform marginals to rho.
  auto pooled_corr = [](double rho, int m) {
    std::vector<double> a, b;
    for (int i = 0; i < 60; ++i) {
      const auto inst = generate_instance(make_spec(rho, m, 8, 2,
                                                    1000 + static_cast<std::uint64_t>(i)));
      for (std::size_t j = 0; j < inst.tables[0].size(); ++j)
        for (std::size_t c = 0; c < inst.tables[0][j].size(); ++c) {
          a.push_back(inst.tables[0][j][c]);
          b.push_back(inst.tables[1][j][c]);
        }
    }
    return oracle::pearson(a, b);
  };

  CHECK(pooled_corr(0.9, 2) == doctest::Approx(0.9).epsilon(0.05));
  CHECK(pooled_corr(0.0, 2) == doctest::Approx(0.0).scale(1.0).epsilon(0.05));
  CHECK(pooled_corr(-0.7, 2) == doctest::Approx(-0.7).epsilon(0.08));
  CHECK(pooled_corr(0.4, 3) == doctest::Approx(0.4).epsilon(0.1));

  // Monotone in rho.
  const double lo = pooled_corr(-0.4, 2);
  const double mid = pooled_corr(0.0, 2);
  const double hi = pooled_corr(0.4, 2);
  CHECK(lo < mid);
  CHECK(mid < hi);
}

TEST_CASE("generation near the m=3 feasibility floor succeeds") {
  const auto inst = generate_instance(make_spec(-0.49, 3, 6, 1, 3));
  for (const auto& obj : inst.tables)
    for (const auto& tbl : obj)
      for (double c : tbl) {
        CHECK(c > 0.0);
        CHECK(c < 1.0);
      }
  CHECK_THROWS_AS(generate_instance(make_spec(-0.5, 3, 6, 1, 3)), std::invalid_argument);
}

TEST_CASE("format_double round trips doubles exactly") {
  const double vals[] = {0.1, 1.0 / 3.0, -2.5e-17, 7.25, 0.0, 1e300, -0.4};
  for (double v : vals) {
    const auto s = format_double(v);
    CHECK(std::stod(s) == v);
  }
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-0.4) == "-0.40000000000000002");
}
