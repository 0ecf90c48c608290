#include <cmath>
#include <doctest.h>

#include "qbell/localmodel.hpp"
#include "test_support.hpp"

using namespace qbell;
using doctest::Approx;

namespace {

double n(const Populations& p, int one_based) { return p.n[one_based - 1]; }

// Frozen expansions of the antiparallel table, used as the oracle for the
// generic sign-product rule.
double pc_ab_expanded(const Populations& p) {
  return (n(p, 3) + n(p, 4) + n(p, 5) + n(p, 6) - n(p, 1) - n(p, 2) - n(p, 7) -
          n(p, 8));
}
double pc_ac_expanded(const Populations& p) {
  return (n(p, 2) + n(p, 4) + n(p, 5) + n(p, 7) - n(p, 1) - n(p, 3) - n(p, 6) -
          n(p, 8));
}
double pc_bc_expanded(const Populations& p) {
  return (n(p, 2) + n(p, 3) + n(p, 6) + n(p, 7) - n(p, 1) - n(p, 4) - n(p, 5) -
          n(p, 8));
}
double total(const Populations& p) {
  double sum = 0.0;
  for (double w : p.n) sum += w;
  return sum;
}
double classical_qbcp_expanded(const Populations& p) {
  return (2.0 * std::abs(n(p, 3) + n(p, 6) - n(p, 2) - n(p, 7)) -
          std::abs(pc_bc_expanded(p))) /
         total(p);
}

Populations random_weights(Rng& rng) {
  Populations p;
  for (double& w : p.n) w = uniform_in(rng, 0.0, 10.0);
  return p;
}

}  // namespace

TEST_CASE("classical correlations of simple population tables") {
  {
    Populations uniform;
    uniform.n.fill(1.0);
    for (const auto pair : {SettingPair::AB, SettingPair::AC, SettingPair::BC}) {
      CHECK(classical_correlation(uniform, TableKind::Antiparallel, pair) ==
            0.0);
      CHECK(classical_correlation(uniform, TableKind::Parallel, pair) == 0.0);
    }
    CHECK(classical_qbcp(uniform, TableKind::Antiparallel) == 0.0);
  }
  {
    Populations p{};
    p.n[2] = 1.0;  // N_3
    p.n[5] = 1.0;  // N_6
    CHECK(classical_correlation(p, TableKind::Antiparallel, SettingPair::BC) ==
          Approx(1.0));
    CHECK(classical_qbcp(p, TableKind::Antiparallel) == Approx(1.0));
  }
  {
    Populations p{};
    p.n[0] = 1.0;  // N_1
    CHECK(classical_correlation(p, TableKind::Parallel, SettingPair::AB) ==
          Approx(1.0));
    CHECK(classical_qbcp(p, TableKind::Antiparallel) == Approx(-1.0));
  }
}

TEST_CASE("rejects invalid populations") {
  Populations zero{};
  CHECK_THROWS_AS(classical_correlation(zero, TableKind::Antiparallel,
                                        SettingPair::AB),
                  std::invalid_argument);
  Populations negative{};
  negative.n[0] = 1.0;
  negative.n[3] = -0.5;
  CHECK_THROWS_AS(classical_qbcp(negative, TableKind::Parallel),
                  std::invalid_argument);
}

TEST_CASE("generic sign rule reproduces the expanded antiparallel formulas") {
  Rng rng(1903);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = random_weights(rng);
    const double sum = total(p);
    REQUIRE(std::abs(classical_correlation(p, TableKind::Antiparallel,
                                           SettingPair::AB) -
                     pc_ab_expanded(p) / sum) <= 1e-12);
    REQUIRE(std::abs(classical_correlation(p, TableKind::Antiparallel,
                                           SettingPair::AC) -
                     pc_ac_expanded(p) / sum) <= 1e-12);
    REQUIRE(std::abs(classical_correlation(p, TableKind::Antiparallel,
                                           SettingPair::BC) -
                     pc_bc_expanded(p) / sum) <= 1e-12);
    REQUIRE(std::abs(classical_qbcp(p, TableKind::Antiparallel) -
                     classical_qbcp_expanded(p)) <= 1e-12);
  }
}

TEST_CASE("classical correlations are scale invariant") {
  Rng rng(64);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = random_weights(rng);
    const double lambda = uniform_in(rng, 1e-3, 1e3);
    Populations scaled = p;
    for (double& w : scaled.n) w *= lambda;
    for (const auto kind : {TableKind::Antiparallel, TableKind::Parallel}) {
      const double base =
          classical_correlation(p, kind, SettingPair::AB);
      const double after = classical_correlation(scaled, kind, SettingPair::AB);
      REQUIRE(std::abs(base - after) <= 1e-13);
    }
  }
}

TEST_CASE("population sampler is a deterministic simplex stream") {
  PopulationSampler sampler(7);
  PopulationSampler replay(7);
  for (int k = 0; k < 1000; ++k) {
    const auto p = sampler.next();
    const auto q = replay.next();
    double sum = 0.0;
    for (int i = 0; i < 8; ++i) {
      REQUIRE(p.n[i] >= 0.0);
      REQUIRE(p.n[i] == q.n[i]);
      sum += p.n[i];
    }
    REQUIRE(sum == Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("classical bound holds on a large seeded sweep") {
  PopulationSampler sampler(7);
  double max_seen = -2.0;
  for (int k = 0; k < 1000000; ++k) {
    const auto p = sampler.next();
    const double v = classical_qbcp(p, k % 2 == 0 ? TableKind::Antiparallel
                                                  : TableKind::Parallel);
    if (v > max_seen) max_seen = v;
    if (v > 1.0 + 1e-12) REQUIRE(v <= 1.0 + 1e-12);  // report only failures
  }
  CHECK(max_seen <= 1.0 + 1e-12);
}

TEST_CASE("classical max search finds the bound with an equality witness") {
  for (const auto kind : {TableKind::Antiparallel, TableKind::Parallel}) {
    const auto result = classical_max_search(kind, 7, 100000);
    CHECK(result.best_value == Approx(1.0).epsilon(1e-9));
    CHECK(result.best_value <= 1.0 + 1e-12);
    CHECK(result.vertices_checked == 36);
    CHECK(result.samples == 100000);

    // witness obeys the equality condition: N_2 = N_7 = 0 or N_3 = N_6 = 0
    const auto& w = result.witness.n;
    const bool cond_27 = w[1] == 0.0 && w[6] == 0.0;
    const bool cond_36 = w[2] == 0.0 && w[5] == 0.0;
    CHECK((cond_27 || cond_36));
    CHECK(classical_qbcp(result.witness, kind) == result.best_value);
  }

  // determinism of the search
  const auto again = classical_max_search(TableKind::Antiparallel, 7, 10000);
  const auto twice = classical_max_search(TableKind::Antiparallel, 7, 10000);
  CHECK(again.best_value == twice.best_value);
  CHECK(again.witness.n == twice.witness.n);
}
