#include <algorithm>
#include <cmath>
#include <doctest.h>

#include "qbell/bell.hpp"
#include "test_support.hpp"

using namespace qbell;
using doctest::Approx;

namespace {

const double kSqrt2 = std::sqrt(2.0);

// Upper envelope of |P(a,b) - P(a,c)| for spin families once the azimuths
// and state parameters are free: max over the two sign couplings.
double spin_envelope(const Direction& a, const Direction& b,
                     const Direction& c) {
  const double plus =
      std::abs(-std::cos(a.theta() + b.theta()) + std::cos(a.theta() - c.theta()));
  const double minus =
      std::abs(-std::cos(a.theta() - b.theta()) + std::cos(a.theta() + c.theta()));
  return std::max(plus, minus);
}

}  // namespace

TEST_CASE("qbcp reaches the known optima") {
  {
    // maximal antiparallel configuration: a along +y, b/c along +/-x
    const EntangledPairState s(PairFamily::SpinAntiparallel, 0.25 * kPi,
                               0.25 * kPi);
    const auto e = qbcp(s, Direction(0.5 * kPi, 0.5 * kPi),
                        Direction(0.5 * kPi, 0.0), Direction(0.5 * kPi, kPi));
    CHECK(e.p_b == Approx(2.0).epsilon(1e-12));
    CHECK(e.violated);
    CHECK(e.margin() == Approx(1.0).epsilon(1e-12));
  }
  {
    // singlet optimum sqrt(2)
    const EntangledPairState s(PairFamily::SpinAntiparallel, 0.75 * kPi, 0.0);
    const auto e =
        qbcp(s, Direction(0.5 * kPi, 0.75 * kPi),
             Direction(0.5 * kPi, 0.5 * kPi), Direction(0.5 * kPi, 0.0));
    CHECK(e.p_b == Approx(kSqrt2).epsilon(1e-12));
    CHECK(e.violated);
  }
  {
    const EntangledPairState s(PairFamily::PhotonPerpendicular, 0.25 * kPi,
                               0.0);
    const auto e =
        qbcp(s, Direction::planar(kPi / 8.0), Direction::planar(3.0 * kPi / 8.0),
             Direction::planar(15.0 * kPi / 8.0));
    CHECK(e.p_b == Approx(2.0).epsilon(1e-12));
  }
  {
    const EntangledPairState s(PairFamily::PhotonPerpendicular, 0.75 * kPi,
                               0.0);
    const auto e =
        qbcp(s, Direction::planar(3.0 * kPi / 8.0), Direction::planar(0.25 * kPi),
             Direction::planar(0.0));
    CHECK(e.p_b == Approx(kSqrt2).epsilon(1e-12));
  }
}

TEST_CASE("coincident b and c never violate") {
  Rng rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const auto cfg = testing::random_config(rng);
    const auto e = qbcp(cfg.s, cfg.a, cfg.b, cfg.b);
    REQUIRE(e.p_b <= 0.0);
    REQUIRE_FALSE(e.violated);
    REQUIRE(e.p_b == -std::abs(e.p_bc));
  }
  // singlet: P(b,b) = -1 exactly up to rounding
  const EntangledPairState singlet(PairFamily::SpinAntiparallel, 0.75 * kPi, 0.0);
  const Direction b(0.9, 4.0);
  CHECK(qbcp(singlet, Direction(0.2, 0.1), b, b).p_b ==
        Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("bell evaluation arithmetic contract") {
  Rng rng(55);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto cfg = testing::random_config(rng);
    const auto e = qbcp(cfg.s, cfg.a, cfg.b, cfg.c);
    REQUIRE(e.p_b == std::abs(e.p_ab - e.p_ac) - std::abs(e.p_bc));
    REQUIRE(e.violated == (e.p_b > 1.0));
    REQUIRE(e.p_b_local <= 1.0 + 1e-12);
  }
}

TEST_CASE("extended BI boundary case") {
  // theta_a = theta_b = 0, theta_c = pi: local correlations are all +/-1
  const EntangledPairState s(PairFamily::SpinAntiparallel, 1.234, 0.567);
  const auto e = qbcp(s, Direction(0.0, 0.0), Direction(0.0, 0.0),
                      Direction(kPi, 0.0));
  CHECK(e.p_b_local == Approx(1.0).epsilon(1e-12));
  CHECK(extended_bi_local(s, Direction(0.0, 0.0), Direction(0.0, 0.0),
                          Direction(kPi, 0.0)));
}

TEST_CASE("original BI at the degenerate poles") {
  {
    const EntangledPairState s(PairFamily::SpinAntiparallel, 0.3, 0.9);
    const auto r = original_bi_check(s, Direction(0.0, 0.0), Direction(0.0, 0.0),
                                     Direction(0.0, 0.0));
    CHECK(r.lhs == Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(r.rhs == Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(r.holds);
  }
  {
    const EntangledPairState s(PairFamily::SpinParallel, 0.3, 0.9);
    const auto r = original_bi_check(s, Direction(0.0, 0.0), Direction(0.0, 0.0),
                                     Direction(0.0, 0.0));
    CHECK(r.lhs == Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(r.rhs == Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(r.holds);
  }
  const EntangledPairState photon(PairFamily::PhotonParallel, 0.3, 0.9);
  CHECK_THROWS_AS(original_bi_check(photon, Direction::planar(0.0),
                                    Direction::planar(1.0),
                                    Direction::planar(2.0)),
                  std::invalid_argument);
}

TEST_CASE("theorem sweep: local bounds, envelope and value range") {
  Rng rng(424242);
  for (int trial = 0; trial < 100000; ++trial) {
    const auto cfg = testing::random_config(rng);
    REQUIRE(extended_bi_local(cfg.s, cfg.a, cfg.b, cfg.c));
    REQUIRE(bound_check(cfg.s, cfg.a, cfg.b, cfg.c));
    if (!cfg.s.is_photon()) {
      REQUIRE(original_bi_check(cfg.s, cfg.a, cfg.b, cfg.c).holds);
      const auto e = qbcp(cfg.s, cfg.a, cfg.b, cfg.c);
      REQUIRE(e.p_b <= spin_envelope(cfg.a, cfg.b, cfg.c) + 1e-12);
    }
  }
}

TEST_CASE("reported values are invariant under angle and phase shifts") {
  Rng rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto cfg = testing::random_config(rng);
    const auto base = qbcp(cfg.s, cfg.a, cfg.b, cfg.c);

    // adding 2pi to any azimuth
    const Direction a_shift = cfg.s.is_photon()
                                  ? Direction::planar(cfg.a.phi() + kTwoPi)
                                  : Direction(cfg.a.theta(), cfg.a.phi() + kTwoPi);
    const auto shifted = qbcp(cfg.s, a_shift, cfg.b, cfg.c);
    REQUIRE(std::abs(shifted.p_b - base.p_b) <= 1e-12);

    // xi -> xi + pi flips both coefficients: a pure global phase
    const EntangledPairState flipped(cfg.s.family(), cfg.s.xi() + kPi,
                                     cfg.s.eta());
    const auto rephased = qbcp(flipped, cfg.a, cfg.b, cfg.c);
    REQUIRE(std::abs(rephased.p_b - base.p_b) <= 1e-12);
  }
}
