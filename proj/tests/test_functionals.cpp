#include <cmath>
#include <vector>

#include "doctest.h"
#include "vdakey/functionals.hpp"

using namespace vdakey;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

TEST_SUITE_BEGIN("functionals");

TEST_CASE("wrap_angle maps onto (-pi, pi]") {
  CHECK(wrap_angle(0.0) == 0.0);
  CHECK(wrap_angle(kPi) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(wrap_angle(-kPi) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(wrap_angle(3.0 * kPi) == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(wrap_angle(2.0 * kPi) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(wrap_angle(-0.1) == doctest::Approx(-0.1).epsilon(1e-15));
  CHECK(wrap_angle(7.0) == doctest::Approx(0.71681469282041377).epsilon(1e-12));
}

TEST_CASE("envelope and phase of a quadrature observation") {
  CHECK(envelope({3.0, 4.0}) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(phase({0.0, 1.0}) == doctest::Approx(0.5 * kPi).epsilon(1e-15));
  CHECK(phase({-1.0, 0.0}) == doctest::Approx(kPi).epsilon(1e-15));
}

TEST_CASE("phase_difference wraps across the branch cut") {
  CHECK(phase_difference(0.1, -0.1) == doctest::Approx(0.2).epsilon(1e-14));
  // Crossing +-pi: the short way round is -0.2, not 2 pi - 0.2.
  CHECK(phase_difference(-kPi + 0.1, kPi - 0.1) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(phase_difference(kPi - 0.1, -kPi + 0.1) == doctest::Approx(-0.2).epsilon(1e-12));
}

TEST_CASE("sequence helpers") {
  const std::vector<QuadratureObservation> obs = {{3.0, 4.0}, {0.0, 2.0}, {1.0, 0.0}};
  const std::vector<double> env = envelope_sequence(obs);
  REQUIRE(env.size() == 3);
  CHECK(env[0] == doctest::Approx(5.0));
  CHECK(env[1] == doctest::Approx(2.0));
  CHECK(env[2] == doctest::Approx(1.0));

  const std::vector<double> ph = phase_sequence(obs);
  REQUIRE(ph.size() == 3);
  CHECK(ph[1] == doctest::Approx(0.5 * kPi));
  CHECK(ph[2] == doctest::Approx(0.0));
}

TEST_CASE("phase_difference_sequence: overlapping vs disjoint pairing") {
  const std::vector<double> phases = {0.1, 0.5, -0.2, 0.4, 0.0};

  const std::vector<double> disjoint = phase_difference_sequence(phases, false);
  REQUIRE(disjoint.size() == 2);  // pairs (0,1) and (2,3); the tail is dropped
  CHECK(disjoint[0] == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(disjoint[1] == doctest::Approx(0.6).epsilon(1e-14));

  const std::vector<double> overlapping = phase_difference_sequence(phases, true);
  REQUIRE(overlapping.size() == 4);  // consecutive pairs
  CHECK(overlapping[0] == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(overlapping[1] == doctest::Approx(-0.7).epsilon(1e-14));
  CHECK(overlapping[2] == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(overlapping[3] == doctest::Approx(-0.4).epsilon(1e-14));
}

TEST_SUITE_END();
