#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "vdakey/simulation.hpp"

using namespace vdakey;

namespace {

Scenario small_scenario() {
  Scenario s;
  s.trials = 20000;
  return s;
}

}  // namespace

TEST_SUITE_BEGIN("simulation");

TEST_CASE("sweep_point is deterministic and bounded") {
  const Scenario s = small_scenario();
  const SweepRow a = sweep_point(s, 5.0, 0x100);
  const SweepRow b = sweep_point(s, 5.0, 0x100);
  CHECK(a.r_envelope == b.r_envelope);
  CHECK(a.r_phase_diff == b.r_phase_diff);
  CHECK(a.delta_l == 5.0);
  CHECK(a.intervals == 20000);
  CHECK(std::fabs(a.r_envelope) <= 1.0);
  CHECK(std::fabs(a.r_phase_diff) <= 1.0);

  // Thread-shape independence.
  const SweepRow serial = sweep_point(s, 5.0, 0x100, /*parallel=*/false);
  CHECK(serial.r_envelope == a.r_envelope);
  CHECK(serial.r_phase_diff == a.r_phase_diff);
}

TEST_CASE("run_correlation_sweep covers the grid and validates it") {
  Scenario s = small_scenario();
  s.trials = 10000;
  const std::vector<SweepRow> rows = run_correlation_sweep(s, SweepSpec{3.0, 5.0, 1.0});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].delta_l == doctest::Approx(3.0));
  CHECK(rows[2].delta_l == doctest::Approx(5.0));

  // The envelope tracks the channel across offsets better than the phase
  // difference does: its sweep mean is strictly larger.
  double env = 0.0, dpsi = 0.0;
  for (const SweepRow& r : rows) {
    env += r.r_envelope;
    dpsi += r.r_phase_diff;
  }
  CHECK(env > dpsi);

  CHECK_THROWS_AS((void)run_correlation_sweep(s, SweepSpec{3.0, 30.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)run_correlation_sweep(s, SweepSpec{5.0, 3.0, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("make_histogram bins correctly including the right edge") {
  const std::vector<double> samples = {0.0, 0.5, 1.0};
  const Histogram h = make_histogram(samples, 2);
  REQUIRE(h.edges.size() == 3);
  REQUIRE(h.counts.size() == 2);
  CHECK(h.edges[0] == 0.0);
  CHECK(h.edges[2] == 1.0);
  CHECK(h.counts[0] == 1);  // 0.0
  CHECK(h.counts[1] == 2);  // 0.5 and the right-edge 1.0

  const Histogram flat = make_histogram({2.0, 2.0, 2.0}, 4);
  std::uint64_t total = 0;
  for (std::uint64_t c : flat.counts) total += c;
  CHECK(total == 3);

  CHECK_THROWS_AS((void)make_histogram({}, 2), std::invalid_argument);
  CHECK_THROWS_AS((void)make_histogram({1.0}, 0), std::invalid_argument);
}

TEST_CASE("run_distribution_report populates every fit") {
  Scenario s = small_scenario();
  const DistributionReport report = run_distribution_report(s);
  CHECK(report.intervals == 20000);

  std::uint64_t env_total = 0;
  for (std::uint64_t c : report.envelope_hist.counts) env_total += c;
  CHECK(env_total == report.envelope_rice.samples);

  std::uint64_t dpsi_total = 0;
  for (std::uint64_t c : report.phase_diff_hist.counts) dpsi_total += c;
  CHECK(dpsi_total == report.phase_diff_gauss.samples);
  CHECK(report.phase_diff_gauss.samples == 10000);  // disjoint pairs

  // The diagram phase is exactly uniform by the excitation symmetry.
  CHECK(report.diagram.phase_uniform_pass);
  // The phase difference of a three-ray channel is nothing like a Gaussian
  // (its law is wrapped and multimodal); the KS verdict records that
  // honestly rather than passing by construction.
  CHECK(report.phase_diff_gauss.ks_statistic > report.phase_diff_gauss.ks_critical);

  Scenario tiny = s;
  tiny.trials = 5000;
  CHECK_THROWS_AS((void)run_distribution_report(tiny), std::invalid_argument);
}

TEST_CASE("make_problem maps scenario fields onto the optimizer") {
  Scenario s = small_scenario();
  s.alpha_min = 0.1;
  s.alpha_max = 0.2;
  s.alpha_step = 0.05;
  const SyntheticTripleSource src(0.95, 100.0);
  const OptimizationProblem p1 = make_problem(s, src, 1, 256);
  CHECK(p1.method == SelectionPolicy::Kind::threshold_alpha);
  CHECK(p1.ell == 256);
  CHECK(p1.grid.size() == 3);
  CHECK(p1.trials == s.trials);
  CHECK(p1.leakage_target == s.leakage_target);

  const OptimizationProblem p2 = make_problem(s, src, 2, 128);
  CHECK(p2.method == SelectionPolicy::Kind::top_m);
  CHECK(p2.grid.size() == 15);  // q grid defaults

  CHECK_THROWS_AS((void)make_problem(s, src, 3, 128), std::invalid_argument);
}

TEST_CASE("protocol demo: reproducible end-to-end key agreement") {
  Scenario s;
  s.trials = 20000;
  s.alpha_min = 0.10;
  s.alpha_max = 0.20;
  s.alpha_step = 0.05;
  const ProtocolDemoResult demo = run_protocol_demo(s, 2);

  CHECK(demo.budget.feasible);
  CHECK(demo.budget.budget.n0 >= 1000);
  REQUIRE(demo.runs.size() == 2);
  for (const ProtocolRunResult& run : demo.runs) {
    CHECK(run.n0 == static_cast<std::size_t>(demo.budget.budget.n0));
    CHECK(run.intervals_used > run.n0);  // erasures plus disjoint pairing
    CHECK(run.key_a.size() == 128);
    CHECK(run.key_b.size() == 128);
    if (run.fec_success) CHECK(run.keys_equal);
    CHECK(run.randomness.bits == run.n0);
  }
  CHECK(demo.keys_equal_count == 2);

  // Same scenario, same seed: bit-identical keys.
  const ProtocolDemoResult again = run_protocol_demo(s, 2);
  CHECK(again.runs[0].key_b == demo.runs[0].key_b);
  CHECK(again.runs[1].pre_fec_mismatch == demo.runs[1].pre_fec_mismatch);

  CHECK_THROWS_AS((void)run_protocol_demo(s, 0), std::invalid_argument);
}

TEST_SUITE_END();
