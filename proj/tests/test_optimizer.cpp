#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "vdakey/optimizer.hpp"

using namespace vdakey;

TEST_SUITE_BEGIN("optimizer");

TEST_CASE("make_grid is inclusive and validates") {
  const std::vector<double> g = make_grid(0.05, 0.30, 0.01);
  REQUIRE(g.size() == 26);
  CHECK(g.front() == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(g.back() == doctest::Approx(0.30).epsilon(1e-9));

  const std::vector<double> q = make_grid(0.80, 0.94, 0.01);
  CHECK(q.size() == 15);

  const std::vector<double> single = make_grid(0.1, 0.1, 0.05);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == 0.1);

  CHECK_THROWS_AS((void)make_grid(0.2, 0.1, 0.01), std::invalid_argument);
  CHECK_THROWS_AS((void)make_grid(0.1, 0.2, 0.0), std::invalid_argument);
}

namespace {

OptimizationProblem small_problem(const TripleSource& src,
                                  SelectionPolicy::Kind method) {
  OptimizationProblem p;
  p.source = &src;
  p.ell = 128;
  p.method = method;
  p.trials = 30000;
  p.grid = method == SelectionPolicy::Kind::threshold_alpha
               ? make_grid(0.08, 0.20, 0.04)
               : make_grid(0.84, 0.92, 0.04);
  return p;
}

}  // namespace

TEST_CASE("problem validation") {
  const SyntheticTripleSource src(0.95, 100.0);
  OptimizationProblem p = small_problem(src, SelectionPolicy::Kind::threshold_alpha);

  p.trials = 5000;
  CHECK_THROWS_AS((void)optimize(p, 1), std::invalid_argument);
  p = small_problem(src, SelectionPolicy::Kind::threshold_alpha);
  p.grid.clear();
  CHECK_THROWS_AS((void)optimize(p, 1), std::invalid_argument);
  p = small_problem(src, SelectionPolicy::Kind::threshold_alpha);
  p.leakage_target = 0.0;
  CHECK_THROWS_AS((void)optimize(p, 1), std::invalid_argument);
  p = small_problem(src, SelectionPolicy::Kind::threshold_alpha);
  p.source = nullptr;
  CHECK_THROWS_AS((void)optimize(p, 1), std::invalid_argument);
  p = small_problem(src, SelectionPolicy::Kind::threshold_alpha);
  p.ell = 0;
  CHECK_THROWS_AS((void)evaluate_candidate(p, 0.1, 1), std::invalid_argument);
}

TEST_CASE("evaluate_candidate is deterministic in the seed") {
  const SyntheticTripleSource src(0.95, 100.0);
  const OptimizationProblem p = small_problem(src, SelectionPolicy::Kind::threshold_alpha);
  const CandidateEvaluation a = evaluate_candidate(p, 0.12, 42);
  const CandidateEvaluation b = evaluate_candidate(p, 0.12, 42);
  CHECK(a.budget.n0 == b.budget.n0);
  CHECK(a.key_rate == b.key_rate);
  CHECK(a.measured.eavesdropper_error == b.measured.eavesdropper_error);
  const CandidateEvaluation c = evaluate_candidate(p, 0.12, 43);
  CHECK(a.measured.eavesdropper_error != c.measured.eavesdropper_error);
}

TEST_CASE("optimize returns the best feasible candidate and honest bookkeeping") {
  const SyntheticTripleSource src(0.95, 100.0);
  const OptimizationProblem p = small_problem(src, SelectionPolicy::Kind::threshold_alpha);
  const std::optional<OptimizationResult> result = optimize(p, 42);
  REQUIRE(result.has_value());
  CHECK(result->all.size() == p.grid.size());

  // Every feasible candidate satisfies both constraints as recorded, and
  // none beats the winner.
  bool saw_feasible = false;
  for (const CandidateEvaluation& ev : result->all) {
    if (!ev.feasible) continue;
    saw_feasible = true;
    CHECK(ev.budget.leakage_bound <= p.leakage_target);
    CHECK(ev.budget.decoding_bound <= p.ped_target);
    CHECK(ev.key_rate <= result->best.key_rate + 1e-15);
    // Pricing identities.
    CHECK(ev.n == doctest::Approx(static_cast<double>(ev.budget.n0) /
                                  (1.0 - ev.measured.erasure_rate))
                      .epsilon(1e-12));
    CHECK(ev.key_rate == doctest::Approx(static_cast<double>(p.ell) / ev.n).epsilon(1e-12));
    CHECK(ev.key_rate_n0 ==
          doctest::Approx(static_cast<double>(p.ell) /
                          static_cast<double>(ev.budget.n0))
              .epsilon(1e-12));
  }
  CHECK(saw_feasible);
  CHECK(result->best.feasible);
}

TEST_CASE("the two selection methods price comparably at the same operating point") {
  const SyntheticTripleSource src(0.95, 100.0);
  const std::optional<OptimizationResult> m1 =
      optimize(small_problem(src, SelectionPolicy::Kind::threshold_alpha), 42);
  const std::optional<OptimizationResult> m2 =
      optimize(small_problem(src, SelectionPolicy::Kind::top_m), 42);
  REQUIRE(m1.has_value());
  REQUIRE(m2.has_value());
  // Both methods implement the same reliability/erasure trade; their best
  // key rates per kept bit agree to well within the grid resolution.
  CHECK(std::fabs(m1->best.key_rate_n0 - m2->best.key_rate_n0) < 0.02);
}

TEST_CASE("a nearly omniscient eavesdropper admits no feasible budget") {
  // At rho = 0.999 the eavesdropper's conditioned error falls below the legal
  // reconciliation cost at every threshold, so the leakage margin can never
  // outgrow ell + r and the block-length search must report infeasibility.
  const SyntheticTripleSource src(0.999, 100.0);
  const OptimizationProblem p = small_problem(src, SelectionPolicy::Kind::threshold_alpha);
  const std::optional<OptimizationResult> result = optimize(p, 42);
  CHECK_FALSE(result.has_value());
}

TEST_SUITE_END();
