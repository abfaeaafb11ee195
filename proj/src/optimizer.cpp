#include "vdakey/optimizer.hpp"

#include <cmath>
#include <stdexcept>

namespace vdakey {

namespace {

void validate(const OptimizationProblem& p) {
  if (p.source == nullptr) throw std::invalid_argument("optimizer: null source");
  if (p.trials < 10000) throw std::invalid_argument("optimizer: need >= 10^4 trials");
  if (p.ell < 1) throw std::invalid_argument("optimizer: ell must be >= 1");
  if (!(p.leakage_target > 0.0) || !(p.leakage_target < 1.0) ||
      !(p.ped_target > 0.0) || !(p.ped_target < 1.0))
    throw std::invalid_argument("optimizer: targets must lie in (0, 1)");
  if (p.grid.empty()) throw std::invalid_argument("optimizer: empty grid");
}

CandidateEvaluation evaluate_on(const OptimizationProblem& problem, double parameter,
                                const RawSequences& raw) {
  CandidateEvaluation ev;
  ev.parameter = parameter;

  KeyRun run;
  if (problem.method == SelectionPolicy::Kind::threshold_alpha) {
    if (parameter < 0.0)
      throw std::invalid_argument("evaluate_candidate: alpha must be >= 0");
    run = select_method1(raw, parameter);
  } else {
    if (!(parameter > 0.0) || parameter > 1.0)
      throw std::invalid_argument("evaluate_candidate: keep fraction must lie in (0, 1]");
    const auto m = static_cast<std::size_t>(
        std::llround(parameter * static_cast<double>(raw.eta_a.size())));
    run = select_method2(raw, std::max<std::size_t>(1, m));
  }
  if (run.n0 == 0) return ev;  // nothing kept: infeasible candidate
  ev.measured = measure_errors(run);

  // A legal error at or beyond 1/2 cannot be reconciled by any check-bit
  // count in this model.
  if (ev.measured.legal_error >= 0.5) return ev;

  const std::optional<std::int64_t> n0 = minimal_block_length(
      problem.ell, ev.measured.eavesdropper_error, ev.measured.legal_error,
      problem.leakage_target, problem.ped_target, problem.n0_cap, problem.diversity_m);
  if (!n0) return ev;
  const std::optional<SecurityBudget> budget =
      make_budget(*n0, problem.ell, ev.measured.eavesdropper_error,
                  ev.measured.legal_error, problem.ped_target, problem.diversity_m);
  if (!budget) return ev;

  ev.budget = *budget;
  ev.n = static_cast<double>(*n0) / (1.0 - ev.measured.erasure_rate);
  ev.key_rate = static_cast<double>(problem.ell) / ev.n;
  ev.key_rate_n0 = static_cast<double>(problem.ell) / static_cast<double>(*n0);
  // Re-verify both constraint inequalities post hoc rather than trusting the
  // search.
  ev.feasible = ev.budget.leakage_bound <= problem.leakage_target &&
                ev.budget.decoding_bound <= problem.ped_target;
  return ev;
}

}  // namespace

CandidateEvaluation evaluate_candidate(const OptimizationProblem& problem, double parameter,
                                       std::uint64_t seed) {
  validate(problem);
  const RawSequences raw = problem.source->draw(problem.trials, seed, /*salt=*/0);
  return evaluate_on(problem, parameter, raw);
}

std::optional<OptimizationResult> optimize(const OptimizationProblem& problem,
                                           std::uint64_t seed) {
  validate(problem);
  const RawSequences raw = problem.source->draw(problem.trials, seed, /*salt=*/0);

  OptimizationResult result;
  result.all.reserve(problem.grid.size());
  bool have_best = false;
  for (double parameter : problem.grid) {
    CandidateEvaluation ev = evaluate_on(problem, parameter, raw);
    result.all.push_back(ev);
    if (!ev.feasible) continue;
    if (!have_best || ev.key_rate > result.best.key_rate ||
        (ev.key_rate == result.best.key_rate && ev.parameter < result.best.parameter)) {
      result.best = ev;
      have_best = true;
    }
  }
  if (!have_best) return std::nullopt;
  return result;
}

std::vector<double> make_grid(double start, double stop, double step) {
  if (!(step > 0.0) || stop < start)
    throw std::invalid_argument("make_grid: need step > 0 and stop >= start");
  std::vector<double> g;
  for (int k = 0;; ++k) {
    const double v = start + step * static_cast<double>(k);
    if (v > stop + 0.5 * step) break;
    g.push_back(v);
  }
  return g;
}

}  // namespace vdakey
