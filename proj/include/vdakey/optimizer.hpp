#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vdakey/keygen.hpp"
#include "vdakey/security.hpp"
#include "vdakey/sources.hpp"

namespace vdakey {

struct OptimizationProblem {
  const TripleSource* source = nullptr;  // non-owning
  std::int64_t ell = 128;
  double leakage_target = 1e-9;
  double ped_target = 1e-5;
  SelectionPolicy::Kind method = SelectionPolicy::Kind::threshold_alpha;
  // Grid of alpha values (threshold method) or keep fractions in (0, 1]
  // (top-M method; m_keep = round(fraction * trials)).
  std::vector<double> grid;
  std::size_t trials = 200000;
  std::int64_t n0_cap = 4000000;
  int diversity_m = 1;
};

struct CandidateEvaluation {
  double parameter = 0.0;
  ErrorReport measured{0.0, 0.0, 0.0};
  SecurityBudget budget;
  double n = 0.0;            // expected intervals to bank n0 kept bits: n0 / (1 - P_er)
  double key_rate = 0.0;     // ell / n
  double key_rate_n0 = 0.0;  // ell / n0, the alternative convention
  bool feasible = false;
};

// Simulates the pipeline at one parameter value: draws the triple sequences,
// applies the selection method, measures (legal error, conditioned
// eavesdropper error, erasure rate), finds the minimal n0 meeting both the
// leakage and decoding targets, and prices the result in key rate.  All
// candidates under one seed share the same drawn data (common random
// numbers), which removes draw noise from candidate comparisons.
CandidateEvaluation evaluate_candidate(const OptimizationProblem& problem, double parameter,
                                       std::uint64_t seed);

struct OptimizationResult {
  CandidateEvaluation best;
  std::vector<CandidateEvaluation> all;  // one entry per grid point, in order
};

// Grid search maximizing key_rate over feasible candidates; ties break
// toward the smaller parameter (fewer erasures).  nullopt when no grid
// point is feasible.
std::optional<OptimizationResult> optimize(const OptimizationProblem& problem,
                                           std::uint64_t seed);

// Inclusive numeric grid {start, start+step, ...} capped at stop (+tiny slack
// for rounding).
std::vector<double> make_grid(double start, double stop, double step);

}  // namespace vdakey
