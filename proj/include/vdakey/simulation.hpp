#pragma once

#include <cstdint>
#include <vector>

#include "vdakey/config.hpp"
#include "vdakey/optimizer.hpp"
#include "vdakey/stats.hpp"

namespace vdakey {

// ---------------------------------------------------------------------------
// Correlation-versus-offset sweep between B's and E's functional sequences.
// The sweep is noiseless by construction: it characterizes the spatial
// decorrelation induced by the geometry alone, receiver noise being a
// property of the key-extraction stage rather than of the channel.
// ---------------------------------------------------------------------------

struct SweepRow {
  double delta_l;        // eavesdropper offset, metres
  double r_envelope;     // Pearson correlation of envelopes per interval
  double r_phase_diff;   // Pearson correlation of phase differences per pair
  std::size_t intervals; // intervals simulated at this offset
};

std::vector<SweepRow> run_correlation_sweep(const Scenario& scenario, const SweepSpec& sweep,
                                            bool parallel = true);

// Single sweep point (used for the small-offset limit).
SweepRow sweep_point(const Scenario& scenario, double delta_l, std::uint64_t salt,
                     bool parallel = true);

// ---------------------------------------------------------------------------
// Distribution report: histograms and fits for B's functionals at the
// scenario's S/N, plus the diagram-value statistics at the direct-ray
// departure direction.
// ---------------------------------------------------------------------------

struct Histogram {
  std::vector<double> edges;          // bins + 1 entries
  std::vector<std::uint64_t> counts;  // bins entries
};

Histogram make_histogram(const std::vector<double>& samples, std::size_t bins);

struct DistributionReport {
  std::size_t intervals;
  Histogram envelope_hist;
  Histogram phase_diff_hist;
  RiceFitReport envelope_rice;
  GaussianFitReport envelope_gauss;
  GaussianFitReport phase_diff_gauss;
  DiagramStatistics diagram;  // sampled at the direct-ray departure direction
};

DistributionReport run_distribution_report(const Scenario& scenario, bool parallel = true);

// ---------------------------------------------------------------------------
// End-to-end protocol demo.
//
// The post-processing budget (alpha, n0, r, hash length) is sized on the
// synthetic source at scenario.synthetic_rho -- the measured physical
// eavesdropper correlation at the default geometry does not admit a finite
// budget, see the candidate fields -- while the actual key bits come from
// the physical pipeline.  Reconciliation is idealized: B's r check bits are
// assumed decoded successfully with probability 1 - decoding_bound (the
// model has no concrete FEC), upon which A adopts B's kept string.  Both
// sides hash with a shared seeded Toeplitz matrix.
// ---------------------------------------------------------------------------

struct ProtocolRunResult {
  std::size_t intervals_used;    // physical intervals consumed
  std::size_t n0;                // kept bits banked
  std::size_t pre_fec_mismatch;  // A-vs-B disagreements before reconciliation
  bool fec_success;
  bool keys_equal;
  RandomnessReport randomness;   // on B's kept bit stream
  std::vector<int> key_a, key_b; // final hashed keys, ell bits
};

struct ProtocolDemoResult {
  CandidateEvaluation budget;  // optimizer output backing the run
  std::vector<ProtocolRunResult> runs;
  std::size_t keys_equal_count = 0;
  std::size_t randomness_pass_count = 0;
};

ProtocolDemoResult run_protocol_demo(const Scenario& scenario, std::size_t runs,
                                     bool parallel = true);

// The optimizer problem the demo (and the table command) builds from a
// scenario; exposed for reuse and testing.
OptimizationProblem make_problem(const Scenario& scenario, const TripleSource& source,
                                 int method, std::int64_t ell);

}  // namespace vdakey
