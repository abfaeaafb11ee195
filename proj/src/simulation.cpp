#include "vdakey/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "vdakey/functionals.hpp"
#include "vdakey/parallel.hpp"
#include "vdakey/rng.hpp"

namespace vdakey {

namespace {

constexpr std::size_t kBlock = 256;
constexpr double kPi = 3.14159265358979323846264338327950288;

// Salt bases keep the independent simulation stages on disjoint substreams
// of one master seed.
constexpr std::uint64_t kSweepSaltBase = 0x100;
constexpr std::uint64_t kDistributionSalt = 0x200;
constexpr std::uint64_t kDemoSaltBase = 0x1000;

}  // namespace

SweepRow sweep_point(const Scenario& scenario, double delta_l, std::uint64_t salt,
                     bool parallel) {
  Geometry g = scenario.geometry;
  g.eavesdropper_offset = delta_l;
  const RingAntenna ant = scenario.antenna();
  const std::size_t n_int = std::max<std::size_t>(4, scenario.trials) & ~std::size_t{1};

  // Noiseless: snr = inf makes eta_A = eta_B = the legal-link functional.
  const double inf = std::numeric_limits<double>::infinity();
  const PhysicalTripleSource env_source(g, ant, inf, FunctionalKind::envelope,
                                        scenario.reflection_magnitude, false);
  const PhysicalTripleSource dpsi_source(g, ant, inf, FunctionalKind::phase_difference,
                                         scenario.reflection_magnitude, false);
  // Same (master, salt) => both sources replay the identical excitation
  // stream, so the two correlations describe the same set of intervals.
  const RawSequences env = env_source.draw(n_int, scenario.seed, salt, parallel);
  const RawSequences dpsi = dpsi_source.draw(n_int / 2, scenario.seed, salt, parallel);

  SweepRow row;
  row.delta_l = delta_l;
  row.r_envelope = pearson_correlation(env.eta_b, env.zeta_e).coefficient;
  row.r_phase_diff = pearson_correlation(dpsi.eta_b, dpsi.zeta_e).coefficient;
  row.intervals = n_int;
  return row;
}

std::vector<SweepRow> run_correlation_sweep(const Scenario& scenario, const SweepSpec& sweep,
                                            bool parallel) {
  if (!(sweep.step > 0.0) || sweep.stop < sweep.start)
    throw std::invalid_argument("run_correlation_sweep: invalid sweep spec");
  if (!(sweep.start >= 0.0) || sweep.stop >= scenario.geometry.link_length)
    throw std::invalid_argument("run_correlation_sweep: sweep outside [0, link_length)");
  std::vector<SweepRow> rows;
  for (std::size_t k = 0;; ++k) {
    const double dl = sweep.start + sweep.step * static_cast<double>(k);
    if (dl > sweep.stop + 0.5 * sweep.step) break;
    rows.push_back(sweep_point(scenario, dl, kSweepSaltBase + k, parallel));
  }
  return rows;
}

Histogram make_histogram(const std::vector<double>& samples, std::size_t bins) {
  if (samples.empty() || bins == 0)
    throw std::invalid_argument("make_histogram: empty input");
  const auto [mn, mx] = std::minmax_element(samples.begin(), samples.end());
  double lo = *mn, hi = *mx;
  if (lo == hi) hi = lo + 1.0;  // degenerate support: one wide bin
  Histogram h;
  h.edges.resize(bins + 1);
  h.counts.assign(bins, 0);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t i = 0; i <= bins; ++i)
    h.edges[i] = lo + width * static_cast<double>(i);
  for (double v : samples) {
    std::size_t idx = static_cast<std::size_t>((v - lo) / width);
    if (idx >= bins) idx = bins - 1;  // right edge belongs to the last bin
    ++h.counts[idx];
  }
  return h;
}

DistributionReport run_distribution_report(const Scenario& scenario, bool parallel) {
  if (scenario.trials < 10000)
    throw std::invalid_argument("run_distribution_report: need >= 10^4 trials");
  const RingAntenna ant = scenario.antenna();
  const double k0 = ant.wavenumber();
  const RaySet rays_b =
      trace_rays(scenario.geometry, Receiver::legal_user, k0, scenario.reflection_magnitude);
  const std::size_t n_int = scenario.trials & ~std::size_t{1};

  std::vector<QuadratureObservation> g_b(n_int);
  const std::size_t blocks = (n_int + kBlock - 1) / kBlock;
  for_blocks(blocks, parallel, [&](std::size_t b) {
    TrialRng rng(scenario.seed, stream::excitation ^ (kDistributionSalt << 16), b);
    const std::size_t lo = b * kBlock;
    const std::size_t hi = std::min(n_int, lo + kBlock);
    for (std::size_t i = lo; i < hi; ++i) {
      const ExcitationVector psi = sample_excitation(ant, rng);
      g_b[i] = compose_observation(rays_b, ant, psi);
    }
  });
  double p_ref = 0.0;
  for (const QuadratureObservation& g : g_b)
    p_ref += g.in_phase * g.in_phase + g.quadrature * g.quadrature;
  p_ref /= static_cast<double>(n_int);

  std::vector<QuadratureObservation> obs(n_int);
  for_blocks(blocks, parallel, [&](std::size_t b) {
    TrialRng rng(scenario.seed, stream::noise_b ^ (kDistributionSalt << 16), b);
    const std::size_t lo = b * kBlock;
    const std::size_t hi = std::min(n_int, lo + kBlock);
    for (std::size_t i = lo; i < hi; ++i)
      obs[i] = add_receiver_noise(g_b[i], scenario.snr, p_ref, rng);
  });

  const std::vector<double> env = envelope_sequence(obs);
  const std::vector<double> dpsi =
      phase_difference_sequence(phase_sequence(obs), scenario.overlapping_pairs);

  DistributionReport report;
  report.intervals = n_int;
  report.envelope_hist = make_histogram(env, 60);
  report.phase_diff_hist = make_histogram(dpsi, 60);
  report.envelope_rice = rice_fit(env);
  report.envelope_gauss = gaussian_fit(env);
  report.phase_diff_gauss = gaussian_fit(dpsi);
  // Diagram law at the direct-ray departure direction (azimuth 0, horizon).
  report.diagram = diagram_statistics(ant, 0.0, 0.5 * kPi, n_int, scenario.seed);
  return report;
}

OptimizationProblem make_problem(const Scenario& scenario, const TripleSource& source,
                                 int method, std::int64_t ell) {
  if (method != 1 && method != 2)
    throw std::invalid_argument("make_problem: method must be 1 or 2");
  OptimizationProblem p;
  p.source = &source;
  p.ell = ell;
  p.leakage_target = scenario.leakage_target;
  p.ped_target = scenario.ped_target;
  p.trials = scenario.trials;
  p.n0_cap = scenario.n0_cap;
  p.diversity_m = scenario.diversity_antennas;
  if (method == 1) {
    p.method = SelectionPolicy::Kind::threshold_alpha;
    p.grid = make_grid(scenario.alpha_min, scenario.alpha_max, scenario.alpha_step);
  } else {
    p.method = SelectionPolicy::Kind::top_m;
    p.grid = make_grid(scenario.q_min, scenario.q_max, scenario.q_step);
  }
  return p;
}

ProtocolDemoResult run_protocol_demo(const Scenario& scenario, std::size_t runs,
                                     bool parallel) {
  if (runs == 0) throw std::invalid_argument("run_protocol_demo: runs must be >= 1");
  scenario.validate();

  // Stage 1: size the post-processing budget on the synthetic source.
  const SyntheticTripleSource synth(scenario.synthetic_rho, scenario.snr);
  const OptimizationProblem problem =
      make_problem(scenario, synth, scenario.method, scenario.key_bits);
  const std::optional<OptimizationResult> opt = optimize(problem, scenario.seed);
  if (!opt)
    throw std::runtime_error(
        "run_protocol_demo: no feasible budget at the configured synthetic rho");
  const CandidateEvaluation budget = opt->best;
  const std::size_t n0 = static_cast<std::size_t>(budget.budget.n0);
  if (n0 < 1000)
    throw std::runtime_error(
        "run_protocol_demo: budget n0 below the 1000-bit randomness-test minimum; "
        "increase key_bits");

  // Stage 2: physical bit generation at the scenario geometry.
  const RingAntenna ant = scenario.antenna();
  const PhysicalTripleSource phys(scenario.geometry, ant, scenario.snr, scenario.functional,
                                  scenario.reflection_magnitude, scenario.overlapping_pairs);

  ProtocolDemoResult out;
  out.budget = budget;
  out.runs.reserve(runs);

  for (std::size_t k = 0; k < runs; ++k) {
    ProtocolRunResult run;
    run.intervals_used = 0;

    // Bank kept bits until the budget's n0 is reached.  The draw size leans
    // on the budget's erasure rate with slack; further batches cover the
    // (physical) erasure rate exceeding the (synthetic) estimate.
    std::vector<int> bits_a, bits_b;
    bits_a.reserve(n0);
    bits_b.reserve(n0);
    std::size_t batch = 0;
    while (bits_b.size() < n0) {
      if (batch >= 16)
        throw std::runtime_error("run_protocol_demo: erasure rate far above budget");
      const std::size_t missing = n0 - bits_b.size();
      const std::size_t want = static_cast<std::size_t>(
          std::ceil(1.15 * static_cast<double>(missing) /
                    (1.0 - budget.measured.erasure_rate)));
      const std::uint64_t salt = kDemoSaltBase + k * 32 + batch;
      const RawSequences raw = phys.draw(std::max<std::size_t>(want, 64), scenario.seed,
                                         salt, parallel);
      run.intervals_used += phys.intervals_needed(raw.eta_a.size());

      KeyRun keyrun;
      if (scenario.method == 1) {
        keyrun = select_method1(raw, budget.parameter);
      } else {
        const auto m = static_cast<std::size_t>(std::llround(
            budget.parameter * static_cast<double>(raw.eta_a.size())));
        keyrun = select_method2(raw, std::max<std::size_t>(1, m));
      }
      for (std::size_t idx : keyrun.kept_indices) {
        if (bits_b.size() >= n0) break;
        bits_a.push_back(keyrun.bits_a[idx] == Bit::one ? 1 : 0);
        bits_b.push_back(keyrun.bits_b[idx] == Bit::one ? 1 : 0);
      }
      ++batch;
    }
    run.n0 = n0;

    run.pre_fec_mismatch = 0;
    for (std::size_t i = 0; i < n0; ++i)
      if (bits_a[i] != bits_b[i]) ++run.pre_fec_mismatch;

    // Stage 3: idealized reconciliation.  B's check bits let A reconstruct
    // B's string with probability >= 1 - decoding_bound; the model carries
    // no concrete decoder, so success is drawn against the bound.
    TrialRng fec_rng(scenario.seed, stream::fec, k);
    run.fec_success = fec_rng.uniform01() >= budget.budget.decoding_bound;
    if (run.fec_success) bits_a = bits_b;

    // Stage 4: privacy amplification with a shared seeded Toeplitz hash.
    TrialRng hash_rng(scenario.seed, stream::hash_seed, k);
    const std::uint64_t hash_seed = hash_rng.next_u64();
    run.key_a = hash_key(bits_a, static_cast<std::size_t>(scenario.key_bits), hash_seed);
    run.key_b = hash_key(bits_b, static_cast<std::size_t>(scenario.key_bits), hash_seed);
    run.keys_equal = run.key_a == run.key_b;

    run.randomness = bit_randomness_tests(bits_b);

    if (run.keys_equal) ++out.keys_equal_count;
    if (run.randomness.all_pass) ++out.randomness_pass_count;
    out.runs.push_back(std::move(run));
  }
  return out;
}

}  // namespace vdakey
