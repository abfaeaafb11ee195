#include "vdakey/keygen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "vdakey/rng.hpp"

namespace vdakey {

namespace {

// Two-sided 1% critical value of the standard normal.
constexpr double kZCrit1Percent = 2.5758;

double sample_std(const std::vector<double>& v) {
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(v.size()));
}

void check_aligned(const RawSequences& raw) {
  if (raw.eta_a.empty() || raw.eta_a.size() != raw.eta_b.size() ||
      raw.eta_a.size() != raw.zeta_e.size())
    throw std::invalid_argument("selection: sequences empty or misaligned");
}

// Fills bits on the kept set (sign rule for A/B on kept indices is the
// degenerate threshold 0) and the bookkeeping counts.
void finalize_run(KeyRun& run) {
  run.n = run.eta_a.size();
  run.n0 = run.kept_indices.size();
  run.n_er = run.n - run.n0;
  run.bits_e.assign(run.n, Bit::erased);
  for (std::size_t idx : run.kept_indices)
    run.bits_e[idx] = quantize_threshold(run.zeta_e[idx], 0.0);
}

}  // namespace

Bit quantize_threshold(double value, double threshold) {
  if (threshold < 0.0)
    throw std::invalid_argument("quantize_threshold: threshold must be >= 0");
  if (value >= threshold) return Bit::one;
  if (value <= -threshold) return Bit::zero;
  return Bit::erased;
}

KeyRun select_method1(const RawSequences& raw, double alpha_in_sigma) {
  check_aligned(raw);
  if (alpha_in_sigma < 0.0)
    throw std::invalid_argument("select_method1: alpha must be >= 0");

  KeyRun run;
  run.eta_a = raw.eta_a;
  run.eta_b = raw.eta_b;
  run.zeta_e = raw.zeta_e;
  const std::size_t n = run.eta_a.size();

  const double tau_a = alpha_in_sigma * sample_std(run.eta_a);
  const double tau_b = alpha_in_sigma * sample_std(run.eta_b);

  run.bits_a.resize(n);
  run.bits_b.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    run.bits_a[i] = quantize_threshold(run.eta_a[i], tau_a);
    run.bits_b[i] = quantize_threshold(run.eta_b[i], tau_b);
    if (run.bits_a[i] != Bit::erased && run.bits_b[i] != Bit::erased)
      run.kept_indices.push_back(i);
  }
  finalize_run(run);
  return run;
}

KeyRun select_method2(const RawSequences& raw, std::size_t m_keep) {
  check_aligned(raw);
  const std::size_t n = raw.eta_a.size();
  if (m_keep == 0 || m_keep > n)
    throw std::invalid_argument("select_method2: m_keep must lie in [1, n]");

  KeyRun run;
  run.eta_a = raw.eta_a;
  run.eta_b = raw.eta_b;
  run.zeta_e = raw.zeta_e;

  // Own top-M index set by |eta| descending; ties broken by index so the
  // selection is deterministic.
  auto top_m = [n, m_keep](const std::vector<double>& eta) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::nth_element(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(m_keep) - 1,
                     idx.end(), [&eta](std::size_t a, std::size_t b) {
                       const double fa = std::fabs(eta[a]), fb = std::fabs(eta[b]);
                       return fa != fb ? fa > fb : a < b;
                     });
    std::vector<char> member(n, 0);
    for (std::size_t k = 0; k < m_keep; ++k) member[idx[k]] = 1;
    return member;
  };
  const std::vector<char> in_a = top_m(run.eta_a);
  const std::vector<char> in_b = top_m(run.eta_b);

  run.bits_a.assign(n, Bit::erased);
  run.bits_b.assign(n, Bit::erased);
  for (std::size_t i = 0; i < n; ++i) {
    if (in_a[i] && in_b[i]) {
      run.bits_a[i] = quantize_threshold(run.eta_a[i], 0.0);
      run.bits_b[i] = quantize_threshold(run.eta_b[i], 0.0);
      run.kept_indices.push_back(i);
    }
  }
  finalize_run(run);
  return run;
}

ErrorReport measure_errors(const KeyRun& run) {
  if (run.n0 == 0) throw std::invalid_argument("measure_errors: empty kept set");
  std::size_t legal = 0, eavesdropper = 0;
  for (std::size_t idx : run.kept_indices) {
    if (run.bits_a[idx] != run.bits_b[idx]) ++legal;
    if (run.bits_e[idx] != run.bits_b[idx]) ++eavesdropper;
  }
  const double n0 = static_cast<double>(run.n0);
  return {static_cast<double>(legal) / n0, static_cast<double>(eavesdropper) / n0,
          static_cast<double>(run.n_er) / static_cast<double>(run.n)};
}

// ---------------------------------------------------------------------------
// Randomness tests.
// ---------------------------------------------------------------------------

double monobit_statistic(const std::vector<int>& bits) {
  if (bits.empty()) throw std::invalid_argument("monobit_statistic: empty input");
  std::int64_t ones = 0;
  for (int b : bits) ones += b ? 1 : 0;
  const double n = static_cast<double>(bits.size());
  return (2.0 * static_cast<double>(ones) - n) / std::sqrt(n);
}

double serial_statistic(const std::vector<int>& bits) {
  const std::size_t n = bits.size();
  if (n < 3) throw std::invalid_argument("serial_statistic: need >= 3 bits");
  // Lag-1 sample autocorrelation r1 (common mean, full-sample denominator),
  // scaled by sqrt(n): under i.i.d. bits, z is asymptotically standard normal.
  double mean = 0.0;
  for (int b : bits) mean += b;
  mean /= static_cast<double>(n);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = bits[i] - mean;
    den += d * d;
    if (i + 1 < n) num += d * (bits[i + 1] - mean);
  }
  if (den <= 0.0) throw std::invalid_argument("serial_statistic: constant sequence");
  return (num / den) * std::sqrt(static_cast<double>(n));
}

double runs_statistic(const std::vector<int>& bits) {
  const std::size_t n = bits.size();
  if (n < 2) throw std::invalid_argument("runs_statistic: need >= 2 bits");
  std::size_t ones = 0;
  for (int b : bits) ones += b ? 1 : 0;
  const std::size_t zeros = n - ones;
  if (ones == 0 || zeros == 0)
    throw std::invalid_argument("runs_statistic: constant sequence");
  std::size_t runs = 1;
  for (std::size_t i = 1; i < n; ++i)
    if ((bits[i] != 0) != (bits[i - 1] != 0)) ++runs;
  // Wald-Wolfowitz: mu = 2 n1 n0 / n + 1, var = (mu-1)(mu-2)/(n-1).
  const double dn = static_cast<double>(n);
  const double mu = 2.0 * static_cast<double>(ones) * static_cast<double>(zeros) / dn + 1.0;
  const double var = (mu - 1.0) * (mu - 2.0) / (dn - 1.0);
  if (var <= 0.0) throw std::invalid_argument("runs_statistic: degenerate variance");
  return (static_cast<double>(runs) - mu) / std::sqrt(var);
}

RandomnessReport bit_randomness_tests(const std::vector<int>& bits) {
  if (bits.size() < 1000)
    throw std::invalid_argument("bit_randomness_tests: need >= 1000 bits");
  RandomnessReport r;
  r.bits = bits.size();
  r.monobit_z = monobit_statistic(bits);
  r.serial_z = serial_statistic(bits);
  r.runs_z = runs_statistic(bits);
  r.monobit_pass = std::fabs(r.monobit_z) < kZCrit1Percent;
  r.serial_pass = std::fabs(r.serial_z) < kZCrit1Percent;
  r.runs_pass = std::fabs(r.runs_z) < kZCrit1Percent;
  r.all_pass = r.monobit_pass && r.serial_pass && r.runs_pass;
  return r;
}

// ---------------------------------------------------------------------------
// Toeplitz hashing.
// ---------------------------------------------------------------------------

std::vector<int> toeplitz_hash(const std::vector<int>& bits, std::size_t ell,
                               const std::vector<int>& diagonals) {
  const std::size_t n0 = bits.size();
  if (ell == 0 || ell >= n0)
    throw std::invalid_argument("toeplitz_hash: need 0 < ell < input length");
  if (diagonals.size() != n0 + ell - 1)
    throw std::invalid_argument("toeplitz_hash: diagonal vector has wrong length");
  std::vector<int> out(ell, 0);
  for (std::size_t i = 0; i < ell; ++i) {
    int acc = 0;
    for (std::size_t j = 0; j < n0; ++j)
      acc ^= diagonals[i + n0 - 1 - j] & bits[j];
    out[i] = acc;
  }
  return out;
}

std::vector<int> hash_key(const std::vector<int>& bits, std::size_t ell,
                          std::uint64_t seed) {
  const std::size_t n0 = bits.size();
  if (ell == 0 || ell >= n0)
    throw std::invalid_argument("hash_key: need 0 < ell < input length");
  TrialRng rng(seed, stream::hash_seed, 0);
  std::vector<int> diagonals(n0 + ell - 1);
  for (int& d : diagonals) d = rng.bit();
  return toeplitz_hash(bits, ell, diagonals);
}

}  // namespace vdakey
