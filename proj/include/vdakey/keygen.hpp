#pragma once

#include <cstdint>
#include <vector>

namespace vdakey {

enum class Bit : unsigned char { zero = 0, one = 1, erased = 2 };

// Aligned functional sequences for the two legal users and the eavesdropper,
// one value per key interval.
struct RawSequences {
  std::vector<double> eta_a;
  std::vector<double> eta_b;
  std::vector<double> zeta_e;
};

// Outcome of bit extraction plus public erasure reconciliation over one
// batch of n intervals.
struct KeyRun {
  std::vector<double> eta_a, eta_b, zeta_e;
  std::vector<Bit> bits_a, bits_b, bits_e;   // defined on kept indices
  std::vector<std::size_t> kept_indices;     // identical for A, B and E
  std::size_t n = 0;                         // total intervals
  std::size_t n0 = 0;                        // kept count
  std::size_t n_er = 0;                      // erased count, n0 + n_er = n
};

struct ErrorReport {
  double legal_error;         // p1 (method 1) or p2 (method 2)
  double eavesdropper_error;  // conditioned p_e
  double erasure_rate;        // P_er
};

struct SelectionPolicy {
  enum class Kind { threshold_alpha, top_m };
  Kind kind = Kind::threshold_alpha;
  double alpha = 0.1;        // in units of the sample std of eta
  std::size_t m_keep = 0;    // method 2: keep the top-M magnitudes
};

// Three-way decision rule:  1 if value >= threshold, 0 if value <= -threshold,
// erased otherwise.  threshold must be >= 0.
Bit quantize_threshold(double value, double threshold);

// Method 1: A and B each erase intervals with |eta| below alpha times their
// own sample standard deviation, publicly announce the erased index sets,
// and keep the intersection of the survivors.  E extracts her bit on every
// kept index by the sign of zeta (she never erases).  An empty kept set is
// a legitimate result (n0 = 0), not an error.
KeyRun select_method1(const RawSequences& raw, double alpha_in_sigma);

// Method 2: A and B each rank indices by |eta| descending, keep their top
// m_keep, and retain the publicly agreed intersection.  Bits by sign.
KeyRun select_method2(const RawSequences& raw, std::size_t m_keep);

// Disagreement rates over the kept set.  Throws on an empty kept set.
ErrorReport measure_errors(const KeyRun& run);

struct RandomnessReport {
  double monobit_z;
  double serial_z;   // lag-1 correlation z = r1 * sqrt(n)
  double runs_z;     // Wald-Wolfowitz runs test
  bool monobit_pass;
  bool serial_pass;
  bool runs_pass;
  bool all_pass;
  std::size_t bits;
};

// Raw test statistics, no length gate (exposed for calibration tests).
double monobit_statistic(const std::vector<int>& bits);
double serial_statistic(const std::vector<int>& bits);
double runs_statistic(const std::vector<int>& bits);

// The three i.i.d. checks at the two-sided 1% level (|z| < 2.5758).
// Requires at least 1000 bits.
RandomnessReport bit_randomness_tests(const std::vector<int>& bits);

// Binary Toeplitz-matrix universal hash.  The matrix is defined by its first
// column and first row concatenated into `diagonals` (length n0 + ell - 1):
// T[i][j] = diagonals[i - j + n0 - 1], output[i] = XOR_j T[i][j] & bits[j].
std::vector<int> toeplitz_hash(const std::vector<int>& bits, std::size_t ell,
                               const std::vector<int>& diagonals);

// Seeded member of the Toeplitz family; both parties derive the same matrix
// from the shared seed.  Requires ell < bits.size().
std::vector<int> hash_key(const std::vector<int>& bits, std::size_t ell,
                          std::uint64_t seed);

}  // namespace vdakey
