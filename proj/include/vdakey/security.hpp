#pragma once

#include <cstdint>
#include <optional>

namespace vdakey {

// Everything needed to judge one post-processing configuration.
struct SecurityBudget {
  std::int64_t n0 = 0;          // kept bits entering post-processing
  std::int64_t ell = 0;         // final key length
  double renyi_t = 0.0;         // eavesdropper Renyi (collision) information, bits
  std::int64_t check_bits = 0;  // r, transmitted over the public channel
  double code_rate = 1.0;       // R_C = n0 / (n0 + r)
  double exponent = 0.0;        // E(R_C)
  double leakage_bound = 0.0;   // Shannon-information bound on the final key, bits
  double decoding_bound = 0.0;  // P_ed bound
};

struct DiversityConfig {
  int antenna_count = 1;  // m receive antennas combined at B
};

// Renyi information available to the eavesdropper about n key bits observed
// through a BSC(pe):
//
//   t = n + (n/m) log2( pe^2 + (1-pe)^2 )
//
// m = 1 is the single-antenna case; m > 1 models receive diversity where
// only a 1/m fraction of the collision term accrues.
double renyi_information(double n, double pe, int diversity_m = 1);

// Privacy-amplification leakage bound after hashing n0 bits to ell, with the
// eavesdropper holding t bits of Renyi information plus r publicly revealed
// check bits:
//
//   I <= 2^{-(n0 - ell - t - r)} / ln 2
//
// The bound may exceed 1; it is returned as-is (callers compare to targets).
double pa_leakage_bound(double n0, double ell, double t, double r = 0.0);

// Gallager's E0 function of a BSC(p) at parameter rho0 in (0, 1):
//   E0 = rho0 - (1 + rho0) log2[ p^{1/(1+rho0)} + (1-p)^{1/(1+rho0)} ]
double gallager_E0(double rho0, double p);

// Random-coding exponent with the systematic-code rate penalty,
//   E(R_C) = max_{rho0 in (0,1)} [ E0(rho0, p) - rho0 (2 R_C - 1) / R_C ],
// maximized on a 1e-4 grid and refined by ternary search, clamped to >= 0.
double gallager_exponent(double code_rate, double p);

// P_ed <= 2^{-n0 E(R_C)} with R_C = n0 / (n0 + r), clamped to <= 1.
double decoding_error_bound(std::int64_t n0, std::int64_t r, double p);

// Smallest r with decoding_error_bound(n0, r, p) <= target_ped, searched on
// [0, 20 n0].  p = 0 needs no check bits.  Returns nullopt when even the
// largest allowed r misses the target.
std::optional<std::int64_t> min_check_bits(std::int64_t n0, double p, double target_ped);

// Smallest n0 such that a feasible budget exists for the measured error
// pair: r = min_check_bits(n0, legal_error, ped_target) and
// pa_leakage_bound(n0, ell, t(n0, eavesdropper_error), r) <= leakage_target.
// Searched by doubling plus bisection; nullopt if nothing <= n0_cap works.
std::optional<std::int64_t> minimal_block_length(std::int64_t ell, double eavesdropper_error,
                                                 double legal_error, double leakage_target,
                                                 double ped_target, std::int64_t n0_cap,
                                                 int diversity_m = 1);

// Assembles the full budget at a given n0 (re-deriving r); nullopt if the
// check-bit search is infeasible.  Does NOT enforce the leakage target --
// callers inspect leakage_bound themselves.
std::optional<SecurityBudget> make_budget(std::int64_t n0, std::int64_t ell,
                                          double eavesdropper_error, double legal_error,
                                          double ped_target, int diversity_m = 1);

}  // namespace vdakey
