#include "vdakey/security.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace vdakey {

namespace {
constexpr double kLn2 = 0.693147180559945309417232121458;
}  // namespace

double renyi_information(double n, double pe, int diversity_m) {
  if (n < 0.0) throw std::invalid_argument("renyi_information: n must be >= 0");
  if (pe < 0.0 || pe > 1.0)
    throw std::invalid_argument("renyi_information: pe outside [0, 1]");
  if (diversity_m < 1)
    throw std::invalid_argument("renyi_information: diversity_m must be >= 1");
  const double collision = pe * pe + (1.0 - pe) * (1.0 - pe);
  return n + (n / static_cast<double>(diversity_m)) * std::log2(collision);
}

double pa_leakage_bound(double n0, double ell, double t, double r) {
  const double margin = n0 - ell - t - r;
  // 2^{-margin} overflows double for margin < -1074; a hugely negative
  // margin means the bound is astronomically above 1 anyway.
  if (margin < -900.0) return std::numeric_limits<double>::infinity();
  return std::exp2(-margin) / kLn2;
}

double gallager_E0(double rho0, double p) {
  if (!(rho0 > 0.0) || !(rho0 < 1.0))
    throw std::invalid_argument("gallager_E0: rho0 must lie in (0, 1)");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("gallager_E0: p outside [0, 1]");
  const double e = 1.0 / (1.0 + rho0);
  const double bracket = std::pow(p, e) + std::pow(1.0 - p, e);
  return rho0 - (1.0 + rho0) * std::log2(bracket);
}

double gallager_exponent(double code_rate, double p) {
  if (!(code_rate > 0.0) || code_rate > 1.0)
    throw std::invalid_argument("gallager_exponent: code_rate must lie in (0, 1]");
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("gallager_exponent: p outside [0, 1]");

  const double penalty = (2.0 * code_rate - 1.0) / code_rate;
  const double lp = p > 0.0 ? std::log(p) : 0.0;
  const double lq = p < 1.0 ? std::log(1.0 - p) : 0.0;
  auto objective = [&](double rho0) {
    const double e = 1.0 / (1.0 + rho0);
    // p^e + (1-p)^e via exp(e ln p) with the p = 0 / p = 1 cases excluded.
    double bracket;
    if (p <= 0.0) bracket = std::exp(e * lq);        // = 1
    else if (p >= 1.0) bracket = std::exp(e * lp);   // = 1
    else bracket = std::exp(e * lp) + std::exp(e * lq);
    const double e0 = rho0 - (1.0 + rho0) * std::log2(bracket);
    return e0 - rho0 * penalty;
  };

  // Dense scan of the open interval, then ternary refinement around the
  // best grid point.
  constexpr double kStep = 1e-4;
  double best = -std::numeric_limits<double>::infinity();
  double best_rho = kStep;
  for (int k = 1; k <= 9999; ++k) {
    const double rho0 = kStep * static_cast<double>(k);
    const double v = objective(rho0);
    if (v > best) {
      best = v;
      best_rho = rho0;
    }
  }
  double lo = std::max(best_rho - kStep, 1e-9);
  double hi = std::min(best_rho + kStep, 1.0 - 1e-9);
  for (int it = 0; it < 100; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (objective(m1) < objective(m2)) lo = m1;
    else hi = m2;
  }
  best = std::max(best, objective(0.5 * (lo + hi)));
  return best > 0.0 ? best : 0.0;
}

double decoding_error_bound(std::int64_t n0, std::int64_t r, double p) {
  if (n0 < 1) throw std::invalid_argument("decoding_error_bound: n0 must be >= 1");
  if (r < 0) throw std::invalid_argument("decoding_error_bound: r must be >= 0");
  const double code_rate =
      static_cast<double>(n0) / static_cast<double>(n0 + r);
  const double e = gallager_exponent(code_rate, p);
  const double expo = static_cast<double>(n0) * e;
  if (expo > 1074.0) return 0.0;
  const double bound = std::exp2(-expo);
  return bound < 1.0 ? bound : 1.0;
}

std::optional<std::int64_t> min_check_bits(std::int64_t n0, double p, double target_ped) {
  if (!(target_ped > 0.0) || !(target_ped < 1.0))
    throw std::invalid_argument("min_check_bits: target must lie in (0, 1)");
  if (p < 0.0 || !(p < 0.5))
    throw std::invalid_argument("min_check_bits: p must lie in [0, 0.5)");
  if (n0 < 1) throw std::invalid_argument("min_check_bits: n0 must be >= 1");
  if (p == 0.0) return 0;  // noiseless legal channel: nothing to correct

  const std::int64_t r_max = 20 * n0;
  if (decoding_error_bound(n0, r_max, p) > target_ped) return std::nullopt;
  std::int64_t lo = 0, hi = r_max;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (decoding_error_bound(n0, mid, p) <= target_ped) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

std::optional<SecurityBudget> make_budget(std::int64_t n0, std::int64_t ell,
                                          double eavesdropper_error, double legal_error,
                                          double ped_target, int diversity_m) {
  if (ell < 1 || n0 <= ell) return std::nullopt;
  const std::optional<std::int64_t> r = min_check_bits(n0, legal_error, ped_target);
  if (!r) return std::nullopt;
  SecurityBudget b;
  b.n0 = n0;
  b.ell = ell;
  b.check_bits = *r;
  b.renyi_t = renyi_information(static_cast<double>(n0), eavesdropper_error, diversity_m);
  b.code_rate = static_cast<double>(n0) / static_cast<double>(n0 + *r);
  b.exponent = gallager_exponent(b.code_rate, legal_error);
  b.decoding_bound = decoding_error_bound(n0, *r, legal_error);
  b.leakage_bound = pa_leakage_bound(static_cast<double>(n0), static_cast<double>(ell),
                                     b.renyi_t, static_cast<double>(*r));
  return b;
}

std::optional<std::int64_t> minimal_block_length(std::int64_t ell, double eavesdropper_error,
                                                 double legal_error, double leakage_target,
                                                 double ped_target, std::int64_t n0_cap,
                                                 int diversity_m) {
  if (ell < 1) throw std::invalid_argument("minimal_block_length: ell must be >= 1");
  if (!(leakage_target > 0.0))
    throw std::invalid_argument("minimal_block_length: leakage target must be positive");

  auto feasible = [&](std::int64_t n0) {
    const std::optional<SecurityBudget> b =
        make_budget(n0, ell, eavesdropper_error, legal_error, ped_target, diversity_m);
    return b && b->leakage_bound <= leakage_target;
  };

  // Grow until feasible, then bisect the smallest feasible n0 inside the
  // last doubling step.  Feasibility is monotone in n0 in the regime of
  // interest: the privacy-amplification margin grows linearly in n0 while
  // ell is fixed and r/n0 tends to a constant below the per-bit margin.
  std::int64_t hi = ell + 1;
  while (hi <= n0_cap && !feasible(hi)) hi *= 2;
  if (hi > n0_cap) return std::nullopt;
  std::int64_t lo = hi / 2;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (feasible(mid)) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

}  // namespace vdakey
