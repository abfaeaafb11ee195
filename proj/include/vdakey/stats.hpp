#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace vdakey {

struct CorrelationEstimate {
  double coefficient;
  std::size_t sample_count;
};

// Pearson correlation of two equal-length sequences.  Throws
// std::invalid_argument on length mismatch, fewer than two samples, or a
// degenerate (zero-variance) input.
CorrelationEstimate pearson_correlation(std::span<const double> x,
                                        std::span<const double> y);

// Probability that two zero-mean unit-variance jointly normal variables with
// correlation rho fall on opposite sides of zero:
//
//   pe(rho) = (1/pi) * atan2( sqrt(1 - rho^2), rho )
//
// i.e. the classical orthant probability 1/2 - asin(rho)/pi.
// pe_closed_form requires rho in (0, 1]; pe_closed_form_any accepts [-1, 1].
double pe_closed_form(double rho);
double pe_closed_form_any(double rho);

struct PeEstimate {
  double probability;
  double std_error;     // binomial standard error sqrt(p(1-p)/n)
  std::size_t samples;
};

// Monte Carlo estimate of the same quadrant-mismatch probability, used as an
// independent cross-check of the closed form.  Counter-seeded per trial, so
// the result depends only on (rho, n, seed).
PeEstimate pe_monte_carlo(double rho, std::size_t n, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Distribution fitting and Kolmogorov-Smirnov machinery.
// ---------------------------------------------------------------------------

// One-sample KS statistic D = sup_x |F_n(x) - F(x)| against a model CDF.
// `sorted` must be ascending.
double ks_statistic(const std::vector<double>& sorted,
                    const std::function<double(double)>& cdf);

// Large-sample critical value c(alpha)/sqrt(n) for the one-sample KS test.
// Only the 1% level is supported: c(0.01) = 1.6276.
double ks_critical_value(std::size_t n, double alpha);

double normal_cdf(double z);

struct GaussianFit {
  double mean;
  double variance;
};

struct GaussianFitReport {
  GaussianFit fit;
  double ks_statistic;
  double ks_critical;   // at the 1% level
  bool pass;
  std::size_t samples;
};

// Moment fit of a normal distribution plus a KS test of the sample against
// the fitted model.  Throws on fewer than 8 samples or zero variance.
GaussianFitReport gaussian_fit(std::vector<double> samples);

struct RiceFit {
  double nu;     // line-of-sight amplitude
  double sigma;  // per-quadrature scatter scale
};

// Exponentially scaled modified Bessel function I0(x) * exp(-|x|).
double bessel_i0_scaled(double x);

// Rice(nu, sigma) CDF evaluated by cumulative trapezoid integration of the
// density on a fixed grid; `x` outside [0, grid end] clamps to {0, 1}.
class RiceCdf {
 public:
  RiceCdf(double nu, double sigma, double x_max, std::size_t grid_points = 4096);
  double operator()(double x) const;

 private:
  double x_max_;
  double step_;
  std::vector<double> cdf_;
};

// Method-of-moments starting point:  with m2 = E[X^2], m4 = E[X^4],
//   nu^4 = 2 m2^2 - m4,   sigma^2 = (m2 - nu^2) / 2.
// When 2 m2^2 - m4 < 0 (sub-Rayleigh spread) the fit degrades to nu = 0.
RiceFit rice_fit_moments(const std::vector<double>& samples);

struct RiceFitReport {
  RiceFit moment_fit;    // method-of-moments estimate
  RiceFit fit;           // KS-refined estimate
  double ks_moment;      // KS distance of the moment fit
  double ks_statistic;   // KS distance of the refined fit
  double ks_critical;    // at the 1% level
  bool pass;
  std::size_t samples;
};

// Moment fit followed by a direct Nelder-Mead minimisation of the KS
// distance in (nu, sigma).  The envelope of a finite random phasor sum is
// only approximately Rice, and at large sample sizes the moment fit alone
// sits measurably off the empirical CDF; minimising the KS distance itself
// recovers the best Rice approximation the data admits.
RiceFitReport rice_fit(std::vector<double> samples);

}  // namespace vdakey
