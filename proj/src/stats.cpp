#include "vdakey/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vdakey/rng.hpp"

namespace vdakey {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}  // namespace

CorrelationEstimate pearson_correlation(std::span<const double> x,
                                        std::span<const double> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("pearson_correlation: length mismatch");
  const std::size_t n = x.size();
  if (n < 2) throw std::invalid_argument("pearson_correlation: need >= 2 samples");

  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);

  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0)
    throw std::invalid_argument("pearson_correlation: degenerate (constant) input");
  return {sxy / std::sqrt(sxx * syy), n};
}

double pe_closed_form_any(double rho) {
  if (rho < -1.0 || rho > 1.0)
    throw std::invalid_argument("pe_closed_form_any: rho outside [-1, 1]");
  // atan2 handles the endpoints: rho = 1 -> 0, rho = -1 -> 1, rho = 0 -> 1/2.
  return std::atan2(std::sqrt(std::max(0.0, 1.0 - rho * rho)), rho) / kPi;
}

double pe_closed_form(double rho) {
  if (!(rho > 0.0) || rho > 1.0)
    throw std::invalid_argument("pe_closed_form: rho must lie in (0, 1]");
  return pe_closed_form_any(rho);
}

PeEstimate pe_monte_carlo(double rho, std::size_t n, std::uint64_t seed) {
  if (rho < -1.0 || rho > 1.0)
    throw std::invalid_argument("pe_monte_carlo: rho outside [-1, 1]");
  if (n == 0) throw std::invalid_argument("pe_monte_carlo: n must be positive");

  const double c = std::sqrt(std::max(0.0, 1.0 - rho * rho));
  // Trials are grouped into fixed blocks, one counter-derived stream per
  // block, so the estimate is reproducible and independent of threading.
  constexpr std::size_t kBlock = 4096;
  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  std::int64_t mismatches = 0;

#pragma omp parallel for schedule(static) reduction(+ : mismatches)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
    TrialRng rng(seed, stream::pe_monte_carlo, static_cast<std::uint64_t>(b));
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    const std::size_t hi = std::min(n, lo + kBlock);
    std::int64_t local = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      const double x = rng.gaussian();
      const double y = rho * x + c * rng.gaussian();
      local += ((x > 0.0) != (y > 0.0)) ? 1 : 0;
    }
    mismatches += local;
  }

  const double p = static_cast<double>(mismatches) / static_cast<double>(n);
  const double se = std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(n));
  return {p, se, n};
}

// ---------------------------------------------------------------------------
// KS machinery.
// ---------------------------------------------------------------------------

double ks_statistic(const std::vector<double>& sorted,
                    const std::function<double(double)>& cdf) {
  const std::size_t n = sorted.size();
  if (n == 0) throw std::invalid_argument("ks_statistic: empty sample");
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = cdf(sorted[i]);
    const double lo = static_cast<double>(i) / static_cast<double>(n);
    const double hi = static_cast<double>(i + 1) / static_cast<double>(n);
    d = std::max(d, std::max(f - lo, hi - f));
  }
  return d;
}

double ks_critical_value(std::size_t n, double alpha) {
  if (n == 0) throw std::invalid_argument("ks_critical_value: n must be positive");
  // c(alpha) = sqrt(-ln(alpha/2)/2); pinned to the 1% table value used
  // throughout: c(0.01) = 1.6276.
  if (alpha != 0.01)
    throw std::invalid_argument("ks_critical_value: only the 1% level is supported");
  return 1.6276 / std::sqrt(static_cast<double>(n));
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

GaussianFitReport gaussian_fit(std::vector<double> samples) {
  const std::size_t n = samples.size();
  if (n < 8) throw std::invalid_argument("gaussian_fit: need >= 8 samples");
  double mean = 0.0;
  for (double v : samples) mean += v;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double v : samples) var += (v - mean) * (v - mean);
  var /= static_cast<double>(n);
  if (var <= 0.0) throw std::invalid_argument("gaussian_fit: zero variance");

  std::sort(samples.begin(), samples.end());
  const double sd = std::sqrt(var);
  const double d = ks_statistic(
      samples, [mean, sd](double x) { return normal_cdf((x - mean) / sd); });
  const double crit = ks_critical_value(n, 0.01);
  return {{mean, var}, d, crit, d < crit, n};
}

// ---------------------------------------------------------------------------
// Rice fitting.
// ---------------------------------------------------------------------------

double bessel_i0_scaled(double x) {
  // Abramowitz & Stegun 9.8.1 / 9.8.2 polynomial approximations,
  // |error| < 2e-7, which is far below the KS resolution they feed.
  const double ax = std::fabs(x);
  if (ax < 3.75) {
    const double t = ax / 3.75;
    const double t2 = t * t;
    const double i0 =
        1.0 + t2 * (3.5156229 +
                    t2 * (3.0899424 +
                          t2 * (1.2067492 +
                                t2 * (0.2659732 + t2 * (0.0360768 + t2 * 0.0045813)))));
    return i0 * std::exp(-ax);
  }
  const double t = 3.75 / ax;
  const double poly =
      0.39894228 +
      t * (0.01328592 +
           t * (0.00225319 +
                t * (-0.00157565 +
                     t * (0.00916281 +
                          t * (-0.02057706 +
                               t * (0.02635537 + t * (-0.01647633 + t * 0.00392377)))))));
  return poly / std::sqrt(ax);
}

namespace {

double rice_pdf(double x, double nu, double sigma) {
  if (x <= 0.0) return 0.0;
  const double s2 = sigma * sigma;
  const double z = x * nu / s2;
  // pdf = (x/s2) exp(-(x-nu)^2 / (2 s2)) * [I0(z) e^{-z}]
  const double e = -(x - nu) * (x - nu) / (2.0 * s2);
  return (x / s2) * std::exp(e) * bessel_i0_scaled(z);
}

}  // namespace

RiceCdf::RiceCdf(double nu, double sigma, double x_max, std::size_t grid_points)
    : x_max_(x_max) {
  if (!(sigma > 0.0) || nu < 0.0 || !(x_max > 0.0) || grid_points < 16)
    throw std::invalid_argument("RiceCdf: bad parameters");
  step_ = x_max_ / static_cast<double>(grid_points);
  cdf_.resize(grid_points + 1);
  cdf_[0] = 0.0;
  double prev = rice_pdf(0.0, nu, sigma);
  for (std::size_t i = 1; i <= grid_points; ++i) {
    const double x = step_ * static_cast<double>(i);
    const double cur = rice_pdf(x, nu, sigma);
    cdf_[i] = cdf_[i - 1] + 0.5 * (prev + cur) * step_;
    prev = cur;
  }
  // Normalise away the truncated tail mass (negligible when x_max covers
  // nu + ~10 sigma, but keeps the function a proper CDF regardless).
  const double total = cdf_.back();
  if (total > 0.0)
    for (double& v : cdf_) v /= total;
}

double RiceCdf::operator()(double x) const {
  if (x <= 0.0) return 0.0;
  if (x >= x_max_) return 1.0;
  const double u = x / step_;
  const std::size_t i = static_cast<std::size_t>(u);
  const double frac = u - static_cast<double>(i);
  return cdf_[i] + frac * (cdf_[i + 1] - cdf_[i]);
}

RiceFit rice_fit_moments(const std::vector<double>& samples) {
  const std::size_t n = samples.size();
  if (n < 8) throw std::invalid_argument("rice_fit_moments: need >= 8 samples");
  double m2 = 0.0, m4 = 0.0;
  for (double v : samples) {
    if (v < 0.0) throw std::invalid_argument("rice_fit_moments: negative sample");
    const double v2 = v * v;
    m2 += v2;
    m4 += v2 * v2;
  }
  m2 /= static_cast<double>(n);
  m4 /= static_cast<double>(n);
  const double nu4 = 2.0 * m2 * m2 - m4;
  const double nu = nu4 > 0.0 ? std::pow(nu4, 0.25) : 0.0;
  const double s2 = std::max(1e-12, 0.5 * (m2 - nu * nu));
  return {nu, std::sqrt(s2)};
}

namespace {

// KS distance of a sorted sample against Rice(nu, sigma).
double rice_ks(const std::vector<double>& sorted, double nu, double sigma) {
  const double x_max = std::max(sorted.back() * 1.05, nu + 10.0 * sigma);
  const RiceCdf cdf(nu, sigma, x_max);
  return ks_statistic(sorted, [&cdf](double x) { return cdf(x); });
}

// Compact 2-d Nelder-Mead on (nu, sigma), deterministic, positivity-clamped.
RiceFit nelder_mead_rice(const std::vector<double>& sorted, RiceFit start) {
  struct Pt {
    double nu, sigma, f;
  };
  auto eval = [&sorted](double nu, double sigma) {
    nu = std::max(nu, 0.0);
    sigma = std::max(sigma, 1e-9);
    return rice_ks(sorted, nu, sigma);
  };
  Pt s[3] = {{start.nu, start.sigma, 0.0},
             {start.nu * 1.05 + 1e-3, start.sigma, 0.0},
             {start.nu, start.sigma * 1.05, 0.0}};
  for (Pt& p : s) p.f = eval(p.nu, p.sigma);

  for (int iter = 0; iter < 200; ++iter) {
    std::sort(s, s + 3, [](const Pt& a, const Pt& b) { return a.f < b.f; });
    if (std::fabs(s[2].f - s[0].f) < 1e-7 &&
        std::fabs(s[2].nu - s[0].nu) + std::fabs(s[2].sigma - s[0].sigma) < 1e-7)
      break;
    const double cn = 0.5 * (s[0].nu + s[1].nu);
    const double cs = 0.5 * (s[0].sigma + s[1].sigma);
    Pt r{cn + (cn - s[2].nu), cs + (cs - s[2].sigma), 0.0};
    r.f = eval(r.nu, r.sigma);
    if (r.f < s[0].f) {
      Pt e{cn + 2.0 * (cn - s[2].nu), cs + 2.0 * (cs - s[2].sigma), 0.0};
      e.f = eval(e.nu, e.sigma);
      s[2] = e.f < r.f ? e : r;
    } else if (r.f < s[1].f) {
      s[2] = r;
    } else {
      Pt c{cn + 0.5 * (s[2].nu - cn), cs + 0.5 * (s[2].sigma - cs), 0.0};
      c.f = eval(c.nu, c.sigma);
      if (c.f < s[2].f) {
        s[2] = c;
      } else {
        for (int i = 1; i < 3; ++i) {
          s[i].nu = s[0].nu + 0.5 * (s[i].nu - s[0].nu);
          s[i].sigma = s[0].sigma + 0.5 * (s[i].sigma - s[0].sigma);
          s[i].f = eval(s[i].nu, s[i].sigma);
        }
      }
    }
  }
  std::sort(s, s + 3, [](const Pt& a, const Pt& b) { return a.f < b.f; });
  return {std::max(s[0].nu, 0.0), std::max(s[0].sigma, 1e-9)};
}

}  // namespace

RiceFitReport rice_fit(std::vector<double> samples) {
  const RiceFit mom = rice_fit_moments(samples);
  std::sort(samples.begin(), samples.end());
  const double d_mom = rice_ks(samples, mom.nu, mom.sigma);
  const RiceFit refined = nelder_mead_rice(samples, mom);
  const double d_ref = rice_ks(samples, refined.nu, refined.sigma);
  const double crit = ks_critical_value(samples.size(), 0.01);
  RiceFitReport report;
  report.moment_fit = mom;
  report.fit = refined;
  report.ks_moment = d_mom;
  report.ks_statistic = d_ref;
  report.ks_critical = crit;
  report.pass = d_ref < crit;
  report.samples = samples.size();
  return report;
}

}  // namespace vdakey
