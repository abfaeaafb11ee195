#include "vdakey/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vdakey/rng.hpp"

namespace vdakey {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

double RingAntenna::wavenumber() const { return kTwoPi / wavelength; }

RingAntenna make_ring_antenna(int n_radiators, double radius, double wavelength) {
  if (n_radiators < 1)
    throw std::invalid_argument("make_ring_antenna: need at least one radiator");
  if (!(radius > 0.0))
    throw std::invalid_argument("make_ring_antenna: radius must be positive");
  if (!(wavelength > 0.0))
    throw std::invalid_argument("make_ring_antenna: wavelength must be positive");
  return {n_radiators, radius, wavelength};
}

ExcitationVector sample_excitation(const RingAntenna& antenna, TrialRng& rng) {
  ExcitationVector e;
  e.phases.resize(static_cast<std::size_t>(antenna.n_radiators));
  for (double& psi : e.phases) psi = rng.uniform(0.0, kTwoPi);
  return e;
}

DiagramValue evaluate_diagram(const RingAntenna& antenna, const ExcitationVector& excitation,
                              double azimuth, double elevation) {
  const std::size_t n = static_cast<std::size_t>(antenna.n_radiators);
  if (excitation.phases.size() != n)
    throw std::invalid_argument("evaluate_diagram: excitation size mismatch");
  const double kr_sin = antenna.wavenumber() * antenna.radius * std::sin(elevation);
  double re = 0.0, im = 0.0;
  // Radiator s (1-based) sits at azimuth 2 pi s / n and carries phase psi_s.
  for (std::size_t s = 1; s <= n; ++s) {
    const double element_azimuth = kTwoPi * static_cast<double>(s) / static_cast<double>(n);
    const double arg = kr_sin * std::cos(azimuth - element_azimuth) - excitation.phases[s - 1];
    re += std::cos(arg);
    im += std::sin(arg);
  }
  return {std::complex<double>(re, im)};
}

DiagramStatistics diagram_statistics(const RingAntenna& antenna, double azimuth,
                                     double elevation, std::size_t samples,
                                     std::uint64_t seed) {
  if (samples < 64)
    throw std::invalid_argument("diagram_statistics: need >= 64 samples");

  std::vector<double> re(samples), im(samples), amp(samples), ph(samples);

  constexpr std::size_t kBlock = 1024;
  const std::size_t blocks = (samples + kBlock - 1) / kBlock;
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
    TrialRng rng(seed, stream::diagram, static_cast<std::uint64_t>(b));
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    const std::size_t hi = std::min(samples, lo + kBlock);
    for (std::size_t i = lo; i < hi; ++i) {
      const ExcitationVector e = sample_excitation(antenna, rng);
      const DiagramValue f = evaluate_diagram(antenna, e, azimuth, elevation);
      re[i] = f.gain.real();
      im[i] = f.gain.imag();
      amp[i] = f.amplitude();
      ph[i] = f.phase();
    }
  }

  DiagramStatistics out;
  out.samples = samples;
  double mean_amp = 0.0;
  for (double a : amp) mean_amp += a;
  out.mean_amplitude = mean_amp / static_cast<double>(samples);
  out.in_phase = gaussian_fit(re);
  out.quadrature = gaussian_fit(im);
  out.amplitude = rice_fit(std::move(amp));

  std::sort(ph.begin(), ph.end());
  out.phase_ks =
      ks_statistic(ph, [](double x) { return (x + kPi) / kTwoPi; });
  out.phase_ks_critical = ks_critical_value(samples, 0.01);
  out.phase_uniform_pass = out.phase_ks < out.phase_ks_critical;
  return out;
}

}  // namespace vdakey
