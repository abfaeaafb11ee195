#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "vdakey/stats.hpp"

namespace vdakey {

class TrialRng;

// Ring array of isotropic radiators lying in the horizontal plane on a
// circle of the given radius.  Element s sits at azimuth 2*pi*s/n.
struct RingAntenna {
  int n_radiators;
  double radius;      // metres
  double wavelength;  // metres

  double wavenumber() const;  // k0 = 2 pi / lambda
};

// Validating constructor; throws std::invalid_argument on a non-physical
// configuration.
RingAntenna make_ring_antenna(int n_radiators, double radius, double wavelength);

// One random excitation: i.i.d. uniform [0, 2 pi) phase per radiator.
struct ExcitationVector {
  std::vector<double> phases;
};

ExcitationVector sample_excitation(const RingAntenna& antenna, TrialRng& rng);

// Complex far-field gain of the array in a given direction.
struct DiagramValue {
  std::complex<double> gain;

  double amplitude() const { return std::abs(gain); }
  double phase() const { return std::arg(gain); }  // (-pi, pi]
};

// Instantaneous diagram
//
//   f(phi, theta) = sum_s exp[ i ( k0 R sin(theta) cos(phi - 2 pi s / n) - psi_s ) ]
//
// with theta the polar angle from the vertical axis (theta = pi/2 points
// along the horizon) and phi the azimuth.
DiagramValue evaluate_diagram(const RingAntenna& antenna, const ExcitationVector& excitation,
                              double azimuth, double elevation);

struct DiagramStatistics {
  std::size_t samples;
  double mean_amplitude;
  GaussianFitReport in_phase;    // Gaussian fit of Re f over excitations
  GaussianFitReport quadrature;  // Gaussian fit of Im f
  RiceFitReport amplitude;       // Rice fit of |f|
  double phase_ks;               // KS distance of arg f against uniform (-pi, pi]
  double phase_ks_critical;
  bool phase_uniform_pass;
};

// Law of the diagram value at one fixed direction under random excitation,
// estimated from `samples` independent excitations.  Counter-seeded, so the
// report depends only on the arguments.
DiagramStatistics diagram_statistics(const RingAntenna& antenna, double azimuth,
                                     double elevation, std::size_t samples,
                                     std::uint64_t seed);

}  // namespace vdakey
