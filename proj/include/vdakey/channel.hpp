#pragma once

#include <vector>

#include "vdakey/antenna.hpp"

namespace vdakey {

class TrialRng;

// Planar link geometry.  Transmitter A sits at the origin with its ring in
// the horizontal plane; legal receiver B lies on the x axis at link_length;
// the eavesdropper E lies on the same axis closer to A by
// eavesdropper_offset.  Two horizontal reflecting surfaces (e.g. floor and
// ceiling) run parallel to the link at the given vertical distances.
struct Geometry {
  double link_length;          // |AB| in metres
  double surface1_distance;    // metres to the upper surface
  double surface2_distance;    // metres to the lower surface
  double eavesdropper_offset;  // Delta l, metres (E at link_length - offset)
};

enum class Receiver { legal_user, eavesdropper };

// One propagation path from A to the receiver, reflections unfolded by the
// image-source construction.
struct RayPath {
  double path_length;         // metres
  double departure_azimuth;   // radians
  double departure_elevation; // polar angle from vertical, radians
  double attenuation;         // |gain| = reflection_magnitude^reflections / d
  double propagation_phase;   // k0 d + pi per reflection, radians (unwrapped)
  int reflections;
};

using RaySet = std::vector<RayPath>;

// Builds the three-ray set (direct, one bounce off each surface) for the
// requested receiver.  Each reflection contributes a factor
// -reflection_magnitude, i.e. a pi phase jump, to the ray gain.  Throws if
// the receiver coincides with the transmitter.
RaySet trace_rays(const Geometry& geometry, Receiver receiver, double wavenumber,
                  double reflection_magnitude = 1.0);

// Complex baseband observation in quadrature components.
struct QuadratureObservation {
  double in_phase;
  double quadrature;
};

// Sum over rays of (attenuation * f(direction) * e^{i propagation_phase}):
// the instantaneous antenna diagram sampled at each ray's departure
// direction, weighted by the ray gain.
QuadratureObservation compose_observation(const RaySet& rays, const RingAntenna& antenna,
                                          const ExcitationVector& excitation);

// Additive white Gaussian receiver noise.  Per-quadrature variance is
// signal_power_reference / (2 * snr), so `snr` is the usual ratio of mean
// signal power to total complex-noise power.  snr = +infinity returns the
// observation untouched.
QuadratureObservation add_receiver_noise(const QuadratureObservation& obs, double snr,
                                         double signal_power_reference, TrialRng& rng);

// One reciprocal sounding: A and B observe the same complex channel gain
// (identical rays, identical excitation) with independent receiver noise.
struct ReciprocalPair {
  QuadratureObservation at_a;
  QuadratureObservation at_b;
};

ReciprocalPair reciprocal_pair(const RaySet& rays, const RingAntenna& antenna,
                               const ExcitationVector& excitation, double snr,
                               double signal_power_reference, TrialRng& rng);

}  // namespace vdakey
