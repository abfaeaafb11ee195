#include "vdakey/channel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "vdakey/rng.hpp"

namespace vdakey {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}  // namespace

RaySet trace_rays(const Geometry& geometry, Receiver receiver, double wavenumber,
                  double reflection_magnitude) {
  if (!(geometry.link_length > 0.0))
    throw std::invalid_argument("trace_rays: link_length must be positive");
  if (!(geometry.surface1_distance > 0.0) || !(geometry.surface2_distance > 0.0))
    throw std::invalid_argument("trace_rays: surface distances must be positive");
  if (!(wavenumber > 0.0))
    throw std::invalid_argument("trace_rays: wavenumber must be positive");
  if (reflection_magnitude < 0.0 || reflection_magnitude > 1.0)
    throw std::invalid_argument("trace_rays: reflection magnitude outside [0, 1]");
  if (geometry.eavesdropper_offset < 0.0 ||
      geometry.eavesdropper_offset >= geometry.link_length)
    throw std::invalid_argument("trace_rays: eavesdropper offset outside [0, link_length)");

  const double x = receiver == Receiver::legal_user
                       ? geometry.link_length
                       : geometry.link_length - geometry.eavesdropper_offset;
  if (!(x > 0.0))
    throw std::invalid_argument("trace_rays: receiver coincides with the transmitter");

  RaySet rays;
  rays.reserve(3);

  // Direct ray along the horizon.
  {
    RayPath r;
    r.path_length = x;
    r.departure_azimuth = 0.0;
    r.departure_elevation = 0.5 * kPi;
    r.attenuation = 1.0 / x;
    r.propagation_phase = wavenumber * x;
    r.reflections = 0;
    rays.push_back(r);
  }

  // One-bounce rays via the image sources at heights +-2h.  The unfolded
  // path has length d = sqrt(x^2 + (2h)^2) and departs at polar angle
  // theta = acos(+-2h/d); a reflection multiplies the gain by
  // -reflection_magnitude (the pi is folded into the propagation phase).
  const double heights[2] = {geometry.surface1_distance, geometry.surface2_distance};
  const double sign[2] = {1.0, -1.0};
  for (int k = 0; k < 2; ++k) {
    const double hh = 2.0 * heights[k];
    const double d = std::sqrt(x * x + hh * hh);
    RayPath r;
    r.path_length = d;
    r.departure_azimuth = 0.0;
    r.departure_elevation = std::acos(sign[k] * hh / d);
    r.attenuation = reflection_magnitude / d;
    r.propagation_phase = wavenumber * d + kPi;
    r.reflections = 1;
    rays.push_back(r);
  }
  return rays;
}

QuadratureObservation compose_observation(const RaySet& rays, const RingAntenna& antenna,
                                          const ExcitationVector& excitation) {
  if (rays.empty()) throw std::invalid_argument("compose_observation: empty ray set");
  // Per ray: amplitude A = attenuation * |f| and total phase
  // arg f + propagation_phase, i.e. mu_c + i mu_s = sum attenuation * f * e^{i phase}.
  double re = 0.0, im = 0.0;
  for (const RayPath& r : rays) {
    const DiagramValue f =
        evaluate_diagram(antenna, excitation, r.departure_azimuth, r.departure_elevation);
    const double c = std::cos(r.propagation_phase);
    const double s = std::sin(r.propagation_phase);
    const double fr = f.gain.real(), fi = f.gain.imag();
    re += r.attenuation * (fr * c - fi * s);
    im += r.attenuation * (fi * c + fr * s);
  }
  return {re, im};
}

QuadratureObservation add_receiver_noise(const QuadratureObservation& obs, double snr,
                                         double signal_power_reference, TrialRng& rng) {
  if (std::isinf(snr)) return obs;
  if (!(snr > 0.0)) throw std::invalid_argument("add_receiver_noise: snr must be positive");
  if (!(signal_power_reference > 0.0))
    throw std::invalid_argument("add_receiver_noise: signal power reference must be positive");
  const double sd = std::sqrt(signal_power_reference / (2.0 * snr));
  return {obs.in_phase + sd * rng.gaussian(), obs.quadrature + sd * rng.gaussian()};
}

ReciprocalPair reciprocal_pair(const RaySet& rays, const RingAntenna& antenna,
                               const ExcitationVector& excitation, double snr,
                               double signal_power_reference, TrialRng& rng) {
  const QuadratureObservation g = compose_observation(rays, antenna, excitation);
  ReciprocalPair p;
  p.at_a = add_receiver_noise(g, snr, signal_power_reference, rng);
  p.at_b = add_receiver_noise(g, snr, signal_power_reference, rng);
  return p;
}

}  // namespace vdakey
