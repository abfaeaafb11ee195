#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "vdakey/channel.hpp"

namespace vdakey {

// Wraps an angle into (-pi, pi].
inline double wrap_angle(double a) {
  constexpr double pi = 3.14159265358979323846264338327950288;
  a = std::fmod(a, 2.0 * pi);
  if (a <= -pi) a += 2.0 * pi;
  else if (a > pi) a -= 2.0 * pi;
  return a;
}

// Scalar functionals of one observation: envelope mu = sqrt(mu_c^2 + mu_s^2)
// and carrier phase psi = atan2(mu_s, mu_c) in (-pi, pi].
inline double envelope(const QuadratureObservation& obs) {
  return std::hypot(obs.in_phase, obs.quadrature);
}

inline double phase(const QuadratureObservation& obs) {
  return std::atan2(obs.quadrature, obs.in_phase);
}

// Phase difference between two consecutive intervals, wrapped into (-pi, pi].
inline double phase_difference(double phase_next, double phase_prev) {
  return wrap_angle(phase_next - phase_prev);
}

inline std::vector<double> envelope_sequence(const std::vector<QuadratureObservation>& obs) {
  std::vector<double> out;
  out.reserve(obs.size());
  for (const QuadratureObservation& o : obs) out.push_back(envelope(o));
  return out;
}

inline std::vector<double> phase_sequence(const std::vector<QuadratureObservation>& obs) {
  std::vector<double> out;
  out.reserve(obs.size());
  for (const QuadratureObservation& o : obs) out.push_back(phase(o));
  return out;
}

// Differences of consecutive phases.  Non-overlapping pairing (the default)
// consumes intervals (0,1), (2,3), ... so successive outputs are
// statistically independent; overlapping pairing uses (0,1), (1,2), ...
inline std::vector<double> phase_difference_sequence(const std::vector<double>& phases,
                                                     bool overlapping = false) {
  if (phases.size() < 2)
    throw std::invalid_argument("phase_difference_sequence: need >= 2 phases");
  std::vector<double> out;
  if (overlapping) {
    out.reserve(phases.size() - 1);
    for (std::size_t j = 1; j < phases.size(); ++j)
      out.push_back(phase_difference(phases[j], phases[j - 1]));
  } else {
    out.reserve(phases.size() / 2);
    for (std::size_t j = 1; j < phases.size(); j += 2)
      out.push_back(phase_difference(phases[j], phases[j - 1]));
  }
  return out;
}

}  // namespace vdakey
