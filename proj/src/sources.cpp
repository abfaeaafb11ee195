#include "vdakey/sources.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vdakey/functionals.hpp"
#include "vdakey/parallel.hpp"
#include "vdakey/rng.hpp"

namespace vdakey {

namespace {

constexpr std::size_t kBlock = 256;

// Folds a caller-provided salt into a stream id; low bits keep the base
// stream distinct, high bits carry the salt.
std::uint64_t salted(std::uint64_t base_stream, std::uint64_t salt) {
  return base_stream ^ (salt << 16);
}

void center_by_mean(std::vector<double>& v) {
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  for (double& x : v) x -= mean;
}

}  // namespace

SyntheticTripleSource::SyntheticTripleSource(double rho, double snr)
    : rho_(rho), snr_(snr) {
  if (!(rho > 0.0) || rho > 1.0)
    throw std::invalid_argument("SyntheticTripleSource: rho must lie in (0, 1]");
  if (!(snr > 0.0))
    throw std::invalid_argument("SyntheticTripleSource: snr must be positive");
}

RawSequences SyntheticTripleSource::draw(std::size_t n, std::uint64_t master,
                                         std::uint64_t salt, bool parallel) const {
  if (n == 0) throw std::invalid_argument("SyntheticTripleSource: n must be positive");
  RawSequences out;
  out.eta_a.resize(n);
  out.eta_b.resize(n);
  out.zeta_e.resize(n);

  const double sigma_n = std::sqrt(1.0 / snr_);
  const double residual = std::sqrt(std::max(0.0, 1.0 - rho_ * rho_));

  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  for_blocks(blocks, parallel, [&](std::size_t b) {
    TrialRng rng(master, salted(stream::synthetic, salt), b);
    const std::size_t lo = b * kBlock;
    const std::size_t hi = std::min(n, lo + kBlock);
    for (std::size_t i = lo; i < hi; ++i) {
      const double x = rng.gaussian();
      const double na = sigma_n * rng.gaussian();
      const double nb = sigma_n * rng.gaussian();
      const double w = rng.gaussian();
      out.eta_a[i] = x + na;
      out.eta_b[i] = x + nb;
      out.zeta_e[i] = rho_ * x + residual * w;
    }
  });
  return out;
}

PhysicalTripleSource::PhysicalTripleSource(const Geometry& geometry,
                                           const RingAntenna& antenna, double snr,
                                           FunctionalKind functional,
                                           double reflection_magnitude,
                                           bool overlapping_pairs)
    : geometry_(geometry),
      antenna_(antenna),
      snr_(snr),
      functional_(functional),
      reflection_magnitude_(reflection_magnitude),
      overlapping_(overlapping_pairs) {
  if (!(snr > 0.0))
    throw std::invalid_argument("PhysicalTripleSource: snr must be positive");
}

std::size_t PhysicalTripleSource::intervals_needed(std::size_t n) const {
  if (functional_ == FunctionalKind::envelope) return n;
  return overlapping_ ? n + 1 : 2 * n;
}

RawSequences PhysicalTripleSource::draw(std::size_t n, std::uint64_t master,
                                        std::uint64_t salt, bool parallel) const {
  if (n == 0) throw std::invalid_argument("PhysicalTripleSource: n must be positive");
  const std::size_t n_int = intervals_needed(n);

  const double k0 = antenna_.wavenumber();
  const RaySet rays_b = trace_rays(geometry_, Receiver::legal_user, k0, reflection_magnitude_);
  const RaySet rays_e =
      trace_rays(geometry_, Receiver::eavesdropper, k0, reflection_magnitude_);

  // Pass 1: noiseless channel gains for every interval.  The legal-link mean
  // power doubles as the S/N reference for the receiver noise.
  std::vector<QuadratureObservation> g_b(n_int), g_e(n_int);
  const std::size_t blocks = (n_int + kBlock - 1) / kBlock;
  for_blocks(blocks, parallel, [&](std::size_t b) {
    TrialRng rng(master, salted(stream::excitation, salt), b);
    const std::size_t lo = b * kBlock;
    const std::size_t hi = std::min(n_int, lo + kBlock);
    for (std::size_t i = lo; i < hi; ++i) {
      const ExcitationVector psi = sample_excitation(antenna_, rng);
      g_b[i] = compose_observation(rays_b, antenna_, psi);
      g_e[i] = compose_observation(rays_e, antenna_, psi);
    }
  });

  double p_ref = 0.0;
  for (const QuadratureObservation& g : g_b)
    p_ref += g.in_phase * g.in_phase + g.quadrature * g.quadrature;
  p_ref /= static_cast<double>(n_int);

  // Pass 2: reciprocal noisy observations at A and B; E stays noiseless.
  std::vector<QuadratureObservation> obs_a(n_int), obs_b(n_int);
  for_blocks(blocks, parallel, [&](std::size_t b) {
    TrialRng rng_a(master, salted(stream::noise_a, salt), b);
    TrialRng rng_b(master, salted(stream::noise_b, salt), b);
    const std::size_t lo = b * kBlock;
    const std::size_t hi = std::min(n_int, lo + kBlock);
    for (std::size_t i = lo; i < hi; ++i) {
      obs_a[i] = add_receiver_noise(g_b[i], snr_, p_ref, rng_a);
      obs_b[i] = add_receiver_noise(g_b[i], snr_, p_ref, rng_b);
    }
  });

  RawSequences out;
  if (functional_ == FunctionalKind::envelope) {
    out.eta_a = envelope_sequence(obs_a);
    out.eta_b = envelope_sequence(obs_b);
    out.zeta_e = envelope_sequence(g_e);
  } else {
    out.eta_a = phase_difference_sequence(phase_sequence(obs_a), overlapping_);
    out.eta_b = phase_difference_sequence(phase_sequence(obs_b), overlapping_);
    out.zeta_e = phase_difference_sequence(phase_sequence(g_e), overlapping_);
  }
  center_by_mean(out.eta_a);
  center_by_mean(out.eta_b);
  center_by_mean(out.zeta_e);
  return out;
}

}  // namespace vdakey
