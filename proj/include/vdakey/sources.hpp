#pragma once

#include <cstdint>

#include "vdakey/channel.hpp"
#include "vdakey/keygen.hpp"

namespace vdakey {

enum class FunctionalKind { envelope, phase_difference };

// A source of aligned (eta_A, eta_B, zeta_E) functional triples, one value
// per key interval.  `salt` decorrelates independent uses under one master
// seed; results depend only on (n, master, salt), never on thread count.
class TripleSource {
 public:
  virtual ~TripleSource() = default;
  virtual RawSequences draw(std::size_t n, std::uint64_t master, std::uint64_t salt,
                            bool parallel = true) const = 0;
};

// Correlated-Gaussian stand-in for the physical pipeline with an exactly
// controlled eavesdropper correlation.  Per interval:
//
//   x ~ N(0,1),  eta_A = x + nu_A,  eta_B = x + nu_B,   nu ~ N(0, 1/snr)
//   zeta_E = rho * x + sqrt(1 - rho^2) * w,             w ~ N(0,1)
//
// so corr(zeta_E, x) = rho exactly: rho is the eavesdropper's correlation
// with the clean channel variable, the same quantity the noiseless layout
// sweeps report when a regime is chosen.  Receiver noise then degrades the
// legal pair alone: corr(eta_A, eta_B) = 1/sigma_y^2 with
// sigma_y^2 = 1 + 1/snr, and corr(zeta_E, eta_B) = rho/sigma_y.  The
// eavesdropper's samples never depend on the legal S/N.
class SyntheticTripleSource final : public TripleSource {
 public:
  SyntheticTripleSource(double rho, double snr);
  RawSequences draw(std::size_t n, std::uint64_t master, std::uint64_t salt,
                    bool parallel = true) const override;

 private:
  double rho_;
  double snr_;
};

// Full physical pipeline: random excitation, three-ray propagation to B and
// to E, reciprocal noisy observation at A and B (E noiseless), then the
// chosen scalar functional, centered by each party's own sample mean.  The
// noise reference power is the run's empirical mean of |observation|^2 on
// the legal link.
class PhysicalTripleSource final : public TripleSource {
 public:
  PhysicalTripleSource(const Geometry& geometry, const RingAntenna& antenna, double snr,
                       FunctionalKind functional, double reflection_magnitude = 1.0,
                       bool overlapping_pairs = false);
  RawSequences draw(std::size_t n, std::uint64_t master, std::uint64_t salt,
                    bool parallel = true) const override;

  // Intervals consumed to produce n functional values.
  std::size_t intervals_needed(std::size_t n) const;

 private:
  Geometry geometry_;
  RingAntenna antenna_;
  double snr_;
  FunctionalKind functional_;
  double reflection_magnitude_;
  bool overlapping_;
};

}  // namespace vdakey
