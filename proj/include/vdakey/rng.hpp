#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace vdakey {

// splitmix64 finalizer.  Used to turn (master seed, stream id, trial counter)
// into well-separated engine seeds so that every trial owns an independent
// substream.  Results of a run therefore do not depend on how trials are
// scheduled across threads.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Deterministic per-trial random stream.
//
// The engine seed is derived as
//   seed = splitmix64( splitmix64(master ^ mix(stream)) ^ counter )
// so distinct (master, stream, counter) triples give unrelated sequences.
// All floating-point draws are hand-mapped from raw 64-bit words: the C++
// standard does not pin down std::uniform_real_distribution or
// std::normal_distribution bit-for-bit across library versions, and we want
// byte-stable outputs.
class TrialRng {
 public:
  TrialRng(std::uint64_t master, std::uint64_t stream, std::uint64_t counter)
      : engine_(splitmix64(splitmix64(master ^ splitmix64(stream)) ^ counter)) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Standard normal via Box-Muller (one value per call, no cached spare, so
  // the draw sequence is independent of call pairing).
  double gaussian() {
    double u1 = 1.0 - uniform01();  // (0, 1]
    double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  double gaussian(double mean, double stddev) { return mean + stddev * gaussian(); }

  // Random bit with P(1) = 1/2.
  int bit() { return static_cast<int>(engine_() >> 63); }

 private:
  std::mt19937_64 engine_;
};

// Stream ids keep logically different random uses out of each other's way
// even when they share a master seed and trial counter.
namespace stream {
inline constexpr std::uint64_t excitation = 0x01;
inline constexpr std::uint64_t noise_a = 0x02;
inline constexpr std::uint64_t noise_b = 0x03;
inline constexpr std::uint64_t synthetic = 0x04;
inline constexpr std::uint64_t pe_monte_carlo = 0x05;
inline constexpr std::uint64_t hash_seed = 0x06;
inline constexpr std::uint64_t fec = 0x07;
inline constexpr std::uint64_t diagram = 0x08;
}  // namespace stream

}  // namespace vdakey
