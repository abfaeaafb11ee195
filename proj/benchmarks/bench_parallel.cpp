// Wall-clock comparison of the parallel and serial draw paths of both triple
// sources.  The two paths must produce bit-identical sequences (the RNG is
// counter-based, so results cannot depend on thread count); any divergence
// is reported and makes the benchmark exit non-zero.
//
// Usage: vdakey_bench [intervals]   (default 200000)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "vdakey/antenna.hpp"
#include "vdakey/channel.hpp"
#include "vdakey/sources.hpp"

using namespace vdakey;

namespace {

constexpr std::uint64_t kSeed = 20260814;

double time_draw(const TripleSource& source, std::size_t n, bool parallel,
                 RawSequences& out) {
  // Best of three repetitions; the sequences of every repetition are
  // identical by construction, so only the fastest time matters.
  double best = 1e300;
  for (int rep = 0; rep < 3; ++rep) {
    const auto start = std::chrono::steady_clock::now();
    out = source.draw(n, kSeed, /*salt=*/7, parallel);
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (s < best) best = s;
  }
  return best;
}

bool equal(const RawSequences& a, const RawSequences& b) {
  return a.eta_a == b.eta_a && a.eta_b == b.eta_b && a.zeta_e == b.zeta_e;
}

int report(const char* name, const TripleSource& source, std::size_t n) {
  RawSequences serial, parallel;
  const double t_serial = time_draw(source, n, false, serial);
  const double t_parallel = time_draw(source, n, true, parallel);
  const bool same = equal(serial, parallel);
  std::printf("%-28s %12.1f %12.1f %8.2fx   %s\n", name, t_serial * 1e3, t_parallel * 1e3,
              t_serial / t_parallel, same ? "identical" : "DIVERGED");
  return same ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 200000;

  const Geometry geometry{25.0, 3.0, 3.0, 5.0};
  const RingAntenna antenna = make_ring_antenna(6, 0.0625, 0.125);

  const SyntheticTripleSource synthetic(0.95, 100.0);
  const PhysicalTripleSource physical_env(geometry, antenna, 100.0, FunctionalKind::envelope);
  const PhysicalTripleSource physical_dpsi(geometry, antenna, 100.0,
                                           FunctionalKind::phase_difference);

  std::printf("draw of %zu intervals, best of 3 (ms)\n\n", n);
  std::printf("%-28s %12s %12s %9s   %s\n", "source", "serial", "parallel", "speedup",
              "sequences");
  int divergences = 0;
  divergences += report("synthetic rho=0.95", synthetic, n);
  divergences += report("physical envelope", physical_env, n);
  divergences += report("physical phase-difference", physical_dpsi, n);
  return divergences;
}
