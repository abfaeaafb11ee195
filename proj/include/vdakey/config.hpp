#pragma once

#include <cstdint>
#include <string>

#include "vdakey/channel.hpp"
#include "vdakey/sources.hpp"

namespace vdakey {

struct SweepSpec {
  double start = 3.0;
  double stop = 22.0;
  double step = 1.0;
};

// One experiment description.  Defaults reproduce the reference indoor
// setup: a 25 m link between two surfaces 3 m away, six radiators on a
// half-wavelength ring at 12.5 cm wavelength, S/N = 100.
struct Scenario {
  Geometry geometry{25.0, 3.0, 3.0, 5.0};
  int elements = 6;
  double wavelength = 0.125;
  double radius = 0.0625;
  double snr = 100.0;
  double reflection_magnitude = 1.0;

  FunctionalKind functional = FunctionalKind::phase_difference;
  bool overlapping_pairs = false;
  int method = 1;            // 1 = threshold, 2 = top-M
  double alpha = 0.1;        // method-1 threshold, in sample-std units
  double keep_fraction = 0.9;  // method-2 kept share of intervals

  std::int64_t key_bits = 128;  // ell
  double leakage_target = 1e-9;
  double ped_target = 1e-5;
  int diversity_antennas = 1;

  std::size_t trials = 200000;
  std::uint64_t seed = 20260814;
  double synthetic_rho = 0.95;
  std::int64_t n0_cap = 4000000;

  // Optimizer grids.
  double alpha_min = 0.05, alpha_max = 0.30, alpha_step = 0.01;
  double q_min = 0.80, q_max = 0.94, q_step = 0.01;

  // Sweep and curve grids.
  SweepSpec sweep;
  double rho_min = 0.01, rho_max = 0.99, rho_step = 0.01;

  std::size_t demo_runs = 1;
  std::string out_dir = ".";

  RingAntenna antenna() const;  // validated construction
  void validate() const;        // cross-field checks, throws on violation
};

// Applies one `key = value` override; throws std::invalid_argument for an
// unknown key or an unparsable value.
void apply_setting(Scenario& scenario, const std::string& key, const std::string& value);

// Loads a flat key = value file ('#' or ';' comments, optional [section]
// headers which are ignored).  Unknown keys are errors: a config file is an
// experiment record and typos must not pass silently.
Scenario load_config(const std::string& path, Scenario base = Scenario{});

}  // namespace vdakey
