#pragma once

#include <string>
#include <vector>

#include "vdakey/simulation.hpp"

namespace vdakey {

// Locale-independent formatting used by every CSV writer: '%.10g', '.' as
// the decimal separator, '\n' line endings.  Rendering is pure so outputs
// are byte-stable for fixed inputs.
std::string format_double(double v);

std::string render_sweep_csv(const std::vector<SweepRow>& rows);

struct PeCurveRow {
  double rho;
  double pe_closed;
  double pe_mc;
  double std_error;
  std::size_t trials;
};
std::string render_pe_curve_csv(const std::vector<PeCurveRow>& rows);

struct TableRow {
  double rho;
  int method;
  CandidateEvaluation candidate;  // feasible flag covers infeasible rows
};
std::string render_table_csv(const std::vector<TableRow>& rows);

std::string render_distribution_hist_csv(const DistributionReport& report);
std::string render_distribution_fit_csv(const DistributionReport& report);

std::string render_demo_csv(const ProtocolDemoResult& demo);

// Bits to a hex string, most significant bit first; length padded to whole
// nibbles.
std::string bits_to_hex(const std::vector<int>& bits);

}  // namespace vdakey
