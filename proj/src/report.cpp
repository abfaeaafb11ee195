#include "vdakey/report.hpp"

#include <cstdio>
#include <sstream>

namespace vdakey {

namespace {

void append_row(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  out += '\n';
}

std::string fmt_size(std::size_t v) { return std::to_string(v); }
std::string fmt_i64(std::int64_t v) { return std::to_string(v); }

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string render_sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "# correlation between B's and E's functional sequences; lengths in metres\n";
  out += "delta_l,r_envelope,r_phase_diff,intervals\n";
  for (const SweepRow& r : rows)
    append_row(out, {format_double(r.delta_l), format_double(r.r_envelope),
                     format_double(r.r_phase_diff), fmt_size(r.intervals)});
  return out;
}

std::string render_pe_curve_csv(const std::vector<PeCurveRow>& rows) {
  std::string out =
      "# bit disagreement probability vs correlation: closed form and Monte Carlo\n";
  out += "rho,pe_closed_form,pe_monte_carlo,std_error,trials\n";
  for (const PeCurveRow& r : rows)
    append_row(out, {format_double(r.rho), format_double(r.pe_closed),
                     format_double(r.pe_mc), format_double(r.std_error),
                     fmt_size(r.trials)});
  return out;
}

std::string render_table_csv(const std::vector<TableRow>& rows) {
  std::string out =
      "# key-rate optimization; parameter is alpha (method 1) or the kept fraction "
      "(method 2); m_opt = round(fraction * n)\n";
  out +=
      "rho,method,parameter,m_opt,pe,p_er,p_legal,ell,n0,check_bits,n,"
      "key_rate_n,key_rate_n0,leakage_bound,decoding_bound,feasible\n";
  for (const TableRow& r : rows) {
    const CandidateEvaluation& c = r.candidate;
    const std::int64_t m_opt =
        r.method == 2 ? static_cast<std::int64_t>(c.parameter * c.n + 0.5) : 0;
    append_row(out,
               {format_double(r.rho), std::to_string(r.method), format_double(c.parameter),
                fmt_i64(m_opt), format_double(c.measured.eavesdropper_error),
                format_double(c.measured.erasure_rate), format_double(c.measured.legal_error),
                fmt_i64(c.budget.ell), fmt_i64(c.budget.n0), fmt_i64(c.budget.check_bits),
                format_double(c.n), format_double(c.key_rate), format_double(c.key_rate_n0),
                format_double(c.budget.leakage_bound), format_double(c.budget.decoding_bound),
                c.feasible ? "1" : "0"});
  }
  return out;
}

namespace {

void append_hist(std::string& out, const char* name, const Histogram& h) {
  for (std::size_t i = 0; i < h.counts.size(); ++i)
    append_row(out, {name, format_double(h.edges[i]), format_double(h.edges[i + 1]),
                     std::to_string(h.counts[i])});
}

}  // namespace

std::string render_distribution_hist_csv(const DistributionReport& report) {
  std::string out = "# empirical distributions of the legal user's functionals\n";
  out += "functional,bin_lo,bin_hi,count\n";
  append_hist(out, "envelope", report.envelope_hist);
  append_hist(out, "phase_difference", report.phase_diff_hist);
  return out;
}

std::string render_distribution_fit_csv(const DistributionReport& report) {
  std::string out = "# fit parameters and KS verdicts at the 1% level\n";
  out += "subject,model,param1,param2,ks,ks_critical,pass,samples\n";
  const auto& er = report.envelope_rice;
  append_row(out, {"envelope", "rice", format_double(er.fit.nu), format_double(er.fit.sigma),
                   format_double(er.ks_statistic), format_double(er.ks_critical),
                   er.pass ? "1" : "0", fmt_size(er.samples)});
  const auto& eg = report.envelope_gauss;
  append_row(out, {"envelope", "gaussian", format_double(eg.fit.mean),
                   format_double(eg.fit.variance), format_double(eg.ks_statistic),
                   format_double(eg.ks_critical), eg.pass ? "1" : "0", fmt_size(eg.samples)});
  const auto& pg = report.phase_diff_gauss;
  append_row(out, {"phase_difference", "gaussian", format_double(pg.fit.mean),
                   format_double(pg.fit.variance), format_double(pg.ks_statistic),
                   format_double(pg.ks_critical), pg.pass ? "1" : "0", fmt_size(pg.samples)});
  const auto& dr = report.diagram.amplitude;
  append_row(out, {"diagram_amplitude", "rice", format_double(dr.fit.nu),
                   format_double(dr.fit.sigma), format_double(dr.ks_statistic),
                   format_double(dr.ks_critical), dr.pass ? "1" : "0", fmt_size(dr.samples)});
  append_row(out, {"diagram_phase", "uniform", "0", format_double(0.0),
                   format_double(report.diagram.phase_ks),
                   format_double(report.diagram.phase_ks_critical),
                   report.diagram.phase_uniform_pass ? "1" : "0",
                   fmt_size(report.diagram.samples)});
  return out;
}

std::string render_demo_csv(const ProtocolDemoResult& demo) {
  std::string out = "# per-run protocol outcomes\n";
  out +=
      "run,intervals_used,n0,pre_fec_mismatch,fec_success,keys_equal,"
      "monobit_z,serial_z,runs_z,randomness_pass\n";
  for (std::size_t k = 0; k < demo.runs.size(); ++k) {
    const ProtocolRunResult& r = demo.runs[k];
    append_row(out, {fmt_size(k), fmt_size(r.intervals_used), fmt_size(r.n0),
                     fmt_size(r.pre_fec_mismatch), r.fec_success ? "1" : "0",
                     r.keys_equal ? "1" : "0", format_double(r.randomness.monobit_z),
                     format_double(r.randomness.serial_z), format_double(r.randomness.runs_z),
                     r.randomness.all_pass ? "1" : "0"});
  }
  return out;
}

std::string bits_to_hex(const std::vector<int>& bits) {
  std::string out;
  const std::size_t n = bits.size();
  std::size_t i = 0;
  const std::size_t lead = n % 4;
  if (lead) {
    int v = 0;
    for (; i < lead; ++i) v = (v << 1) | (bits[i] & 1);
    out += "0123456789abcdef"[v];
  }
  for (; i + 3 < n; i += 4) {
    const int v = ((bits[i] & 1) << 3) | ((bits[i + 1] & 1) << 2) |
                  ((bits[i + 2] & 1) << 1) | (bits[i + 3] & 1);
    out += "0123456789abcdef"[v];
  }
  return out;
}

}  // namespace vdakey
