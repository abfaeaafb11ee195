#include <string>
#include <vector>

#include "doctest.h"
#include "vdakey/report.hpp"

using namespace vdakey;

TEST_SUITE_BEGIN("report");

TEST_CASE("format_double uses ten significant digits, locale-free") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-3.25) == "-3.25");
  CHECK(format_double(1e-9) == "1e-09");
  CHECK(format_double(1.0 / 3.0) == "0.3333333333");
  CHECK(format_double(0.972191960697147421) == "0.9721919607");
  CHECK(format_double(1234567890.123) == "1234567890");
}

TEST_CASE("sweep CSV renders rows verbatim and is byte-stable") {
  const std::vector<SweepRow> rows = {{5.0, 0.8125, 0.25, 40000},
                                      {6.0, 0.75, 0.125, 40000}};
  const std::string expected =
      "# correlation between B's and E's functional sequences; lengths in metres\n"
      "delta_l,r_envelope,r_phase_diff,intervals\n"
      "5,0.8125,0.25,40000\n"
      "6,0.75,0.125,40000\n";
  CHECK(render_sweep_csv(rows) == expected);
  CHECK(render_sweep_csv(rows) == render_sweep_csv(rows));
}

TEST_CASE("pe-curve CSV renders rows verbatim") {
  const std::vector<PeCurveRow> rows = {{0.5, 1.0 / 3.0, 0.3334, 0.00047, 1000000}};
  const std::string expected =
      "# bit disagreement probability vs correlation: closed form and Monte Carlo\n"
      "rho,pe_closed_form,pe_monte_carlo,std_error,trials\n"
      "0.5,0.3333333333,0.3334,0.00047,1000000\n";
  CHECK(render_pe_curve_csv(rows) == expected);
}

TEST_CASE("table CSV reports m_opt only for the top-M method") {
  CandidateEvaluation c;
  c.parameter = 0.9;
  c.measured = ErrorReport{0.001, 0.0605, 0.14};
  c.budget.n0 = 1000;
  c.budget.ell = 128;
  c.budget.check_bits = 310;
  c.budget.leakage_bound = 1e-10;
  c.budget.decoding_bound = 1e-06;
  c.n = 1000.0;
  c.key_rate = 0.128;
  c.key_rate_n0 = 0.128;
  c.feasible = true;

  const std::string header =
      "# key-rate optimization; parameter is alpha (method 1) or the kept fraction "
      "(method 2); m_opt = round(fraction * n)\n"
      "rho,method,parameter,m_opt,pe,p_er,p_legal,ell,n0,check_bits,n,"
      "key_rate_n,key_rate_n0,leakage_bound,decoding_bound,feasible\n";

  SUBCASE("method 2 rounds fraction times n") {
    const std::string expected =
        header +
        "0.95,2,0.9,900,0.0605,0.14,0.001,128,1000,310,1000,0.128,0.128,1e-10,1e-06,1\n";
    CHECK(render_table_csv({TableRow{0.95, 2, c}}) == expected);
  }
  SUBCASE("method 1 reports zero") {
    c.parameter = 0.12;
    const std::string expected =
        header +
        "0.95,1,0.12,0,0.0605,0.14,0.001,128,1000,310,1000,0.128,0.128,1e-10,1e-06,1\n";
    CHECK(render_table_csv({TableRow{0.95, 1, c}}) == expected);
  }
}

TEST_CASE("demo CSV renders one line per run") {
  ProtocolRunResult r{};
  r.intervals_used = 2345;
  r.n0 = 1756;
  r.pre_fec_mismatch = 12;
  r.fec_success = true;
  r.keys_equal = true;
  r.randomness.monobit_z = 0.5;
  r.randomness.serial_z = -1.25;
  r.randomness.runs_z = 0.75;
  r.randomness.all_pass = true;
  ProtocolDemoResult demo;
  demo.runs = {r};
  const std::string expected =
      "# per-run protocol outcomes\n"
      "run,intervals_used,n0,pre_fec_mismatch,fec_success,keys_equal,"
      "monobit_z,serial_z,runs_z,randomness_pass\n"
      "0,2345,1756,12,1,1,0.5,-1.25,0.75,1\n";
  CHECK(render_demo_csv(demo) == expected);
}

TEST_CASE("bits_to_hex packs most significant bit first") {
  CHECK(bits_to_hex({1, 0, 1, 1, 0, 0, 1, 0}) == "b2");
  CHECK(bits_to_hex({0, 1, 1, 0}) == "6");
  CHECK(bits_to_hex({1, 1, 0, 1, 0}) == "1a");
  CHECK(bits_to_hex({}) == "");
  CHECK(bits_to_hex({1}) == "1");
}

TEST_SUITE_END();
