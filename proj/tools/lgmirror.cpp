// Command line front end: mirror models, theta elimination, periodic
// resolutions, and the verification suites.
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "lgm/cli.hpp"

using namespace lgm;

int main(int argc, char** argv) {
  CLI::App app{"exact computations for mirror families of minimal orbits"};
  app.require_subcommand(1);

  size_t m_n = 0;
  std::string m_t1, m_t2;
  bool m_json = false;
  auto* mirror = app.add_subcommand("mirror", "print one mirror model");
  mirror->add_option("--n", m_n, "rank of the family")->required();
  mirror->add_option("--t1", m_t1, "first coefficient (rational)");
  mirror->add_option("--t2", m_t2, "second coefficient (rational)");
  mirror->add_flag("--json", m_json, "emit JSON");

  bool t_json = false;
  auto* theta = app.add_subcommand("theta", "print the theta surface data");
  theta->add_flag("--json", t_json, "emit JSON");

  size_t r_n = 0, r_i = 0, r_len = 5;
  uint32_t r_bound = 6;
  std::string r_field = "q";
  bool r_json = false;
  auto* res = app.add_subcommand("res", "periodic resolution transcript");
  res->add_option("--n", r_n, "number of variables")->required();
  res->add_option("--i", r_i, "distinguished variable index")->required();
  res->add_option("--len", r_len, "number of maps");
  res->add_option("--degree-bound", r_bound, "exactness window bound");
  res->add_option("--field", r_field, "q or zp:<prime>");
  res->add_flag("--json", r_json, "emit JSON");

  std::string v_suite, v_field = "q";
  cli::VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", v_suite, "sings3, ext, theta, monodromy, odp, fibres, all")
      ->required();
  verify->add_option("--seed", vopt.seed, "sampling seed");
  verify->add_option("--degree-bound", vopt.degree_bound, "slice degree bound");
  verify->add_option("--field", v_field, "q or zp:<prime>");
  verify->add_option("--n", vopt.n, "restrict ext checks to one rank");
  verify->add_option("--i", vopt.i, "restrict ext checks to one source index");
  verify->add_option("--j", vopt.j, "restrict ext checks to one target index");
  verify->add_option("--k", vopt.kmax, "largest shift degree");
  verify->add_flag("--json", vopt.as_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  cli::RunResult result;
  if (*mirror) {
    bool numeric = !m_t1.empty() || !m_t2.empty();
    Rat t1(1), t2(1);
    try {
      if (!m_t1.empty()) t1 = Rat(m_t1);
      if (!m_t2.empty()) t2 = Rat(m_t2);
    } catch (const std::exception&) {
      std::fputs("error: coefficients must be rational numbers\n", stderr);
      return 2;
    }
    result = cli::run_mirror(m_n, numeric, t1, t2, m_json);
  } else if (*theta) {
    result = cli::run_theta(t_json);
  } else if (*res) {
    auto field = cli::parse_field(r_field);
    if (!field) {
      std::fputs("error: field must be q or zp:<prime>\n", stderr);
      return 2;
    }
    result = cli::run_res(r_n, r_i, r_len, r_bound, *field, r_json);
  } else {
    auto field = cli::parse_field(v_field);
    if (!field) {
      std::fputs("error: field must be q or zp:<prime>\n", stderr);
      return 2;
    }
    vopt.field = *field;
    result = cli::run_verify(v_suite, vopt);
  }
  std::fputs(result.out.c_str(), stdout);
  return result.code;
}
