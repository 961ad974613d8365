// dunkl_osc: spectra, wavefunction samples, verification suites and coherent-state evolution.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "dunkl/cli/commands.hpp"
#include "dunkl/cli/config.hpp"
#include "dunkl/cli/verify.hpp"
#include "dunkl/errors.hpp"

namespace {

struct Inputs {
  double mu1 = 0.0;
  double mu2 = 0.0;
  double emax = 3.0;
  std::string grid;
  std::string format = "csv";
  std::string out;
  std::uint64_t seed = 1;
  std::vector<std::string> tol;
  std::string state;
  std::string part = "radial";
  std::string suite = "all";
  std::string xi;
  std::string m;
  std::string tau = "0";
};

void add_common(CLI::App* sub, Inputs& in) {
  sub->add_option("--mu1", in.mu1, "deformation mu1 > -1/2");
  sub->add_option("--mu2", in.mu2, "deformation mu2 > -1/2");
  sub->add_option("--grid", in.grid, "radial grid rmin:rmax:n (default 0.001:10:1001)");
  sub->add_option("--format", in.format, "csv or json");
  sub->add_option("--out", in.out, "output file (default stdout)");
}

dunkl::cli::RunConfig make_config(const Inputs& in) {
  using namespace dunkl::cli;
  RunConfig c;
  c.mu1 = in.mu1;
  c.mu2 = in.mu2;
  c.emax = in.emax;
  if (!in.grid.empty()) c.grid = Grid::parse(in.grid);
  c.format = parse_format(in.format);
  c.seed = in.seed;
  for (const auto& t : in.tol) c.tolerances.push_back(ToleranceOverride::parse(t));
  c.validate();
  return c;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw dunkl::cli::UsageError("cannot open " + path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace dunkl::cli;
  CLI::App app{"Two-dimensional Dunkl oscillator: spectra, eigenfunctions, su(1,1) checks, coherent states"};
  app.require_subcommand(1);
  Inputs in;

  auto* spectrum = app.add_subcommand("spectrum", "list states with E <= emax");
  add_common(spectrum, in);
  spectrum->add_option("--emax", in.emax, "energy cutoff");

  auto* wave = app.add_subcommand("wavefunction", "sample a radial or angular eigenfunction");
  add_common(wave, in);
  wave->add_option("--state", in.state, "s1,s2,m,nr")->required();
  wave->add_option("--part", in.part, "radial or angular");

  auto* verify = app.add_subcommand("verify", "run verification suites, JSON report");
  add_common(verify, in);
  verify->add_option("--suite", in.suite, "angular, radial, algebra, coherent or all");
  verify->add_option("--seed", in.seed, "seed for randomized checks");
  verify->add_option("--tol", in.tol, "tolerance override NAME=VAL, NAME may end in *");

  auto* coh = app.add_subcommand("coherent", "sample evolved Perelomov coherent states");
  add_common(coh, in);
  coh->add_option("--xi", in.xi, "disk parameter re,im")->required();
  coh->add_option("--m", in.m, "angular label m (integer or half-integer)");
  coh->add_option("--state", in.state, "s1,s2,m,nr; only m is used when --m is absent");
  coh->add_option("--tau", in.tau, "comma-separated list of tau values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const RunConfig config = make_config(in);
    std::ostringstream out;
    int code = 0;
    if (spectrum->parsed()) {
      cmd_spectrum(config, out);
    } else if (wave->parsed()) {
      Part part = Part::radial;
      if (in.part == "angular") {
        part = Part::angular;
      } else if (in.part != "radial") {
        throw UsageError("part must be radial or angular");
      }
      cmd_wavefunction(config, StateArg::parse(in.state), part, out);
    } else if (verify->parsed()) {
      const auto results = run_checks(build_checks(parse_suite(in.suite), config), config.tolerances, thread_cap());
      write_report(results, out);
      for (const auto& r : results) {
        if (!r.pass) code = 1;
      }
    } else {
      dunkl::HalfInteger m;
      if (!in.m.empty()) {
        m = dunkl::HalfInteger::parse(in.m);
      } else if (!in.state.empty()) {
        m = StateArg::parse(in.state).m;
      }
      cmd_coherent(config, parse_complex(in.xi), m, parse_reals(in.tau), out);
    }
    emit(in.out, out.str());
    return code;
  } catch (const dunkl::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
