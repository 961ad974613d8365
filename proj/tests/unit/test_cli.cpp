#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "dunkl/cli/commands.hpp"
#include "dunkl/cli/config.hpp"
#include "dunkl/cli/verify.hpp"
#include "dunkl/coherent.hpp"
#include "dunkl/errors.hpp"
#include "../support/oracles.hpp"

using namespace dunkl;
using namespace dunkl::cli;
using Catch::Matchers::WithinAbs;

namespace {

struct Csv {
  std::vector<std::string> meta;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

// Single-block CSV: '#' lines, one header line, numeric rows.
Csv read_csv(const std::string& text) {
  Csv c;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.starts_with("#")) {
      c.meta.push_back(line);
    } else if (c.header.empty()) {
      c.header = split(line);
    } else {
      std::vector<double> row;
      for (const auto& cell : split(line)) row.push_back(std::stod(cell));
      c.rows.push_back(row);
    }
  }
  return c;
}

// Coherent output: one Csv per "# tau" block.
std::vector<Csv> read_blocks(const std::string& text) {
  std::vector<Csv> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.starts_with("# tau")) {
      out.emplace_back();
      out.back().meta.push_back(line);
    } else if (line.starts_with("#")) {
      continue;
    } else if (out.back().header.empty()) {
      out.back().header = split(line);
    } else {
      std::vector<double> row;
      for (const auto& cell : split(line)) row.push_back(std::stod(cell));
      out.back().rows.push_back(row);
    }
  }
  return out;
}

double trapezoid_weighted(const std::vector<std::vector<double>>& rows, int col, double power) {
  std::vector<double> x, y;
  for (const auto& r : rows) {
    x.push_back(r[0]);
    y.push_back(r[col] * std::pow(r[0], power));
  }
  return oracle::trapezoid(x, y);
}

std::string spectrum_text(const RunConfig& c) {
  std::ostringstream out;
  cmd_spectrum(c, out);
  return out.str();
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(DUNKL_OSC_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("argument parsing", "[cli]") {
  const Grid g = Grid::parse("0.1:5:11");
  CHECK(g.npoints == 11);
  CHECK(g.points().front() == 0.1);
  CHECK(g.points().back() == 5.0);
  CHECK_THROWS_AS(Grid::parse("0:5:11"), DomainError);
  CHECK_THROWS_AS(Grid::parse("0.1:5:1"), DomainError);
  CHECK_THROWS_AS(Grid::parse("0.1:5"), UsageError);
  CHECK_THROWS_AS(Grid::parse("a:5:3"), UsageError);

  const StateArg s = StateArg::parse("1,-1,1/2,3");
  CHECK(s.s2 == -1);
  CHECK(s.m.twice() == 1);
  CHECK(s.nr == 3);
  CHECK(StateArg::parse("-1,-1,2.5,0").m.twice() == 5);
  CHECK_THROWS_AS(StateArg::parse("1,1,0.3,0"), DomainError);
  CHECK_THROWS_AS(StateArg::parse("1,1,0"), UsageError);

  const auto t = ToleranceOverride::parse("radial.*=1e-3");
  CHECK(t.matches("radial.gram"));
  CHECK_FALSE(t.matches("angular.gram"));
  CHECK(ToleranceOverride::parse("*=0").matches("anything"));
  CHECK(ToleranceOverride::parse("angular.gram=2").matches("angular.gram"));
  CHECK_FALSE(ToleranceOverride::parse("angular.gram=2").matches("angular.gram2"));
  CHECK_THROWS_AS(ToleranceOverride::parse("=1"), UsageError);

  CHECK(parse_complex("0.5,-0.25") == std::complex<double>(0.5, -0.25));
  CHECK(parse_reals("0,1.5,3") == std::vector<double>{0.0, 1.5, 3.0});
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK_THROWS_AS(parse_format("xml"), UsageError);
  CHECK(num(0.1) == "0.10000000000000001");
  CHECK(std::stod(num(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("spectrum command", "[cli]") {
  RunConfig c;
  const Csv zero = read_csv(spectrum_text(c));
  CHECK(zero.header == std::vector<std::string>{"s1", "s2", "m", "nr", "k", "l2", "E"});
  // Half-integer m sectors contribute the two E = 2 states.
  REQUIRE(zero.rows.size() == 6);
  const std::vector<double> energies{1, 2, 2, 3, 3, 3};
  for (std::size_t i = 0; i < 6; ++i) CHECK(zero.rows[i][6] == energies[i]);

  c.mu1 = 0.3;
  c.mu2 = 0.7;
  c.emax = 2.0;
  const Csv one = read_csv(spectrum_text(c));
  REQUIRE(one.rows.size() == 1);
  CHECK(one.rows[0][6] == 2.0);

  c.emax = 1.5;
  CHECK(read_csv(spectrum_text(c)).rows.empty());

  c = RunConfig();
  c.emax = 6.0;
  c.format = OutputFormat::json;
  const auto j = nlohmann::json::parse(spectrum_text(c));
  CHECK(j.size() == read_csv([&] {
                       RunConfig csv = c;
                       csv.format = OutputFormat::csv;
                       return spectrum_text(csv);
                     }())
                        .rows.size());
  CHECK(j[0]["E"] == 1.0);

  c.mu1 = -0.7;
  CHECK_THROWS_AS(spectrum_text(c), DomainError);
  CHECK(spectrum_text(RunConfig()) == spectrum_text(RunConfig()));
}

TEST_CASE("wavefunction command", "[cli]") {
  RunConfig c;
  c.grid = Grid::parse("0.001:10:2001");
  std::ostringstream out;
  cmd_wavefunction(c, StateArg::parse("1,1,0,0"), Part::radial, out);
  const Csv w = read_csv(out.str());
  CHECK(w.rows.size() == 2001);
  CHECK(w.header == std::vector<std::string>{"r", "value"});
  double worst = 0.0;
  for (const auto& r : w.rows) worst = std::max(worst, std::abs(r[1] - std::sqrt(2.0) * std::exp(-0.5 * r[0] * r[0])));
  CHECK(worst <= 1e-12);

  // Coarse trapezoid norm from the emitted samples.
  for (auto [m1, m2, state] : {std::tuple{0.0, 0.0, "1,1,0,0"}, {0.5, 0.5, "-1,1,3/2,2"}, {0.3, 0.2, "1,1,1,1"}}) {
    RunConfig d = c;
    d.mu1 = m1;
    d.mu2 = m2;
    std::ostringstream o;
    cmd_wavefunction(d, StateArg::parse(state), Part::radial, o);
    std::vector<std::vector<double>> sq;
    for (auto row : read_csv(o.str()).rows) sq.push_back({row[0], row[1] * row[1]});
    CHECK_THAT(trapezoid_weighted(sq, 1, 1.0 + 2.0 * (m1 + m2)), WithinAbs(1.0, 1e-3));

    std::ostringstream a;
    cmd_wavefunction(d, StateArg::parse(state), Part::angular, a);
    const Csv ang = read_csv(a.str());
    CHECK(ang.header[0] == "phi");
    CHECK(ang.rows.size() == 2001);
    std::vector<double> x, y;
    for (const auto& row : ang.rows) {
      x.push_back(row[0]);
      y.push_back(row[1] * row[1] * std::pow(std::abs(std::cos(row[0])), 2 * m1) *
                  std::pow(std::abs(std::sin(row[0])), 2 * m2));
    }
    CHECK_THAT(oracle::trapezoid(x, y), WithinAbs(1.0, 1e-3));
  }

  std::ostringstream bad;
  CHECK_THROWS_AS(cmd_wavefunction(c, StateArg::parse("1,-1,0,0"), Part::radial, bad), DomainError);
  CHECK_THROWS_AS(cmd_wavefunction(c, StateArg::parse("1,1,0,-1"), Part::radial, bad), DomainError);
}

TEST_CASE("coherent command", "[cli]") {
  RunConfig c;
  c.mu1 = 0.25;
  c.mu2 = 0.5;
  c.grid = Grid::parse("0.001:9:1801");
  const std::complex<double> xi(0.4, -0.3);
  const HalfInteger m = HalfInteger::from_twice(1);
  const double tau = 0.4;
  std::ostringstream out;
  cmd_coherent(c, xi, m, {0.0, tau, tau + std::numbers::pi}, out);
  const auto blocks = read_blocks(out.str());
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0].header == std::vector<std::string>{"r", "Re", "Im", "abs2"});
  CHECK(out.str().find("# k = ") != std::string::npos);
  CHECK(out.str().find("phase_convention") != std::string::npos);

  const auto p = coherent::CoherentParams::from_m(xi, m, c.deformation());
  double worst = 0.0;
  for (const auto& row : blocks[0].rows) {
    const auto v = coherent::coherent_closed(row[0], p, c.deformation());
    worst = std::max(worst, std::abs(std::complex<double>(row[1], row[2]) - v));
  }
  CHECK(worst <= 1e-12);

  for (const auto& b : blocks) CHECK_THAT(trapezoid_weighted(b.rows, 3, 1.0 + 2.0 * 0.75), WithinAbs(1.0, 1e-3));

  double period = 0.0;
  for (std::size_t i = 0; i < blocks[1].rows.size(); ++i) period = std::max(period, std::abs(blocks[1].rows[i][3] - blocks[2].rows[i][3]));
  CHECK(period <= 1e-12);

  std::ostringstream again;
  cmd_coherent(c, xi, m, {0.0, tau, tau + std::numbers::pi}, again);
  CHECK(again.str() == out.str());

  std::ostringstream bad;
  CHECK_THROWS_AS(cmd_coherent(c, {0.6, 0.8}, m, {0.0}, bad), DomainError);
  CHECK_THROWS_AS(cmd_coherent(c, {1.0, 0.0}, m, {0.0}, bad), DomainError);
}

TEST_CASE("verify report", "[cli]") {
  RunConfig c;
  const auto results = run_checks(build_checks(Suite::angular, c), {}, 2);
  std::vector<std::string> names;
  for (const auto& r : results) {
    names.push_back(r.name);
    CHECK(r.pass);
  }
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK(std::find(names.begin(), names.end(), "angular.eta0") != names.end());

  std::ostringstream out;
  write_report(results, out);
  const auto j = nlohmann::json::parse(out.str());
  REQUIRE(j.is_array());
  CHECK(j.size() == results.size());
  for (const auto& e : j) {
    CHECK(e.contains("name"));
    CHECK(e["residual"].is_number());
    CHECK(e["pass"] == true);
  }

  const auto forced = run_checks(build_checks(Suite::angular, c), {ToleranceOverride::parse("*=1e-20")}, 1);
  CHECK(std::any_of(forced.begin(), forced.end(), [](const CheckResult& r) { return !r.pass; }));
  const auto one = run_checks(build_checks(Suite::angular, c), {ToleranceOverride::parse("angular.gram=1e-20")}, 1);
  for (const auto& r : one) CHECK(r.pass == (r.name != "angular.gram"));

  // Order-independent assembly: thread count does not change the report.
  std::ostringstream a, b;
  write_report(run_checks(build_checks(Suite::all, c), {}, 1), a);
  write_report(run_checks(build_checks(Suite::all, c), {}, 4), b);
  CHECK(a.str() == b.str());

  Check thrower{"x.throws", 1.0, [] { return RadialProfile::from_values([](double) { return cplx(1.0); }).derivative(1.0, 3).real(); }};
  const auto t = run_checks({thrower}, {}, 1);
  CHECK_FALSE(t[0].pass);
  CHECK(std::isnan(t[0].residual));
  CHECK_THROWS_AS(parse_suite("everything"), UsageError);
}

TEST_CASE("process exit codes", "[cli]") {
  CHECK(run_binary("spectrum") == 0);
  CHECK(run_binary("spectrum --emax 0.1") == 0);
  CHECK(run_binary("spectrum --mu1 -0.6") == 2);
  CHECK(run_binary("wavefunction --state 1,1,1/3,0") == 2);
  CHECK(run_binary("wavefunction --state 1,1,0,0 --grid 0:1:5") == 2);
  CHECK(run_binary("coherent --xi 0.6,0.8") == 2);
  CHECK(run_binary("coherent --xi 0.2,0.1 --m 1 --tau 0,1") == 0);
  CHECK(run_binary("verify --suite angular") == 0);
  CHECK(run_binary("verify --suite angular --tol '*=1e-20'") == 1);
  CHECK(run_binary("verify --suite nope") == 2);
  CHECK(run_binary("frobnicate") == 2);
  CHECK(run_binary("") == 2);
}
