#include "dunkl/cli/commands.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numbers>
#include <tuple>

#include "dunkl/basis.hpp"
#include "dunkl/coherent.hpp"

namespace dunkl::cli {
namespace {

void write_rows(std::ostream& out, OutputFormat format, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  if (format == OutputFormat::csv) {
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << '\n';
    }
    return;
  }
  out << '[';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << (r ? ",\n " : "") << '{';
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? ", " : "") << '"' << header[i] << "\": " << rows[r][i];
    out << '}';
  }
  out << "]\n";
}

// '#'-prefixed lines in CSV, a "meta" object in JSON.
void write_meta(std::ostream& out, OutputFormat format, const std::vector<std::pair<std::string, std::string>>& meta) {
  if (format == OutputFormat::csv) {
    for (const auto& [key, value] : meta) out << "# " << key << " = " << value << '\n';
    return;
  }
  out << "\"meta\": {";
  for (std::size_t i = 0; i < meta.size(); ++i) out << (i ? ", " : "") << '"' << meta[i].first << "\": \"" << meta[i].second << '"';
  out << "}";
}

std::string mu_text(const RunConfig& c) { return num(c.mu1) + "," + num(c.mu2); }

}  // namespace

void cmd_spectrum(const RunConfig& config, std::ostream& out) {
  config.validate();
  const DeformationParams mu = config.deformation();
  auto states = basis::enumerate_states(config.emax, mu);
  std::sort(states.begin(), states.end(), [](const basis::StateLabel& a, const basis::StateLabel& b) {
    const auto key = [](const basis::StateLabel& s) {
      return std::tuple(s.energy, s.angular.m, s.radial.nr, -s.angular.s1, -s.angular.s2);
    };
    return key(a) < key(b);
  });
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : states) {
    rows.push_back({std::to_string(s.angular.s1), std::to_string(s.angular.s2), num(s.angular.m.value()),
                    std::to_string(s.radial.nr), num(s.radial.k), num(s.angular.l2), num(s.energy)});
  }
  write_rows(out, config.format, {"s1", "s2", "m", "nr", "k", "l2", "E"}, rows);
}

void cmd_wavefunction(const RunConfig& config, const StateArg& state, Part part, std::ostream& out) {
  config.validate();
  const DeformationParams mu = config.deformation();
  const auto aq = basis::AngularQuantum::make(state.s1, state.s2, state.m, mu);
  const auto rq = basis::RadialQuantum::from_m(state.nr, state.m, mu);
  std::vector<std::pair<std::string, std::string>> meta{
      {"state", fmt::format("s1={},s2={},m={},nr={}", state.s1, state.s2, state.m.to_string(), state.nr)},
      {"mu", mu_text(config)},
      {"k", num(rq.k)},
      {"l2", num(aq.l2)},
      {"E", num(basis::energy(state.nr, state.m, mu))},
  };
  std::vector<double> xs;
  std::function<double(double)> value;
  std::string axis;
  if (part == Part::radial) {
    meta.emplace_back("part", "radial");
    meta.emplace_back("normalization", "int_0^inf R^2 r^(1+2mu1+2mu2) dr = 1");
    const auto R = basis::radial_sturmian(rq, mu);
    xs = config.grid.points();
    value = [R](double r) { return R(r).real(); };
    axis = "r";
  } else {
    meta.emplace_back("part", "angular");
    meta.emplace_back("normalization", "int_0^2pi Phi^2 |cos phi|^(2mu1) |sin phi|^(2mu2) dphi = 1");
    const auto Phi = basis::angular_wavefunction(aq, mu);
    const int n = config.grid.npoints;
    for (int i = 0; i < n; ++i) xs.push_back(2.0 * std::numbers::pi * i / (n - 1));
    value = [Phi](double p) { return Phi(p).real(); };
    axis = "phi";
  }
  std::vector<std::vector<std::string>> rows;
  for (double x : xs) rows.push_back({num(x), num(value(x))});
  if (config.format == OutputFormat::csv) {
    write_meta(out, config.format, meta);
    write_rows(out, config.format, {axis, "value"}, rows);
  } else {
    out << '{';
    write_meta(out, config.format, meta);
    out << ",\n\"rows\": ";
    write_rows(out, config.format, {axis, "value"}, rows);
    out << "}\n";
  }
}

void cmd_coherent(const RunConfig& config, std::complex<double> xi, HalfInteger m, const std::vector<double>& taus,
                  std::ostream& out) {
  config.validate();
  const DeformationParams mu = config.deformation();
  const auto p = coherent::CoherentParams::from_m(xi, m, mu);
  const std::vector<std::pair<std::string, std::string>> meta{
      {"xi", num(xi.real()) + "," + num(xi.imag())},
      {"m", m.to_string()},
      {"k", num(p.k)},
      {"mu", mu_text(config)},
      {"phase_convention", "xi(tau) = xi exp(-2i tau), overall factor exp(-2i k tau), hbar = 1"},
      {"normalization", "int_0^inf |Psi|^2 r^(1+2mu1+2mu2) dr = 1"},
  };
  const auto grid = config.grid.points();
  if (config.format == OutputFormat::csv) {
    write_meta(out, config.format, meta);
  } else {
    out << '{';
    write_meta(out, config.format, meta);
    out << ",\n\"blocks\": [";
  }
  for (std::size_t b = 0; b < taus.size(); ++b) {
    const auto t = coherent::EvolutionParams::make(taus[b]);
    std::vector<std::vector<std::string>> rows;
    for (double r : grid) {
      const std::complex<double> v = coherent::coherent_evolved(r, p, t, mu);
      rows.push_back({num(r), num(v.real()), num(v.imag()), num(std::norm(v))});
    }
    if (config.format == OutputFormat::csv) {
      out << "# tau = " << num(taus[b]) << '\n';
      write_rows(out, config.format, {"r", "Re", "Im", "abs2"}, rows);
    } else {
      out << (b ? ",\n" : "") << "{\"tau\": " << num(taus[b]) << ", \"rows\": ";
      write_rows(out, config.format, {"r", "Re", "Im", "abs2"}, rows);
      out << '}';
    }
  }
  if (config.format == OutputFormat::json) out << "]}\n";
}

}  // namespace dunkl::cli
