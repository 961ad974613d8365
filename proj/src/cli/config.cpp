#include "dunkl/cli/config.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>

#include "dunkl/errors.hpp"

namespace dunkl::cli {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

double to_double(std::string_view s, std::string_view what) {
  s = trim(s);
  double x = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
    throw UsageError(fmt::format("cannot parse {} from '{}'", what, s));
  }
  return x;
}

int to_int(std::string_view s, std::string_view what) {
  s = trim(s);
  int x = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
    throw UsageError(fmt::format("cannot parse {} from '{}'", what, s));
  }
  return x;
}

}  // namespace

Grid Grid::parse(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("grid must be rmin:rmax:n");
  Grid g{to_double(parts[0], "rmin"), to_double(parts[1], "rmax"), to_int(parts[2], "npoints")};
  if (!(g.rmin > 0.0)) throw DomainError("grid rmin must be positive");
  if (!(g.rmax > g.rmin)) throw DomainError("grid rmax must exceed rmin");
  if (g.npoints < 2) throw DomainError("grid needs at least 2 points");
  return g;
}

std::vector<double> Grid::points() const {
  std::vector<double> out(npoints);
  const double h = (rmax - rmin) / (npoints - 1);
  for (int i = 0; i < npoints; ++i) out[i] = rmin + i * h;
  out.back() = rmax;
  return out;
}

StateArg StateArg::parse(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw UsageError("state must be s1,s2,m,nr");
  StateArg s;
  s.s1 = to_int(parts[0], "s1");
  s.s2 = to_int(parts[1], "s2");
  s.m = HalfInteger::parse(trim(parts[2]));
  s.nr = to_int(parts[3], "nr");
  return s;
}

ToleranceOverride ToleranceOverride::parse(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) throw UsageError("tolerance override must be NAME=VAL");
  ToleranceOverride t{std::string(trim(text.substr(0, eq))), to_double(text.substr(eq + 1), "tolerance")};
  if (!(t.value >= 0.0)) throw UsageError("tolerance must be non-negative");
  return t;
}

bool ToleranceOverride::matches(std::string_view name) const {
  if (!pattern.empty() && pattern.back() == '*') {
    return name.substr(0, pattern.size() - 1) == std::string_view(pattern).substr(0, pattern.size() - 1);
  }
  return name == pattern;
}

void RunConfig::validate() const {
  (void)deformation();
  if (!std::isfinite(emax)) throw DomainError("emax must be finite");
  if (!(grid.rmin > 0.0) || !(grid.rmax > grid.rmin) || grid.npoints < 2) throw DomainError("invalid grid");
}

DeformationParams RunConfig::deformation() const { return DeformationParams(mu1, mu2); }

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw UsageError(fmt::format("unknown format '{}'", text));
}

std::complex<double> parse_complex(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw UsageError("complex value must be re,im");
  return {to_double(parts[0], "real part"), to_double(parts[1], "imaginary part")};
}

std::vector<double> parse_reals(std::string_view text) {
  std::vector<double> out;
  for (auto p : split(text, ',')) out.push_back(to_double(p, "real"));
  return out;
}

std::string num(double x) { return fmt::format("{:.17g}", x); }

}  // namespace dunkl::cli
