#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dunkl/deformation.hpp"
#include "dunkl/half_integer.hpp"

namespace dunkl::cli {

// Malformed command-line input. Maps to exit code 2, like DomainError.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { csv, json };

struct Grid {
  double rmin = 1e-3;
  double rmax = 10.0;
  int npoints = 1001;

  // "rmin:rmax:n"
  static Grid parse(std::string_view text);
  std::vector<double> points() const;
};

struct StateArg {
  int s1 = 1;
  int s2 = 1;
  HalfInteger m;
  int nr = 0;

  // "s1,s2,m,nr" where m may be "1/2" or "0.5".
  static StateArg parse(std::string_view text);
};

struct ToleranceOverride {
  std::string pattern;  // exact name, "*", or "prefix*"
  double value = 0.0;

  static ToleranceOverride parse(std::string_view text);
  bool matches(std::string_view name) const;
};

struct RunConfig {
  double mu1 = 0.0;
  double mu2 = 0.0;
  double emax = 3.0;
  Grid grid;
  OutputFormat format = OutputFormat::csv;
  std::uint64_t seed = 1;
  std::vector<ToleranceOverride> tolerances;

  // Throws DomainError or UsageError when an invariant is broken.
  void validate() const;
  DeformationParams deformation() const;
};

OutputFormat parse_format(std::string_view text);
std::complex<double> parse_complex(std::string_view text);
std::vector<double> parse_reals(std::string_view text);

// Round-trippable double: 17 significant digits.
std::string num(double x);

}  // namespace dunkl::cli
