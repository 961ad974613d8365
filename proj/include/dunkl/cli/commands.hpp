#pragma once

#include <complex>
#include <ostream>
#include <vector>

#include "dunkl/cli/config.hpp"

namespace dunkl::cli {

enum class Part { radial, angular };

// Every state with E <= emax, columns s1, s2, m, nr, k, l2, E.
void cmd_spectrum(const RunConfig& config, std::ostream& out);

// Radial samples on the r grid, or angular samples at npoints uniform phi in [0, 2 pi].
void cmd_wavefunction(const RunConfig& config, const StateArg& state, Part part, std::ostream& out);

// One block per tau: r, Re, Im, |value|^2 of the evolved closed form.
void cmd_coherent(const RunConfig& config, std::complex<double> xi, HalfInteger m, const std::vector<double>& taus,
                  std::ostream& out);

}  // namespace dunkl::cli
