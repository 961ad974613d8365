#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "dunkl/deformation.hpp"
#include "dunkl/half_integer.hpp"
#include "dunkl/profile.hpp"

// SU(1,1) Perelomov radial coherent states built on the Sturmian basis:
// truncated series, closed generating-function form, displacement normal
// form, and evolution under U(tau) = exp(-i H_r tau / hbar).

namespace dunkl::coherent {

/// Unit-disk parameter xi (|xi| < 1) and Bargmann index k > 0.
struct CoherentParams {
  cplx xi;
  double k = 0.5;

  static CoherentParams make(cplx xi, double k);
  /// k on the positive Bargmann branch of m.
  static CoherentParams from_m(cplx xi, HalfInteger m, const DeformationParams& mu);
};

/// zeta and eta of D(xi) = exp(zeta K+) exp(eta K0) exp(-conj(zeta) K-).
struct DisplacementNormalForm {
  cplx zeta;
  double eta = 0.0;
};

struct EvolutionParams {
  double tau = 0.0;
  double hbar = 1.0;

  static EvolutionParams make(double tau, double hbar = 1.0);
};

/// Coefficient (1 - |xi|^2)^k sqrt(Gamma(n + 2k) / (n! Gamma(2k))) xi^n of |k, n>,
/// computed in log-Gamma form.
cplx series_coefficient(const CoherentParams& p, int n);

/// Number of terms after which the tail bound |xi|^n sqrt(Gamma(n + 2k) / (n! Gamma(2k)))
/// stays below 1e-14.
int auto_nterms(const CoherentParams& p);

/// Partial sum over n < nterms of series_coefficient * R_{n,k}(r).
cplx coherent_series(double r, const CoherentParams& p, const DeformationParams& mu, int nterms);

/// Closed form
///   [2 (1-|xi|^2)^{2k} / (Gamma(2k) (1-xi)^{4k})]^{1/2} r^{2k-(mu+1)} exp[(r^2/2)(xi+1)/(xi-1)]
/// with (1-xi)^{2k} on the principal branch.
cplx coherent_closed(double r, const CoherentParams& p, const DeformationParams& mu);

/// Radial profile of the closed form with exact jets, for quadrature and
/// operator checks.
RadialProfile coherent_profile(const CoherentParams& p, const DeformationParams& mu);

/// Normal form of the displacement with parameter xi = -(tau/2) e^{-i phi}:
/// zeta = -tanh(tau/2) e^{-i phi}, eta = -2 ln cosh(tau/2) = ln(1 - |zeta|^2).
DisplacementNormalForm normal_form(cplx xi);

/// Parameter of the evolved state and its global phase:
/// xi_t = xi e^{-2 i tau / hbar}, phase = e^{-2 i k tau / hbar}.
std::pair<cplx, cplx> evolve_parameter(const CoherentParams& p, const EvolutionParams& t);

/// phase * coherent_closed(r, xi_t): the coherent state after fictitious time tau.
cplx coherent_evolved(double r, const CoherentParams& p, const EvolutionParams& t, const DeformationParams& mu);

/// Same state labelled by m instead of k.
cplx coherent_evolved(double r, cplx xi, const EvolutionParams& t, HalfInteger m, const DeformationParams& mu);

RadialProfile evolved_profile(const CoherentParams& p, const EvolutionParams& t, const DeformationParams& mu);

/// Evolves the truncated series term by term, |k, n> picking up
/// e^{-2 i (k + n) tau / hbar}, and returns the maximum deviation from
/// coherent_evolved over the grid.
double series_evolution_crosscheck(const CoherentParams& p, const EvolutionParams& t, const DeformationParams& mu,
                                   int nterms, std::span<const double> grid);

/// Radial cutoff beyond which |R(r, xi)|^2 r^{1+2mu} is below 1e-18 of its
/// peak scale.
double coherent_rmax(const CoherentParams& p, const DeformationParams& mu);

}  // namespace dunkl::coherent
