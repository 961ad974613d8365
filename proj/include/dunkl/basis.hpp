#pragma once

#include <vector>

#include "dunkl/deformation.hpp"
#include "dunkl/half_integer.hpp"
#include "dunkl/profile.hpp"

// Exact eigenbasis of the two-dimensional Dunkl oscillator: quantum-number
// bookkeeping, angular Jacobi functions, radial Sturmian functions and the
// energy spectrum.

namespace dunkl::basis {

/// Angular labels: reflection eigenvalues s1, s2 = +-1, indicator exponents
/// e_i = (1 - s_i)/2, and m. m is a non-negative integer when s1 s2 = 1 and a
/// positive half-integer when s1 s2 = -1; m = 0 occurs only for s1 = s2 = 1.
struct AngularQuantum {
  int s1 = 1;
  int s2 = 1;
  HalfInteger m;
  int e1 = 0;
  int e2 = 0;
  double l2 = 0.0;

  /// Validates the sector constraints and fills e1, e2 and l2.
  static AngularQuantum make(int s1, int s2, HalfInteger m, const DeformationParams& mu);

  /// Degree of the Jacobi polynomial, m - e1/2 - e2/2.
  int jacobi_degree() const { return (m.twice() - e1 - e2) / 2; }
};

/// Radial labels of the discrete-series state |k, n>.
struct RadialQuantum {
  int nr = 0;
  double k = 0.5;

  /// Throws RepresentationError unless k > 0 and nr >= 0.
  static RadialQuantum make(int nr, double k);
  /// nr with k on the positive Bargmann branch m + (mu1 + mu2 + 1)/2.
  static RadialQuantum from_m(int nr, HalfInteger m, const DeformationParams& mu);
};

struct StateLabel {
  AngularQuantum angular;
  RadialQuantum radial;
  double energy = 0.0;
};

/// True when (s1, s2, m) is an allowed angular label.
bool is_valid_sector(int s1, int s2, HalfInteger m);

/// l^2 = 4 m (m + mu1 + mu2).
double separation_constant(HalfInteger m, const DeformationParams& mu);

/// Bargmann index on the positive branch, k = m + (mu1 + mu2 + 1)/2.
double bargmann_k(HalfInteger m, const DeformationParams& mu);

/// Normalization eta_m of the angular function, evaluated in log-Gamma form.
/// At m = 0 the factor (2m + mu) Gamma(m + mu) is taken as Gamma(mu + 1),
/// which also covers the mu1 + mu2 = 0 limit 1/sqrt(2 pi).
double angular_norm(HalfInteger m, int e1, int e2, const DeformationParams& mu);

/// Phi(phi) = eta_m cos^{e1} sin^{e2} P^{(mu2 + e2 - 1/2, mu1 + e1 - 1/2)}_{m - e1/2 - e2/2}(cos 2 phi).
AngularProfile angular_wavefunction(const AngularQuantum& q, const DeformationParams& mu);

/// E = 2 (nr + m) + mu1 + mu2 + 1.
double energy(int nr, HalfInteger m, const DeformationParams& mu);

/// Normalization [2 Gamma(n + 1) / Gamma(n + 2k)]^{1/2} of the Sturmian function.
double sturmian_norm(int n, double k);

/// R_{n,k}(r) = [2 n! / Gamma(n + 2k)]^{1/2} r^{2k - (mu1 + mu2 + 1)} e^{-r^2/2} L_n^{2k-1}(r^2).
/// The returned profile supplies exact jets of every order.
RadialProfile radial_sturmian(const RadialQuantum& q, const DeformationParams& mu);

/// Value, first and second derivative of R_{n,k} at r from the Laguerre
/// derivative identity, independent of the jet arithmetic.
struct RadialDerivatives {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};
RadialDerivatives sturmian_derivatives(const RadialQuantum& q, const DeformationParams& mu, double r);

enum class Substitution { r_to_u, u_to_r };

/// U(r) = r^{(1 + 2 mu1 + 2 mu2)/2} R(r) and its inverse.
RadialProfile substitute_u(const RadialProfile& f, const DeformationParams& mu, Substitution direction);

/// All states with energy <= emax, sorted by (energy, m, nr, s1, s2).
std::vector<StateLabel> enumerate_states(double emax, const DeformationParams& mu);

/// All angular labels with m <= mmax, in the same sector order.
std::vector<AngularQuantum> enumerate_angular(HalfInteger mmax, const DeformationParams& mu);

/// n Chebyshev-Lobatto points on [a, b], endpoints included. Residual grids
/// default to 50 points on [0.05, rmax], clear of the r = 0 singular terms.
std::vector<double> chebyshev_grid(double a, double b, int n);
std::vector<double> residual_grid(double rmax = 12.0, int n = 50);

}  // namespace dunkl::basis
