#pragma once

#include <span>
#include <vector>

#include "dunkl/deformation.hpp"
#include "dunkl/half_integer.hpp"
#include "dunkl/profile.hpp"

// su(1,1) structure of the radial problem.
//
// U-space operators act on U(r) = r^{(1+2mu)/2} R(r): the factorization
// pair J+-, and the generators B0, B+-. R-space generators A0, A+- act on the
// radial functions directly and satisfy A0 = H_r / 2. All operators are
// applied through exact jets, so they compose to any order the input allows.

namespace dunkl::su11 {

enum class Branch { upper, lower };
enum class Sign { plus, minus };
enum class Generator { zero, plus, minus };
enum class Commutator { a0_aplus, a0_aminus, aminus_aplus };

/// Constants of (r d/dr + a r^2 + b)(-r d/dr + c r^2 + f) U = g U for an
/// eigenfunction U of energy E:
///   upper: a = c = 1,  f = -E - 1/2, b = -E - 3/2, g = (E + 1)^2 - l2 - mu^2
///   lower: a = c = -1, f =  E - 1/2, b =  E - 3/2, g = (E - 1)^2 - l2 - mu^2
/// where mu = mu1 + mu2.
struct FactorizationConstants {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double f = 0.0;
  double g = 0.0;
  Branch branch = Branch::upper;
};

FactorizationConstants schrodinger_factorize(double energy, double l2, const DeformationParams& mu,
                                             Branch branch);

/// (r d/dr + a r^2 + b)(-r d/dr + c r^2 + f) U, the product side of the factorization.
RadialProfile apply_factorized(const RadialProfile& U, const FactorizationConstants& fc);

/// J+- U = 1/2 (-+ r U' + r^2 U - E U -+ U/2).
RadialProfile apply_J(const RadialProfile& U, double energy, Sign sign);

/// max |(J-+ -+ 1) J+- U - (g/4) U| on the grid, with g from the matching branch.
double factorization_residual(const RadialProfile& U, double energy, double l2, const DeformationParams& mu,
                              Branch branch, std::span<const double> grid);

/// B0 U = 1/4 [-U'' + r^2 U + (l2 - 1/4 + mu^2) U / r^2].
RadialProfile apply_B0(const RadialProfile& U, double l2, const DeformationParams& mu);

/// B+- U = 1/2 [-+ r U' + r^2 U - 2 B0 U -+ U/2].
RadialProfile apply_B(const RadialProfile& U, Sign sign, double l2, const DeformationParams& mu);

/// A0 R = 1/4 (-R'' - (1 + 2mu) R'/r + l2 R / r^2 + r^2 R),
/// A+- R = 1/2 (+- r R' - r^2 R + 2 A0 R +- (1 + mu) R).
RadialProfile apply_A(const RadialProfile& R, Generator which, const DeformationParams& mu, double l2);

/// Label |k, n> of the positive discrete series.
struct AlgebraState {
  double k = 0.5;
  int n = 0;

  static AlgebraState make(double k, int n);
  double casimir() const { return k * (k - 1.0); }
};

/// sqrt((n+1)(2k+n)) for plus, sqrt(n(2k+n-1)) for minus, k + n for zero.
double ladder_coefficient(const AlgebraState& s, Generator which);

/// max |A^2 R - k(k-1) R| with A^2 = -A+ A- + A0 (A0 - 1) applied
/// compositionally, combined (by max) with |(mu^2 + l2 - 1)/4 - k(k-1)|.
double casimir_check(const RadialProfile& R, double k, const DeformationParams& mu, double l2,
                     std::span<const double> grid);

struct BargmannRoots {
  double k_plus = 0.0;
  double k_minus = 0.0;
};

/// Both roots of k(k-1) = (mu^2 + l2 - 1)/4: k+ = m + (mu+1)/2, k- = -m - (mu-1)/2.
BargmannRoots bargmann_index(HalfInteger m, const DeformationParams& mu);

/// max |([A0, A+] - A+) R|, |([A0, A-] + A-) R| or |([A-, A+] - 2 A0) R| on the grid.
double commutator_residual(Commutator pair, const RadialProfile& R, const DeformationParams& mu, double l2,
                           std::span<const double> grid);

}  // namespace dunkl::su11
