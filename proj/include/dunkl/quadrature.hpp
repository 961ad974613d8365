#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "dunkl/deformation.hpp"
#include "dunkl/profile.hpp"

namespace dunkl::specfun {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double a = 0.0;
  double b = 0.0;

  std::size_t size() const { return nodes.size(); }
};

/// n-point Gauss-Legendre rule on [a, b].
QuadratureRule gauss_legendre(int npoints, double a, double b);

/// n-point Gauss-Jacobi rule for int_{-1}^{1} (1-x)^alpha (1+x)^beta g(x) dx,
/// from the eigen-decomposition of the Jacobi matrix.
QuadratureRule gauss_jacobi(int npoints, double alpha, double beta);

/// Behaviour of an integrand f ~ |x - end|^exponent * smooth at a graded end.
/// `levels` geometric refinements (ratio 0.15) precede the Gauss-Jacobi panel;
/// they only help when the end sits at 0, since nodes crowding a nonzero end
/// lose their distance to it in rounding.
struct EndpointPower {
  double exponent = 0.0;
  int levels = 0;
};

/// Composite Gauss-Legendre rule on [a, b] with about `npoints` nodes in
/// uniform 16-point panels, for plain integrals int f dx. At a graded end the
/// outermost panel becomes optional geometric refinements followed by a
/// Gauss-Jacobi panel matched to the endpoint power, so integrable
/// singularities like |x - a|^{-0.8} are resolved to full accuracy.
QuadratureRule composite_rule(double a, double b, int npoints, std::optional<EndpointPower> grade_a,
                              std::optional<EndpointPower> grade_b);

/// Radial cutoff such that Gaussian tails of eigenstates up to energy emax
/// are below double precision: max(12, sqrt(2 emax) + 6).
double default_rmax(double emax = 0.0);

inline constexpr int kDefaultRadialPoints = 400;
inline constexpr int kDefaultAngularPoints = 256;

/// Nodes on (0, rmax] with weights that already include r^{1+2mu1+2mu2}.
QuadratureRule radial_rule(const DeformationParams& mu, double rmax = default_rmax(),
                           int npoints = kDefaultRadialPoints);

/// Nodes on [0, 2pi) with weights that include |cos|^{2mu1} |sin|^{2mu2}.
/// Each quadrant is its own panel group, graded at both ends.
QuadratureRule angular_rule(const DeformationParams& mu, int npoints_per_quadrant = kDefaultAngularPoints);

/// sum_i w_i conj(f_i) g_i.
std::complex<double> integrate(const QuadratureRule& rule, std::span<const std::complex<double>> f,
                               std::span<const std::complex<double>> g);

template <class D>
std::vector<std::complex<double>> sample(const Profile<D>& f, const QuadratureRule& rule) {
  std::vector<std::complex<double>> out;
  out.reserve(rule.size());
  for (double x : rule.nodes) out.push_back(f(x));
  return out;
}

/// Hermitian radial inner product int_0^rmax conj(f) g r^{1+2mu1+2mu2} dr.
/// For the real profiles of the eigenbasis this is the ordinary bilinear form.
std::complex<double> radial_inner_product(const RadialProfile& f, const RadialProfile& g,
                                          const DeformationParams& mu, double rmax = default_rmax(),
                                          int npoints = kDefaultRadialPoints);

/// Angular inner product over [0, 2pi) with weight |cos|^{2mu1} |sin|^{2mu2}.
std::complex<double> angular_inner_product(const AngularProfile& f, const AngularProfile& g,
                                           const DeformationParams& mu,
                                           int npoints_per_quadrant = kDefaultAngularPoints);

}  // namespace dunkl::specfun
