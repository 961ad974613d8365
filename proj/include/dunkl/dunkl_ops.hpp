#pragma once

#include <functional>
#include <optional>

#include "dunkl/deformation.hpp"
#include "dunkl/profile.hpp"

// Dunkl differential-reflection operators acting on functions of the plane,
// and their polar radial and angular pieces acting on profiles.

namespace dunkl::ops {

enum class Axis { x, y };

/// Eigenvalues (+1 or -1) of the reflections R_x and R_y.
struct ParityHint {
  int s1 = 1;
  int s2 = 1;
};

/// A complex-valued function of (x, y). Exact partial derivatives are
/// optional; operators use them when present and fall back to five-point
/// central differences otherwise.
struct PlaneFunction {
  using Fn = std::function<cplx(double x, double y)>;

  Fn value;
  std::optional<Fn> dx, dy, dxx, dyy, dxy;
  std::optional<ParityHint> parity;

  cplx operator()(double x, double y) const { return value(x, y); }
};

/// g(x, y) = f(-x, y) for Axis::x, f(x, -y) for Axis::y. Supplied partials
/// and parity hints are carried over.
PlaneFunction reflect(const PlaneFunction& f, Axis axis);

/// D f = df/dx_i + (mu_i / x_i)(f - R_i f). On the axis x_i = 0 the quotient
/// is resolved from the parity hint; without one a SingularityError is raised
/// at evaluation time. The result carries exact partials wherever the input
/// supplies enough of them.
PlaneFunction dunkl_derivative(const PlaneFunction& f, Axis axis, const DeformationParams& mu);

/// H f = -1/2 [D_x^2 + D_y^2] f + 1/2 (x^2 + y^2) f with
/// D_i^2 = d^2/dx_i^2 + (2 mu_i / x_i) d/dx_i - (mu_i / x_i^2)(1 - R_i).
PlaneFunction apply_hamiltonian(const PlaneFunction& f, const DeformationParams& mu);

/// H_r R = -1/2 [R'' + R'/r] - (mu1 + mu2) R'/r + 1/2 r^2 R + l2/(2 r^2) R.
RadialProfile apply_radial_hamiltonian(const RadialProfile& R, const DeformationParams& mu, double l2);

/// B_phi Phi = -1/2 Phi'' + (mu1 tan - mu2 cot) Phi'
///             + mu1 (1 - R_x) Phi / (2 cos^2) + mu2 (1 - R_y) Phi / (2 sin^2),
/// with R_x: phi -> pi - phi and R_y: phi -> -phi.
AngularProfile apply_angular_operator(const AngularProfile& Phi, const DeformationParams& mu);

/// Plane function r, phi -> R(r) Phi(phi). No partials are attached.
PlaneFunction separable(const RadialProfile& R, const AngularProfile& Phi,
                        std::optional<ParityHint> parity = std::nullopt);

}  // namespace dunkl::ops
