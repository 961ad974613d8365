#include "dunkl/dunkl_ops.hpp"

#include <cmath>
#include <numbers>

#include "dunkl/errors.hpp"

namespace dunkl::ops {

namespace {

using Fn = PlaneFunction::Fn;

// Coordinates relative to a reflection axis: u runs along the reflected
// coordinate, v along the other one.
struct AxisView {
  Axis axis;

  bool along_x() const { return axis == Axis::x; }
  double u(double x, double y) const { return along_x() ? x : y; }
  // Point (x, y) with its u coordinate negated.
  std::pair<double, double> mirror(double x, double y) const {
    return along_x() ? std::pair{-x, y} : std::pair{x, -y};
  }
  const std::optional<Fn>& du(const PlaneFunction& f) const { return along_x() ? f.dx : f.dy; }
  const std::optional<Fn>& dv(const PlaneFunction& f) const { return along_x() ? f.dy : f.dx; }
  const std::optional<Fn>& duu(const PlaneFunction& f) const { return along_x() ? f.dxx : f.dyy; }
  std::optional<Fn>& du(PlaneFunction& f) const { return along_x() ? f.dx : f.dy; }
  std::optional<Fn>& dv(PlaneFunction& f) const { return along_x() ? f.dy : f.dx; }
  int sign(const ParityHint& p) const { return along_x() ? p.s1 : p.s2; }
  double coupling(const DeformationParams& mu) const { return along_x() ? mu.mu1() : mu.mu2(); }
};

cplx first_partial(const PlaneFunction& f, const AxisView& view, double x, double y) {
  if (const auto& d = view.du(f)) return (*d)(x, y);
  if (view.along_x()) return fd_first([&](double t) { return f(t, y); }, x);
  return fd_first([&](double t) { return f(x, t); }, y);
}

cplx second_partial(const PlaneFunction& f, const AxisView& view, double x, double y) {
  if (const auto& d = view.duu(f)) return (*d)(x, y);
  if (view.along_x()) return fd_second([&](double t) { return f(t, y); }, x);
  return fd_second([&](double t) { return f(x, t); }, y);
}

cplx mirrored_value(const Fn& f, const AxisView& view, double x, double y) {
  const auto [mx, my] = view.mirror(x, y);
  return f(mx, my);
}

[[noreturn]] void axis_singularity(const AxisView& view) {
  throw SingularityError(std::string("Dunkl operator evaluated on the ") +
                         (view.along_x() ? "x = 0" : "y = 0") +
                         " axis without a parity hint");
}

Fn compose_mirror(const Fn& f, Axis axis, int derivative_sign) {
  if (axis == Axis::x) {
    return [f, derivative_sign](double x, double y) { return static_cast<double>(derivative_sign) * f(-x, y); };
  }
  return [f, derivative_sign](double x, double y) { return static_cast<double>(derivative_sign) * f(x, -y); };
}

}  // namespace

PlaneFunction reflect(const PlaneFunction& f, Axis axis) {
  const bool ax = axis == Axis::x;
  PlaneFunction g;
  g.value = compose_mirror(f.value, axis, 1);
  // Each derivative along the reflected coordinate contributes a sign.
  if (f.dx) g.dx = compose_mirror(*f.dx, axis, ax ? -1 : 1);
  if (f.dy) g.dy = compose_mirror(*f.dy, axis, ax ? 1 : -1);
  if (f.dxx) g.dxx = compose_mirror(*f.dxx, axis, 1);
  if (f.dyy) g.dyy = compose_mirror(*f.dyy, axis, 1);
  if (f.dxy) g.dxy = compose_mirror(*f.dxy, axis, -1);
  g.parity = f.parity;
  return g;
}

PlaneFunction dunkl_derivative(const PlaneFunction& f, Axis axis, const DeformationParams& mu) {
  const AxisView view{axis};
  const double c = view.coupling(mu);

  PlaneFunction g;
  g.value = [f, view, c](double x, double y) -> cplx {
    const double u = view.u(x, y);
    const cplx fu = first_partial(f, view, x, y);
    if (c == 0.0) return fu;
    if (u == 0.0) {
      if (!f.parity) axis_singularity(view);
      // Odd functions: (f - Rf)/u -> 2 df/du; even functions: the quotient vanishes.
      return view.sign(*f.parity) < 0 ? (1.0 + 2.0 * c) * fu : fu;
    }
    return fu + (c / u) * (f(x, y) - mirrored_value(f.value, view, x, y));
  };

  // d/dv of D_u f needs f_v and f_uv.
  if (view.dv(f) && f.dxy) {
    const Fn fv = *view.dv(f);
    const Fn fuv = *f.dxy;
    view.dv(g) = [fv, fuv, view, c](double x, double y) -> cplx {
      if (c == 0.0) return fuv(x, y);
      const double u = view.u(x, y);
      if (u == 0.0) axis_singularity(view);
      return fuv(x, y) + (c / u) * (fv(x, y) - mirrored_value(fv, view, x, y));
    };
  }
  // d/du of D_u f needs f_u and f_uu; the mirrored f_u enters with a sign flip.
  if (view.du(f) && view.duu(f)) {
    const Fn fu = *view.du(f);
    const Fn fuu = *view.duu(f);
    const Fn fval = f.value;
    view.du(g) = [fu, fuu, fval, view, c](double x, double y) -> cplx {
      if (c == 0.0) return fuu(x, y);
      const double u = view.u(x, y);
      if (u == 0.0) axis_singularity(view);
      const cplx diff = fval(x, y) - mirrored_value(fval, view, x, y);
      const cplx dsum = fu(x, y) + mirrored_value(fu, view, x, y);
      return fuu(x, y) - (c / (u * u)) * diff + (c / u) * dsum;
    };
  }
  if (f.parity) {
    ParityHint p = *f.parity;
    if (view.along_x()) {
      p.s1 = -p.s1;
    } else {
      p.s2 = -p.s2;
    }
    g.parity = p;
  }
  return g;
}

PlaneFunction apply_hamiltonian(const PlaneFunction& f, const DeformationParams& mu) {
  auto square = [f](const AxisView& view, double c, double x, double y) -> cplx {
    const double u = view.u(x, y);
    const cplx fuu = second_partial(f, view, x, y);
    if (c == 0.0) return fuu;
    if (u == 0.0) {
      if (!f.parity) axis_singularity(view);
      // Even functions: (1 + 2 mu) f_uu in the limit; odd functions: D_u^2 f is odd and vanishes.
      return view.sign(*f.parity) < 0 ? cplx{} : (1.0 + 2.0 * c) * fuu;
    }
    const cplx fu = first_partial(f, view, x, y);
    const cplx diff = f(x, y) - mirrored_value(f.value, view, x, y);
    return fuu + (2.0 * c / u) * fu - (c / (u * u)) * diff;
  };

  PlaneFunction h;
  h.value = [f, mu, square](double x, double y) -> cplx {
    const cplx dxx = square(AxisView{Axis::x}, mu.mu1(), x, y);
    const cplx dyy = square(AxisView{Axis::y}, mu.mu2(), x, y);
    return -0.5 * (dxx + dyy) + 0.5 * (x * x + y * y) * f(x, y);
  };
  h.parity = f.parity;
  return h;
}

RadialProfile apply_radial_hamiltonian(const RadialProfile& R, const DeformationParams& mu, double l2) {
  const double m = mu.sum();
  return RadialProfile(
      [R, m, l2](double r, int order) {
        if (!(r > 0.0)) throw SingularityError("radial Hamiltonian evaluated at r <= 0");
        const Jet f = R.jet(r, order + 2);
        const Jet d1 = f.differentiate();
        const Jet d2 = d1.differentiate();
        const Jet rj = Jet::variable(r, order);
        const Jet inv_r = 1.0 / rj;
        return -0.5 * (d2 + d1 * inv_r) - m * d1 * inv_r + 0.5 * rj * rj * f +
               (0.5 * l2) * inv_r * inv_r * f;
      },
      R.derived_order(2));
}

AngularProfile apply_angular_operator(const AngularProfile& Phi, const DeformationParams& mu) {
  const double mu1 = mu.mu1();
  const double mu2 = mu.mu2();
  return AngularProfile(
      [Phi, mu1, mu2](double phi, int order) {
        constexpr double kAxisTolerance = 1e-10;
        const double cphi = std::cos(phi);
        const double sphi = std::sin(phi);
        if ((mu1 != 0.0 && std::abs(cphi) < kAxisTolerance) ||
            (mu2 != 0.0 && std::abs(sphi) < kAxisTolerance)) {
          throw SingularityError("angular operator evaluated on a reflection axis");
        }
        const Jet f = Phi.jet(phi, order + 2);
        const Jet d1 = f.differentiate();
        const Jet d2 = d1.differentiate();
        const Jet var = Jet::variable(phi, order);
        const Jet c = cos(var);
        const Jet s = sin(var);
        Jet out = -0.5 * d2;
        if (mu1 != 0.0) {
          const Jet rx = Phi.jet(std::numbers::pi - phi, order).mirrored();
          out += mu1 * (s / c) * d1 + mu1 * (f - rx) / (2.0 * c * c);
        }
        if (mu2 != 0.0) {
          const Jet ry = Phi.jet(-phi, order).mirrored();
          out += -mu2 * (c / s) * d1 + mu2 * (f - ry) / (2.0 * s * s);
        }
        return out;
      },
      Phi.derived_order(2));
}

PlaneFunction separable(const RadialProfile& R, const AngularProfile& Phi, std::optional<ParityHint> parity) {
  PlaneFunction f;
  f.value = [R, Phi](double x, double y) { return R(std::hypot(x, y)) * Phi(std::atan2(y, x)); };
  f.parity = parity;
  return f;
}

}  // namespace dunkl::ops
