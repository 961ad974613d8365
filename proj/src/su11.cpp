#include "dunkl/su11.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/errors.hpp"

namespace dunkl::su11 {

namespace {

// Wraps a jet-level differential operator of the given order into a profile
// transformation. `op` receives the input jet (order + op_order) and the
// jet of r (order).
template <class Op>
RadialProfile differential(const RadialProfile& in, int op_order, bool singular_at_origin, Op op) {
  return RadialProfile(
      [in, op_order, singular_at_origin, op](double r, int order) {
        if (singular_at_origin && !(r > 0.0)) {
          throw SingularityError("operator with 1/r terms evaluated at r <= 0");
        }
        const Jet f = in.jet(r, order + op_order);
        return op(f, Jet::variable(r, order)).truncated(order);
      },
      in.derived_order(op_order));
}

double sign_value(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }

}  // namespace

FactorizationConstants schrodinger_factorize(double energy, double l2, const DeformationParams& mu,
                                             Branch branch) {
  const double s = branch == Branch::upper ? 1.0 : -1.0;
  const double ms = mu.sum();
  FactorizationConstants fc;
  fc.branch = branch;
  fc.a = s;
  fc.c = s;
  fc.f = -s * energy - 0.5;
  fc.b = -s * energy - 1.5;
  fc.g = (energy + s) * (energy + s) - l2 - ms * ms;
  return fc;
}

RadialProfile apply_factorized(const RadialProfile& U, const FactorizationConstants& fc) {
  const RadialProfile inner = differential(U, 1, false, [fc](const Jet& u, const Jet& r) {
    return -r * u.differentiate() + (fc.c * r * r + fc.f) * u;
  });
  return differential(inner, 1, false, [fc](const Jet& v, const Jet& r) {
    return r * v.differentiate() + (fc.a * r * r + fc.b) * v;
  });
}

RadialProfile apply_J(const RadialProfile& U, double energy, Sign sign) {
  const double s = sign_value(sign);
  return differential(U, 1, false, [energy, s](const Jet& u, const Jet& r) {
    return 0.5 * (-s * r * u.differentiate() + r * r * u - energy * u - (0.5 * s) * u);
  });
}

double factorization_residual(const RadialProfile& U, double energy, double l2, const DeformationParams& mu,
                              Branch branch, std::span<const double> grid) {
  const FactorizationConstants fc = schrodinger_factorize(energy, l2, mu, branch);
  const Sign first = branch == Branch::upper ? Sign::plus : Sign::minus;
  const Sign second = branch == Branch::upper ? Sign::minus : Sign::plus;
  // (J- - 1) J+ on the upper branch, (J+ + 1) J- on the lower one.
  const double shift = branch == Branch::upper ? -1.0 : 1.0;
  const RadialProfile inner = apply_J(U, energy, first);
  const RadialProfile lhs = combine(1.0, apply_J(inner, energy, second), shift, inner);
  return max_abs_diff(lhs, scaled(0.25 * fc.g, U), grid);
}

RadialProfile apply_B0(const RadialProfile& U, double l2, const DeformationParams& mu) {
  const double ms = mu.sum();
  const double centrifugal = l2 - 0.25 + ms * ms;
  return differential(U, 2, true, [centrifugal](const Jet& u, const Jet& r) {
    const Jet d2 = u.differentiate().differentiate();
    return 0.25 * (-d2 + r * r * u + centrifugal * u / (r * r));
  });
}

RadialProfile apply_B(const RadialProfile& U, Sign sign, double l2, const DeformationParams& mu) {
  const double s = sign_value(sign);
  const RadialProfile b0 = apply_B0(U, l2, mu);
  return RadialProfile(
      [U, b0, s](double r, int order) {
        const Jet u = U.jet(r, order + 1);
        const Jet rj = Jet::variable(r, order);
        return 0.5 * (-s * rj * u.differentiate() + rj * rj * u - 2.0 * b0.jet(r, order) - (0.5 * s) * u);
      },
      U.derived_order(2));
}

RadialProfile apply_A(const RadialProfile& R, Generator which, const DeformationParams& mu, double l2) {
  const double ms = mu.sum();
  const auto a0 = [ms, l2](const Jet& f, const Jet& r) {
    const Jet d1 = f.differentiate();
    const Jet d2 = d1.differentiate();
    return 0.25 * (-d2 - (1.0 + 2.0 * ms) * d1 / r + l2 * f / (r * r) + r * r * f);
  };
  if (which == Generator::zero) return differential(R, 2, true, a0);
  const double s = which == Generator::plus ? 1.0 : -1.0;
  return differential(R, 2, true, [a0, s, ms](const Jet& f, const Jet& r) {
    return 0.5 * (s * r * f.differentiate() - r * r * f + 2.0 * a0(f, r) + (s * (1.0 + ms)) * f);
  });
}

AlgebraState AlgebraState::make(double k, int n) {
  if (!(k > 0.0)) throw RepresentationError("discrete series requires k > 0");
  if (n < 0) throw DomainError("state index must be non-negative");
  return AlgebraState{k, n};
}

double ladder_coefficient(const AlgebraState& s, Generator which) {
  const double n = s.n;
  switch (which) {
    case Generator::plus:
      return std::sqrt((n + 1.0) * (2.0 * s.k + n));
    case Generator::minus:
      return std::sqrt(n * (2.0 * s.k + n - 1.0));
    case Generator::zero:
      return s.k + n;
  }
  return 0.0;
}

double casimir_check(const RadialProfile& R, double k, const DeformationParams& mu, double l2,
                     std::span<const double> grid) {
  const RadialProfile a0r = apply_A(R, Generator::zero, mu, l2);
  const RadialProfile lowered = apply_A(R, Generator::minus, mu, l2);
  const RadialProfile raised_lowered = apply_A(lowered, Generator::plus, mu, l2);
  const RadialProfile a0a0r = apply_A(a0r, Generator::zero, mu, l2);
  const RadialProfile casimir = combine(-1.0, raised_lowered, 1.0, combine(1.0, a0a0r, -1.0, a0r));
  const double kk = k * (k - 1.0);
  const double op_residual = max_abs_diff(casimir, scaled(kk, R), grid);
  const double ms = mu.sum();
  const double value_mismatch = std::abs(0.25 * (ms * ms + l2 - 1.0) - kk);
  return std::max(op_residual, value_mismatch);
}

BargmannRoots bargmann_index(HalfInteger m, const DeformationParams& mu) {
  if (m.twice() < 0) throw DomainError("m must be non-negative");
  const double ms = mu.sum();
  return BargmannRoots{m.value() + 0.5 * (ms + 1.0), -m.value() - 0.5 * (ms - 1.0)};
}

double commutator_residual(Commutator pair, const RadialProfile& R, const DeformationParams& mu, double l2,
                           std::span<const double> grid) {
  const auto A = [&](const RadialProfile& f, Generator g) { return apply_A(f, g, mu, l2); };
  switch (pair) {
    case Commutator::a0_aplus: {
      const RadialProfile lhs = combine(1.0, A(A(R, Generator::plus), Generator::zero), -1.0,
                                        A(A(R, Generator::zero), Generator::plus));
      return max_abs_diff(lhs, A(R, Generator::plus), grid);
    }
    case Commutator::a0_aminus: {
      const RadialProfile lhs = combine(1.0, A(A(R, Generator::minus), Generator::zero), -1.0,
                                        A(A(R, Generator::zero), Generator::minus));
      return max_abs_diff(lhs, scaled(-1.0, A(R, Generator::minus)), grid);
    }
    case Commutator::aminus_aplus: {
      const RadialProfile lhs = combine(1.0, A(A(R, Generator::plus), Generator::minus), -1.0,
                                        A(A(R, Generator::minus), Generator::plus));
      return max_abs_diff(lhs, scaled(2.0, A(R, Generator::zero)), grid);
    }
  }
  return 0.0;
}

}  // namespace dunkl::su11
