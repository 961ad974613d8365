#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <utility>

#include "dunkl/errors.hpp"
#include "dunkl/jet.hpp"

namespace dunkl {

struct RadialDomain {};
struct AngularDomain {};

/// Five-point central differences. The first-derivative step is
/// 1e-5 * max(1, |x|); the second-derivative step is 1e-3 * max(1, |x|),
/// which balances truncation against roundoff for the second difference.
cplx fd_first(const std::function<cplx(double)>& f, double x);
cplx fd_second(const std::function<cplx(double)>& f, double x);

/// A function of one real variable that can report its Taylor jet.
///
/// `exact_order` is the highest jet order the underlying map computes
/// exactly. Requests above it fall back to finite differences of the value
/// for orders 1 and 2 and are rejected beyond that. The Domain tag keeps
/// radial and angular functions from being mixed up.
template <class Domain>
class Profile {
 public:
  using JetFn = std::function<Jet(double x, int order)>;
  using ValueFn = std::function<cplx(double x)>;

  static constexpr int kUnbounded = Jet::kMaxOrder;

  Profile() : Profile(zero()) {}
  Profile(JetFn fn, int exact_order = kUnbounded)
      : fn_(std::move(fn)), exact_order_(exact_order) {}

  static Profile zero() {
    return Profile([](double, int order) { return Jet(order); });
  }

  /// Value-only profile; derivatives come from finite differences.
  static Profile from_values(ValueFn f) {
    return Profile([f = std::move(f)](double x, int order) { return Jet(order, f(x)); }, 0);
  }

  /// Profile with caller-supplied exact first and second derivatives.
  static Profile from_values(ValueFn f, ValueFn df, ValueFn d2f) {
    return Profile(
        [f = std::move(f), df = std::move(df), d2f = std::move(d2f)](double x, int order) {
          Jet j(order, f(x));
          if (order >= 1) j[1] = df(x);
          if (order >= 2) j[2] = 0.5 * d2f(x);
          return j;
        },
        2);
  }

  cplx operator()(double x) const { return fn_(x, 0).value(); }

  Jet jet(double x, int order) const {
    if (order <= exact_order_) return fn_(x, order);
    if (order > 2) {
      throw DomainError("profile cannot supply derivatives of order " +
                              std::to_string(order));
    }
    Jet j = fn_(x, exact_order_);
    Jet out(order, j.value());
    ValueFn value = [this](double t) { return (*this)(t); };
    if (exact_order_ >= 1) {
      out[1] = j[1];
    } else {
      out[1] = fd_first(value, x);
    }
    if (order >= 2) out[2] = 0.5 * fd_second(value, x);
    return out;
  }

  cplx derivative(double x, int k) const { return jet(x, k).derivative(k); }

  int exact_order() const { return exact_order_; }

  /// Order served by a profile derived through a differential operator of
  /// the given order.
  int derived_order(int operator_order) const {
    const int served = std::max(exact_order_, 2);
    return std::max(served - operator_order, 0);
  }

 private:
  JetFn fn_;
  int exact_order_ = kUnbounded;
};

using RadialProfile = Profile<RadialDomain>;
using AngularProfile = Profile<AngularDomain>;

/// Pointwise linear combination a*f + b*g.
template <class D>
Profile<D> combine(cplx a, const Profile<D>& f, cplx b, const Profile<D>& g) {
  return Profile<D>([=](double x, int order) { return f.jet(x, order) * a + g.jet(x, order) * b; },
                    std::min(f.exact_order(), g.exact_order()));
}

template <class D>
Profile<D> scaled(cplx a, const Profile<D>& f) {
  return Profile<D>([=](double x, int order) { return f.jet(x, order) * a; }, f.exact_order());
}

/// max_i |f(x_i)| over a sample grid.
template <class D>
double max_abs(const Profile<D>& f, std::span<const double> grid) {
  double m = 0.0;
  for (double x : grid) m = std::max(m, std::abs(f(x)));
  return m;
}

/// max_i |f(x_i) - g(x_i)| over a sample grid.
template <class D>
double max_abs_diff(const Profile<D>& f, const Profile<D>& g, std::span<const double> grid) {
  double m = 0.0;
  for (double x : grid) m = std::max(m, std::abs(f(x) - g(x)));
  return m;
}

}  // namespace dunkl
