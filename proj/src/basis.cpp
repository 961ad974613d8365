#include "dunkl/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

#include "dunkl/errors.hpp"
#include "dunkl/specfun.hpp"

namespace dunkl::basis {

namespace {

int indicator(int s) {
  if (s == 1) return 0;
  if (s == -1) return 1;
  throw DomainError("reflection eigenvalue must be +1 or -1");
}

void require_valid_indicators(HalfInteger m, int e1, int e2) {
  if ((e1 != 0 && e1 != 1) || (e2 != 0 && e2 != 1)) {
    throw DomainError("indicator exponents must be 0 or 1");
  }
  const int twice_degree = m.twice() - e1 - e2;
  if (twice_degree < 0 || twice_degree % 2 != 0) {
    throw DomainError("m - e1/2 - e2/2 must be a non-negative integer (m = " + m.to_string() + ")");
  }
}

}  // namespace

bool is_valid_sector(int s1, int s2, HalfInteger m) {
  if ((s1 != 1 && s1 != -1) || (s2 != 1 && s2 != -1) || m.twice() < 0) return false;
  const int twice_degree = m.twice() - indicator(s1) - indicator(s2);
  return twice_degree >= 0 && twice_degree % 2 == 0;
}

AngularQuantum AngularQuantum::make(int s1, int s2, HalfInteger m, const DeformationParams& mu) {
  if (!is_valid_sector(s1, s2, m)) {
    throw DomainError("invalid angular label (s1=" + std::to_string(s1) + ", s2=" + std::to_string(s2) +
                      ", m=" + m.to_string() + ")");
  }
  AngularQuantum q;
  q.s1 = s1;
  q.s2 = s2;
  q.m = m;
  q.e1 = indicator(s1);
  q.e2 = indicator(s2);
  q.l2 = separation_constant(m, mu);
  return q;
}

RadialQuantum RadialQuantum::make(int nr, double k) {
  if (nr < 0) throw DomainError("radial quantum number must be non-negative");
  if (!(k > 0.0)) throw RepresentationError("Bargmann index must be positive for the discrete series");
  return RadialQuantum{nr, k};
}

RadialQuantum RadialQuantum::from_m(int nr, HalfInteger m, const DeformationParams& mu) {
  return make(nr, bargmann_k(m, mu));
}

double separation_constant(HalfInteger m, const DeformationParams& mu) {
  if (m.twice() < 0) throw DomainError("m must be non-negative");
  return 4.0 * m.value() * (m.value() + mu.sum());
}

double bargmann_k(HalfInteger m, const DeformationParams& mu) {
  if (m.twice() < 0) throw DomainError("m must be non-negative");
  return m.value() + 0.5 * (mu.sum() + 1.0);
}

double angular_norm(HalfInteger m, int e1, int e2, const DeformationParams& mu) {
  require_valid_indicators(m, e1, e2);
  using specfun::log_gamma;
  const double mv = m.value();
  const double ms = mu.sum();
  const double he = 0.5 * (e1 + e2);
  const int degree = (m.twice() - e1 - e2) / 2;
  // (2m + mu) Gamma(m + mu + (e1+e2)/2); at m = 0 this is mu Gamma(mu) = Gamma(mu + 1).
  const double log_head = (m.twice() == 0) ? log_gamma(ms + 1.0) : std::log(2.0 * mv + ms) + log_gamma(mv + ms + he);
  const double log_eta2 = log_head + log_gamma(degree + 1.0) - std::log(2.0) -
                          log_gamma(mv + mu.mu1() + 0.5 * (e1 - e2) + 0.5) -
                          log_gamma(mv + mu.mu2() + 0.5 * (e2 - e1) + 0.5);
  return std::exp(0.5 * log_eta2);
}

AngularProfile angular_wavefunction(const AngularQuantum& q, const DeformationParams& mu) {
  if (!is_valid_sector(q.s1, q.s2, q.m) || q.e1 != indicator(q.s1) || q.e2 != indicator(q.s2)) {
    throw DomainError("invalid angular label");
  }
  const double eta = angular_norm(q.m, q.e1, q.e2, mu);
  const int degree = q.jacobi_degree();
  const double alpha = mu.mu2() + q.e2 - 0.5;
  const double beta = mu.mu1() + q.e1 - 0.5;
  const int e1 = q.e1;
  const int e2 = q.e2;
  return AngularProfile([=](double phi, int order) {
    const Jet var = Jet::variable(phi, order);
    Jet prefactor(order, eta);
    if (e1 == 1) prefactor = prefactor * cos(var);
    if (e2 == 1) prefactor = prefactor * sin(var);
    const Jet x = cos(2.0 * var);
    return prefactor * specfun::detail::jacobi_recurrence(degree, alpha, beta, x);
  });
}

double energy(int nr, HalfInteger m, const DeformationParams& mu) {
  if (nr < 0) throw DomainError("radial quantum number must be non-negative");
  if (m.twice() < 0) throw DomainError("m must be non-negative");
  return static_cast<double>(2 * nr + m.twice()) + mu.sum() + 1.0;
}

double sturmian_norm(int n, double k) {
  if (!(k > 0.0)) throw RepresentationError("Bargmann index must be positive");
  using specfun::log_gamma;
  return std::exp(0.5 * (std::log(2.0) + log_gamma(n + 1.0) - log_gamma(n + 2.0 * k)));
}

RadialProfile radial_sturmian(const RadialQuantum& q, const DeformationParams& mu) {
  const RadialQuantum checked = RadialQuantum::make(q.nr, q.k);
  const double norm = sturmian_norm(checked.nr, checked.k);
  const double power = 2.0 * checked.k - (mu.sum() + 1.0);
  const double alpha = 2.0 * checked.k - 1.0;
  const int n = checked.nr;
  return RadialProfile([=](double r, int order) {
    const Jet rj = Jet::variable(r, order);
    const Jet x = rj * rj;
    const Jet envelope = pow(rj, power) * exp(-0.5 * x);
    return norm * envelope * specfun::detail::laguerre_recurrence(n, alpha, x);
  });
}

RadialDerivatives sturmian_derivatives(const RadialQuantum& q, const DeformationParams& mu, double r) {
  if (!(r > 0.0)) throw SingularityError("closed-form Sturmian derivatives need r > 0");
  const RadialQuantum checked = RadialQuantum::make(q.nr, q.k);
  const int n = checked.nr;
  const double norm = sturmian_norm(n, checked.k);
  const double p = 2.0 * checked.k - (mu.sum() + 1.0);
  const double alpha = 2.0 * checked.k - 1.0;
  const double x = r * r;

  const double g = std::pow(r, p) * std::exp(-0.5 * x);
  const double gl = p / r - r;  // g'/g
  const double g1 = g * gl;
  const double g2 = g * (gl * gl - p / (r * r) - 1.0);

  const double L = specfun::laguerre(n, alpha, x);
  const double L1 = specfun::laguerre_derivative(n, alpha, x);
  const double L2 = (n >= 1) ? -specfun::laguerre_derivative(n - 1, alpha + 1.0, x) : 0.0;

  RadialDerivatives d;
  d.value = norm * g * L;
  d.d1 = norm * (g1 * L + g * 2.0 * r * L1);
  d.d2 = norm * (g2 * L + 4.0 * r * g1 * L1 + g * (2.0 * L1 + 4.0 * x * L2));
  return d;
}

RadialProfile substitute_u(const RadialProfile& f, const DeformationParams& mu, Substitution direction) {
  const double s = 0.5 * (1.0 + 2.0 * mu.sum());
  const double power = direction == Substitution::r_to_u ? s : -s;
  return RadialProfile(
      [f, power](double r, int order) { return pow(Jet::variable(r, order), power) * f.jet(r, order); },
      f.exact_order());
}

std::vector<AngularQuantum> enumerate_angular(HalfInteger mmax, const DeformationParams& mu) {
  std::vector<AngularQuantum> out;
  for (int twice = 0; twice <= mmax.twice(); ++twice) {
    for (int s1 : {-1, 1}) {
      for (int s2 : {-1, 1}) {
        const HalfInteger m = HalfInteger::from_twice(twice);
        if (is_valid_sector(s1, s2, m)) out.push_back(AngularQuantum::make(s1, s2, m, mu));
      }
    }
  }
  return out;
}

std::vector<StateLabel> enumerate_states(double emax, const DeformationParams& mu) {
  const double slack = 1e-12 * std::max(1.0, std::abs(emax));
  std::vector<StateLabel> states;
  for (int twice = 0; energy(0, HalfInteger::from_twice(twice), mu) <= emax + slack; ++twice) {
    const HalfInteger m = HalfInteger::from_twice(twice);
    for (int s1 : {-1, 1}) {
      for (int s2 : {-1, 1}) {
        if (!is_valid_sector(s1, s2, m)) continue;
        const AngularQuantum aq = AngularQuantum::make(s1, s2, m, mu);
        for (int nr = 0; energy(nr, m, mu) <= emax + slack; ++nr) {
          states.push_back(StateLabel{aq, RadialQuantum::from_m(nr, m, mu), energy(nr, m, mu)});
        }
      }
    }
  }
  std::sort(states.begin(), states.end(), [](const StateLabel& a, const StateLabel& b) {
    return std::tuple(a.energy, a.angular.m, a.radial.nr, a.angular.s1, a.angular.s2) <
           std::tuple(b.energy, b.angular.m, b.radial.nr, b.angular.s1, b.angular.s2);
  });
  return states;
}

std::vector<double> chebyshev_grid(double a, double b, int n) {
  if (n < 2) throw DomainError("grid needs at least two points");
  if (!(a < b)) throw DomainError("grid requires a < b");
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    g[j] = 0.5 * (a + b) - 0.5 * (b - a) * std::cos(std::numbers::pi * j / (n - 1));
  }
  g.front() = a;
  g.back() = b;
  return g;
}

std::vector<double> residual_grid(double rmax, int n) { return chebyshev_grid(0.05, rmax, n); }

}  // namespace dunkl::basis
