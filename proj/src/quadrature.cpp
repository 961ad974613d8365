#include "dunkl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "dunkl/errors.hpp"
#include "dunkl/specfun.hpp"

namespace dunkl::specfun {

namespace {

constexpr int kPanelOrder = 16;
constexpr double kGradingRatio = 0.15;
constexpr int kRadialLevels = 8;

void append_panel(QuadratureRule& out, const QuadratureRule& ref, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  for (std::size_t i = 0; i < ref.size(); ++i) {
    out.nodes.push_back(mid + half * ref.nodes[i]);
    out.weights.push_back(half * ref.weights[i]);
  }
}

// Panels [a + h s^{j+1}, a + h s^j] for j < levels, then [a, a + h s^levels];
// toward_a = false mirrors the construction onto the b end of [a, a + h].
// The innermost panel gets a Gauss-Jacobi rule whose weights are divided by
// the endpoint power, so the composite rule still integrates plain f.
void append_graded(QuadratureRule& out, const QuadratureRule& ref, double a, double h, bool toward_a,
                   EndpointPower end) {
  const double exponent = end.exponent;
  double outer = 1.0;
  for (int j = 0; j < end.levels; ++j) {
    const double inner = outer * kGradingRatio;
    if (toward_a) {
      append_panel(out, ref, a + h * inner, a + h * outer);
    } else {
      append_panel(out, ref, a + h * (1.0 - outer), a + h * (1.0 - inner));
    }
    outer = inner;
  }
  const double delta = h * outer;
  const QuadratureRule gj = toward_a ? gauss_jacobi(kPanelOrder, 0.0, exponent)
                                     : gauss_jacobi(kPanelOrder, exponent, 0.0);
  for (std::size_t i = 0; i < gj.size(); ++i) {
    const double y = gj.nodes[i];
    const double s = toward_a ? 1.0 + y : 1.0 - y;  // distance to the singular end, in units of delta/2
    out.nodes.push_back(toward_a ? a + 0.5 * delta * s : a + h - 0.5 * delta * s);
    out.weights.push_back(0.5 * delta * gj.weights[i] / std::pow(s, exponent));
  }
}

}  // namespace

QuadratureRule gauss_legendre(int npoints, double a, double b) {
  if (npoints < 1) throw DomainError("gauss_legendre needs at least one node");
  if (!(a < b)) throw DomainError("gauss_legendre requires a < b");
  const int n = npoints;
  std::vector<double> x(n), w(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      dp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // Re-evaluate the derivative at the converged node for the weight.
    double p1 = 1.0, p2 = 0.0;
    for (int j = 1; j <= n; ++j) {
      const double p3 = p2;
      p2 = p1;
      p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
    }
    dp = n * (z * p1 - p2) / (z * z - 1.0);
    const double wi = 2.0 / ((1.0 - z * z) * dp * dp);
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = wi;
    w[n - 1 - i] = wi;
  }
  if (n % 2 == 1) x[n / 2] = 0.0;

  QuadratureRule rule;
  rule.a = a;
  rule.b = b;
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  for (int i = 0; i < n; ++i) {
    rule.nodes.push_back(mid + half * x[i]);
    rule.weights.push_back(half * w[i]);
  }
  return rule;
}

QuadratureRule gauss_jacobi(int npoints, double alpha, double beta) {
  if (npoints < 1) throw DomainError("gauss_jacobi needs at least one node");
  if (!(alpha > -1.0) || !(beta > -1.0)) throw DomainError("gauss_jacobi exponents must exceed -1");
  const int n = npoints;
  const double ab = alpha + beta;
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const double t = 2.0 * j + ab;
    J(j, j) = (j == 0) ? (beta - alpha) / (ab + 2.0) : (beta * beta - alpha * alpha) / (t * (t + 2.0));
    if (j + 1 < n) {
      const double k = j + 1.0;
      const double u = 2.0 * k + ab;
      const double off = std::sqrt(4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (u * u * (u + 1.0) * (u - 1.0)));
      J(j, j + 1) = off;
      J(j + 1, j) = off;
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(J);
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + log_gamma(alpha + 1.0) + log_gamma(beta + 1.0) -
                              log_gamma(ab + 2.0));
  QuadratureRule rule;
  rule.a = -1.0;
  rule.b = 1.0;
  for (int i = 0; i < n; ++i) {
    const double v0 = eig.eigenvectors()(0, i);
    rule.nodes.push_back(eig.eigenvalues()(i));
    rule.weights.push_back(mu0 * v0 * v0);
  }
  return rule;
}

QuadratureRule composite_rule(double a, double b, int npoints, std::optional<EndpointPower> grade_a,
                              std::optional<EndpointPower> grade_b) {
  if (!(a < b)) throw DomainError("composite_rule requires a < b");
  int panels = std::max(1, (npoints + kPanelOrder - 1) / kPanelOrder);
  if (grade_a && grade_b) panels = std::max(panels, 2);
  const QuadratureRule ref = gauss_legendre(kPanelOrder, -1.0, 1.0);
  const double h = (b - a) / panels;

  QuadratureRule rule;
  rule.a = a;
  rule.b = b;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double hi = (p == panels - 1) ? b : lo + h;
    if (p == 0 && grade_a) {
      append_graded(rule, ref, lo, hi - lo, true, *grade_a);
    } else if (p == panels - 1 && grade_b) {
      append_graded(rule, ref, lo, hi - lo, false, *grade_b);
    } else {
      append_panel(rule, ref, lo, hi);
    }
  }
  return rule;
}

double default_rmax(double emax) { return std::max(12.0, std::sqrt(std::max(2.0 * emax, 0.0)) + 6.0); }

QuadratureRule radial_rule(const DeformationParams& mu, double rmax, int npoints) {
  const double exponent = 1.0 + 2.0 * mu.sum();
  if (!(exponent > -1.0)) throw DomainError("radial weight r^{1+2mu} is not integrable at 0");
  if (!(rmax > 0.0)) throw DomainError("radial cutoff must be positive");
  QuadratureRule rule = composite_rule(0.0, rmax, npoints, EndpointPower{exponent, kRadialLevels}, std::nullopt);
  for (std::size_t i = 0; i < rule.size(); ++i) rule.weights[i] *= std::pow(rule.nodes[i], exponent);
  return rule;
}

QuadratureRule angular_rule(const DeformationParams& mu, int npoints_per_quadrant) {
  QuadratureRule rule;
  rule.a = 0.0;
  rule.b = 2.0 * std::numbers::pi;
  const double quarter = 0.5 * std::numbers::pi;
  for (int q = 0; q < 4; ++q) {
    // Quadrants start on the x axis (sin = 0) for even q and on the y axis (cos = 0) for odd q.
    const double at_x_axis = 2.0 * mu.mu2();
    const double at_y_axis = 2.0 * mu.mu1();
    const EndpointPower lo{q % 2 == 0 ? at_x_axis : at_y_axis};
    const EndpointPower hi{q % 2 == 0 ? at_y_axis : at_x_axis};
    const QuadratureRule part = composite_rule(q * quarter, (q + 1) * quarter, npoints_per_quadrant, lo, hi);
    for (std::size_t i = 0; i < part.size(); ++i) {
      const double phi = part.nodes[i];
      const double w = std::pow(std::abs(std::cos(phi)), 2.0 * mu.mu1()) *
                       std::pow(std::abs(std::sin(phi)), 2.0 * mu.mu2());
      rule.nodes.push_back(phi);
      rule.weights.push_back(part.weights[i] * w);
    }
  }
  return rule;
}

std::complex<double> integrate(const QuadratureRule& rule, std::span<const std::complex<double>> f,
                               std::span<const std::complex<double>> g) {
  if (f.size() != rule.size() || g.size() != rule.size()) {
    throw DomainError("sample count does not match quadrature rule");
  }
  std::complex<double> s{};
  for (std::size_t i = 0; i < rule.size(); ++i) s += rule.weights[i] * std::conj(f[i]) * g[i];
  return s;
}

std::complex<double> radial_inner_product(const RadialProfile& f, const RadialProfile& g,
                                          const DeformationParams& mu, double rmax, int npoints) {
  const QuadratureRule rule = radial_rule(mu, rmax, npoints);
  return integrate(rule, sample(f, rule), sample(g, rule));
}

std::complex<double> angular_inner_product(const AngularProfile& f, const AngularProfile& g,
                                           const DeformationParams& mu, int npoints_per_quadrant) {
  const QuadratureRule rule = angular_rule(mu, npoints_per_quadrant);
  return integrate(rule, sample(f, rule), sample(g, rule));
}

}  // namespace dunkl::specfun
