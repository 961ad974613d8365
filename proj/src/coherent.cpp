#include "dunkl/coherent.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/basis.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/specfun.hpp"

namespace dunkl::coherent {

namespace {

void require_disk(cplx xi) {
  if (xi == cplx(1.0, 0.0)) throw PoleError("coherent state closed form has a pole at xi = 1");
  if (!(std::abs(xi) < 1.0)) throw DomainError("coherent parameter must satisfy |xi| < 1");
}

void require_k(double k) {
  if (!(k > 0.0)) throw RepresentationError("Bargmann index must be positive");
}

double radial_power(double k, const DeformationParams& mu) { return 2.0 * k - (mu.sum() + 1.0); }

// r^p for r >= 0, with r = 0 resolved from the sign of p.
double origin_safe_pow(double r, double p) {
  if (r > 0.0) return std::pow(r, p);
  if (p == 0.0) return 1.0;
  if (p > 0.0) return 0.0;
  throw SingularityError("radial factor r^p with p < 0 is singular at r = 0");
}

double log_cosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

}  // namespace

CoherentParams CoherentParams::make(cplx xi, double k) {
  require_disk(xi);
  require_k(k);
  return CoherentParams{xi, k};
}

CoherentParams CoherentParams::from_m(cplx xi, HalfInteger m, const DeformationParams& mu) {
  return make(xi, basis::bargmann_k(m, mu));
}

EvolutionParams EvolutionParams::make(double tau, double hbar) {
  if (!(hbar > 0.0)) throw DomainError("hbar must be positive");
  if (!std::isfinite(tau)) throw DomainError("tau must be finite");
  return EvolutionParams{tau, hbar};
}

cplx series_coefficient(const CoherentParams& p, int n) {
  require_disk(p.xi);
  require_k(p.k);
  if (n < 0) throw DomainError("series index must be non-negative");
  const double a = std::abs(p.xi);
  if (a == 0.0) return n == 0 ? cplx(1.0) : cplx(0.0);
  using specfun::log_gamma;
  const double log_mag = p.k * std::log1p(-a * a) +
                         0.5 * (log_gamma(n + 2.0 * p.k) - log_gamma(n + 1.0) - log_gamma(2.0 * p.k)) +
                         n * std::log(a);
  return std::polar(std::exp(log_mag), n * std::arg(p.xi));
}

int auto_nterms(const CoherentParams& p) {
  require_disk(p.xi);
  require_k(p.k);
  const double a = std::abs(p.xi);
  if (a == 0.0) return 1;
  constexpr int kMaxTerms = 200000;
  for (int n = 0; n < kMaxTerms; ++n) {
    // Ratio of consecutive magnitudes; below one means the tail is decreasing.
    const double ratio = a * std::sqrt((n + 2.0 * p.k) / (n + 1.0));
    if (ratio < 1.0 && std::abs(series_coefficient(p, n)) < 1e-14 * std::pow(1.0 - a * a, p.k)) return n + 1;
  }
  return kMaxTerms;
}

cplx coherent_series(double r, const CoherentParams& p, const DeformationParams& mu, int nterms) {
  require_disk(p.xi);
  require_k(p.k);
  if (nterms < 1) throw DomainError("coherent_series needs at least one term");
  if (r < 0.0) throw DomainError("radius must be non-negative");
  const auto ell = specfun::laguerre_functions(nterms - 1, 2.0 * p.k - 1.0, r * r);
  const double radial = std::sqrt(2.0) * origin_safe_pow(r, radial_power(p.k, mu));
  cplx sum{};
  for (int n = 0; n < nterms; ++n) sum += series_coefficient(p, n) * ell[static_cast<std::size_t>(n)];
  return radial * sum;
}

cplx coherent_closed(double r, const CoherentParams& p, const DeformationParams& mu) {
  require_disk(p.xi);
  require_k(p.k);
  if (r < 0.0) throw DomainError("radius must be non-negative");
  const cplx xi = p.xi;
  const double k = p.k;
  const double power = radial_power(k, mu);
  const cplx log_prefactor = 0.5 * std::log(2.0) - 0.5 * specfun::log_gamma(2.0 * k) +
                             k * std::log1p(-std::norm(xi)) - 2.0 * k * std::log(1.0 - xi);
  const cplx exponent = 0.5 * r * r * (xi + 1.0) / (xi - 1.0);
  return origin_safe_pow(r, power) * std::exp(log_prefactor + exponent);
}

RadialProfile coherent_profile(const CoherentParams& p, const DeformationParams& mu) {
  require_disk(p.xi);
  require_k(p.k);
  const cplx xi = p.xi;
  const double k = p.k;
  const double power = radial_power(k, mu);
  const cplx prefactor = std::exp(0.5 * std::log(2.0) - 0.5 * specfun::log_gamma(2.0 * k) +
                                  k * std::log1p(-std::norm(xi)) - 2.0 * k * std::log(1.0 - xi));
  const cplx gauss = 0.5 * (xi + 1.0) / (xi - 1.0);
  return RadialProfile([=](double r, int order) {
    const Jet rj = Jet::variable(r, order);
    return prefactor * pow(rj, power) * exp(gauss * (rj * rj));
  });
}

DisplacementNormalForm normal_form(cplx xi) {
  const double a = std::abs(xi);
  if (a == 0.0) return DisplacementNormalForm{cplx{}, 0.0};
  // xi = -(tau/2) e^{-i phi} with tau = 2|xi|, so e^{-i phi} = -xi / |xi|.
  const cplx e_minus_iphi = -xi / a;
  DisplacementNormalForm nf;
  nf.zeta = -std::tanh(a) * e_minus_iphi;
  nf.eta = -2.0 * log_cosh(a);
  return nf;
}

std::pair<cplx, cplx> evolve_parameter(const CoherentParams& p, const EvolutionParams& t) {
  require_disk(p.xi);
  if (!(t.hbar > 0.0)) throw DomainError("hbar must be positive");
  const double w = 2.0 * t.tau / t.hbar;
  return {p.xi * std::polar(1.0, -w), std::polar(1.0, -p.k * w)};
}

cplx coherent_evolved(double r, const CoherentParams& p, const EvolutionParams& t, const DeformationParams& mu) {
  const auto [xi_t, phase] = evolve_parameter(p, t);
  return phase * coherent_closed(r, CoherentParams{xi_t, p.k}, mu);
}

cplx coherent_evolved(double r, cplx xi, const EvolutionParams& t, HalfInteger m, const DeformationParams& mu) {
  return coherent_evolved(r, CoherentParams::from_m(xi, m, mu), t, mu);
}

RadialProfile evolved_profile(const CoherentParams& p, const EvolutionParams& t, const DeformationParams& mu) {
  const auto [xi_t, phase] = evolve_parameter(p, t);
  return scaled(phase, coherent_profile(CoherentParams{xi_t, p.k}, mu));
}

double series_evolution_crosscheck(const CoherentParams& p, const EvolutionParams& t, const DeformationParams& mu,
                                   int nterms, std::span<const double> grid) {
  require_disk(p.xi);
  require_k(p.k);
  if (nterms < 1) throw DomainError("crosscheck needs at least one term");
  std::vector<cplx> evolved_coeff(static_cast<std::size_t>(nterms));
  for (int n = 0; n < nterms; ++n) {
    const double energy = 2.0 * (p.k + n);  // H_r = 2 A0 on |k, n>
    evolved_coeff[n] = series_coefficient(p, n) * std::polar(1.0, -energy * t.tau / t.hbar);
  }
  const double power = radial_power(p.k, mu);
  double worst = 0.0;
  for (double r : grid) {
    const auto ell = specfun::laguerre_functions(nterms - 1, 2.0 * p.k - 1.0, r * r);
    cplx sum{};
    for (int n = 0; n < nterms; ++n) sum += evolved_coeff[n] * ell[static_cast<std::size_t>(n)];
    sum *= std::sqrt(2.0) * origin_safe_pow(r, power);
    worst = std::max(worst, std::abs(sum - coherent_evolved(r, p, t, mu)));
  }
  return worst;
}

double coherent_rmax(const CoherentParams& p, const DeformationParams& mu) {
  require_disk(p.xi);
  require_k(p.k);
  (void)mu;  // the weighted density depends on mu only through k
  // |R|^2 r^{1+2mu} dr = 2 s^{4k-1} e^{-s^2} ds / Gamma(2k) with s = sqrt(rho) r.
  const double rho = (1.0 - std::norm(p.xi)) / std::norm(1.0 - p.xi);
  const double expo = 4.0 * p.k - 1.0;
  const double log_norm = std::log(2.0) - specfun::log_gamma(2.0 * p.k);
  const double s_peak = expo > 0.0 ? std::sqrt(0.5 * expo) : 0.0;
  double s = std::max(s_peak, 1.0);
  while (log_norm + expo * std::log(s) - s * s + std::log(s) > std::log(1e-18)) s += 0.05;
  return 1.05 * s / std::sqrt(rho);
}

}  // namespace dunkl::coherent
