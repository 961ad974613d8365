#include "dunkl/cli/verify.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "dunkl/basis.hpp"
#include "dunkl/coherent.hpp"
#include "dunkl/dunkl_ops.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/specfun.hpp"
#include "dunkl/su11.hpp"

namespace dunkl::cli {
namespace {

constexpr double kPi = std::numbers::pi;

HalfInteger hi(int twice) { return HalfInteger::from_twice(twice); }

RadialProfile sturmian(int n, int twice_m, const DeformationParams& mu) {
  return basis::radial_sturmian(basis::RadialQuantum::from_m(n, hi(twice_m), mu), mu);
}

// Degree-6 polynomial times e^{-r^2/2}, exact jets.
RadialProfile random_profile(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> c(7);
  for (auto& x : c) x = u(rng);
  return RadialProfile([c](double r, int order) {
    const Jet x = Jet::variable(r, order);
    Jet p(order, c.back());
    for (std::size_t i = c.size() - 1; i-- > 0;) p = p * x + c[i];
    return p * exp(-0.5 * (x * x));
  });
}

std::vector<double> angular_points() {
  std::vector<double> out;
  for (int j = 0; j < 40; ++j) out.push_back((j + 0.5) * kPi / 20.0);
  return out;
}

void angular_checks(std::vector<Check>& out, const DeformationParams& mu) {
  out.push_back({"angular.gram", 1e-9, [mu] {
                   const auto labels = basis::enumerate_angular(hi(8), mu);
                   const auto rule = specfun::angular_rule(mu);
                   std::vector<std::vector<cplx>> s;
                   for (const auto& q : labels) s.push_back(specfun::sample(basis::angular_wavefunction(q, mu), rule));
                   double worst = 0.0;
                   for (std::size_t i = 0; i < s.size(); ++i) {
                     for (std::size_t j = 0; j < s.size(); ++j) {
                       worst = std::max(worst, std::abs(specfun::integrate(rule, s[i], s[j]) - (i == j ? 1.0 : 0.0)));
                     }
                   }
                   return worst;
                 }});
  // Constant ground state: 1/sqrt(2 pi) without deformation, 1/sqrt(total weight) otherwise.
  out.push_back({"angular.eta0", 1e-10, [mu] {
                   const auto phi0 = basis::angular_wavefunction(basis::AngularQuantum::make(1, 1, hi(0), mu), mu);
                   double expected = 1.0 / std::sqrt(2.0 * kPi);
                   if (mu.mu1() != 0.0 || mu.mu2() != 0.0) {
                     double total = 0.0;
                     for (double w : specfun::angular_rule(mu).weights) total += w;
                     expected = 1.0 / std::sqrt(total);
                   }
                   double worst = 0.0;
                   for (double p : angular_points()) worst = std::max(worst, std::abs(phi0(p) - expected));
                   return worst;
                 }});
  out.push_back({"angular.eigenresidual", 1e-8, [mu] {
                   const auto grid = angular_points();
                   double worst = 0.0;
                   for (const auto& q : basis::enumerate_angular(hi(6), mu)) {
                     const auto phi = basis::angular_wavefunction(q, mu);
                     const auto lhs = ops::apply_angular_operator(phi, mu);
                     worst = std::max(worst, max_abs_diff(lhs, scaled(0.5 * q.l2, phi), grid) / max_abs(phi, grid));
                   }
                   return worst;
                 }});
}

void radial_checks(std::vector<Check>& out, const DeformationParams& mu) {
  out.push_back({"radial.gram", 1e-9, [mu] {
                   double worst = 0.0;
                   for (int tm : {0, 1, 2, 4}) {
                     std::vector<RadialProfile> R;
                     for (int n = 0; n <= 6; ++n) R.push_back(sturmian(n, tm, mu));
                     for (int n = 0; n <= 6; ++n) {
                       for (int np = 0; np <= 6; ++np) {
                         const cplx g = specfun::radial_inner_product(R[n], R[np], mu);
                         worst = std::max(worst, std::abs(g - (n == np ? 1.0 : 0.0)));
                       }
                     }
                   }
                   return worst;
                 }});
  out.push_back({"radial.eigenresidual", 1e-8, [mu] {
                   const auto grid = basis::residual_grid();
                   double worst = 0.0;
                   for (int tm = 0; tm <= 6; ++tm) {
                     const double l2 = basis::separation_constant(hi(tm), mu);
                     for (int n = 0; n <= 6; ++n) {
                       const auto R = sturmian(n, tm, mu);
                       const auto HR = ops::apply_radial_hamiltonian(R, mu, l2);
                       const double e = basis::energy(n, hi(tm), mu);
                       worst = std::max(worst, max_abs_diff(HR, scaled(e, R), grid) / max_abs(R, grid));
                     }
                   }
                   return worst;
                 }});
  // Value-only separable states: every derivative comes from finite differences.
  out.push_back({"radial.plane_fd", 1e-6, [mu] {
                   struct Case {
                     int s1, s2, twice_m, nr;
                   };
                   const std::vector<std::pair<double, double>> points{
                       {0.7, 0.4}, {-1.1, 0.3}, {0.5, -1.6}, {-0.9, -0.8}, {1.9, 1.2}};
                   double worst = 0.0;
                   for (const Case c : {Case{1, 1, 0, 0}, Case{1, -1, 1, 1}, Case{-1, 1, 3, 0}, Case{-1, -1, 2, 2},
                                        Case{1, 1, 4, 1}}) {
                     const auto aq = basis::AngularQuantum::make(c.s1, c.s2, hi(c.twice_m), mu);
                     const auto R = sturmian(c.nr, c.twice_m, mu);
                     const auto psi = ops::separable(R, basis::angular_wavefunction(aq, mu), ops::ParityHint{c.s1, c.s2});
                     const auto hpsi = ops::apply_hamiltonian(psi, mu);
                     const double e = basis::energy(c.nr, aq.m, mu);
                     double diff = 0.0, scale = 0.0;
                     for (auto [x, y] : points) {
                       diff = std::max(diff, std::abs(hpsi(x, y) - e * psi(x, y)));
                       scale = std::max(scale, std::abs(psi(x, y)));
                     }
                     worst = std::max(worst, diff / scale);
                   }
                   return worst;
                 }});
  // Always at mu = 0: sqrt(2 n!/(n+l)!) r^l e^{-r^2/2} L_n^l(r^2) with l = 2m.
  out.push_back({"radial.mu0_reduction", 1e-12, [] {
                   const DeformationParams mu0;
                   const auto grid = basis::chebyshev_grid(0.0, 6.0, 50);
                   double worst = 0.0;
                   for (int n = 0; n <= 4; ++n) {
                     for (int l = 0; l <= 4; ++l) {
                       const auto R = sturmian(n, l, mu0);
                       const double c = std::sqrt(2.0 * std::exp(std::lgamma(n + 1.0) - std::lgamma(n + l + 1.0)));
                       for (double r : grid) {
                         const double ref = c * std::pow(r, l) * std::exp(-0.5 * r * r) * specfun::laguerre(n, l, r * r);
                         worst = std::max(worst, std::abs(R(r).real() - ref));
                       }
                     }
                   }
                   return worst;
                 }});
}

void algebra_checks(std::vector<Check>& out, const DeformationParams& mu, std::uint64_t seed) {
  out.push_back({"algebra.ladder", 1e-7, [mu] {
                   const auto grid = basis::residual_grid();
                   double worst = 0.0;
                   for (int tm = 0; tm <= 4; ++tm) {
                     const double k = basis::bargmann_k(hi(tm), mu);
                     const double l2 = basis::separation_constant(hi(tm), mu);
                     for (int n = 0; n <= 4; ++n) {
                       const auto R = sturmian(n, tm, mu);
                       const double amp = max_abs(R, grid);
                       const auto s = su11::AlgebraState::make(k, n);
                       const double cp = su11::ladder_coefficient(s, su11::Generator::plus);
                       const auto up = scaled(cp, sturmian(n + 1, tm, mu));
                       worst = std::max(worst, max_abs_diff(su11::apply_A(R, su11::Generator::plus, mu, l2), up, grid) / amp);
                       const double cm = su11::ladder_coefficient(s, su11::Generator::minus);
                       const auto down = n > 0 ? scaled(cm, sturmian(n - 1, tm, mu)) : RadialProfile::zero();
                       worst = std::max(worst, max_abs_diff(su11::apply_A(R, su11::Generator::minus, mu, l2), down, grid) / amp);
                     }
                   }
                   return worst;
                 }});
  out.push_back({"algebra.commutators", 1e-6, [mu, seed] {
                   std::mt19937_64 rng(seed);
                   std::uniform_real_distribution<double> l2s(0.0, 12.0);
                   const auto grid = basis::residual_grid();
                   double worst = 0.0;
                   for (int i = 0; i < 10; ++i) {
                     const auto f = random_profile(rng);
                     const double l2 = l2s(rng);
                     for (auto c : {su11::Commutator::a0_aplus, su11::Commutator::a0_aminus, su11::Commutator::aminus_aplus}) {
                       worst = std::max(worst, su11::commutator_residual(c, f, mu, l2, grid));
                     }
                   }
                   return worst;
                 }});
  out.push_back({"algebra.casimir", 1e-7, [mu, seed] {
                   const auto grid = basis::residual_grid();
                   double worst = 0.0;
                   for (int tm = 0; tm <= 3; ++tm) {
                     const double k = basis::bargmann_k(hi(tm), mu);
                     const double l2 = basis::separation_constant(hi(tm), mu);
                     for (int n = 0; n <= 3; ++n) worst = std::max(worst, su11::casimir_check(sturmian(n, tm, mu), k, mu, l2, grid));
                   }
                   std::mt19937_64 rng(seed + 1);
                   const double l2 = basis::separation_constant(hi(2), mu);
                   worst = std::max(worst, su11::casimir_check(random_profile(rng), basis::bargmann_k(hi(2), mu), mu, l2, grid));
                   return worst;
                 }});
  out.push_back({"algebra.a0_half_hr", 1e-12, [mu, seed] {
                   std::mt19937_64 rng(seed + 2);
                   std::uniform_real_distribution<double> l2s(0.0, 12.0);
                   const auto grid = basis::residual_grid();
                   double worst = 0.0;
                   for (int i = 0; i < 10; ++i) {
                     const auto f = random_profile(rng);
                     const double l2 = l2s(rng);
                     const auto half_h = scaled(0.5, ops::apply_radial_hamiltonian(f, mu, l2));
                     worst = std::max(worst, max_abs_diff(su11::apply_A(f, su11::Generator::zero, mu, l2), half_h, grid));
                   }
                   return worst;
                 }});
  out.push_back({"algebra.factorization", 1e-8, [mu] {
                   const auto grid = basis::residual_grid();
                   double worst = 0.0;
                   for (int tm = 0; tm <= 3; ++tm) {
                     for (int n = 0; n <= 3; ++n) {
                       const double e = basis::energy(n, hi(tm), mu);
                       const double l2 = basis::separation_constant(hi(tm), mu);
                       const auto U = basis::substitute_u(sturmian(n, tm, mu), mu, basis::Substitution::r_to_u);
                       for (auto b : {su11::Branch::upper, su11::Branch::lower}) {
                         const auto fc = su11::schrodinger_factorize(e, l2, mu, b);
                         const double scale = std::max(1.0, std::abs(fc.g)) * max_abs(U, grid);
                         worst = std::max(worst, su11::factorization_residual(U, e, l2, mu, b, grid) / scale);
                       }
                     }
                   }
                   return worst;
                 }});
}

std::vector<coherent::CoherentParams> coherent_cases(const DeformationParams& mu) {
  std::vector<coherent::CoherentParams> out;
  for (int tm : {0, 1, 2}) {
    for (cplx xi : {cplx(0.8), std::polar(0.8, 2.0), std::polar(0.5, -1.0), cplx(-0.8), std::polar(0.6, kPi / 3.0)}) {
      out.push_back(coherent::CoherentParams::from_m(xi, hi(tm), mu));
    }
  }
  return out;
}

void coherent_checks(std::vector<Check>& out, const DeformationParams& mu, std::uint64_t seed) {
  using namespace coherent;
  const auto grid = basis::chebyshev_grid(0.0, 8.0, 60);
  out.push_back({"coherent.series_closed", 1e-10, [mu, grid] {
                   double worst = 0.0;
                   for (const auto& p : coherent_cases(mu)) {
                     const int nterms = std::max(300, auto_nterms(p));
                     for (double r : grid) {
                       worst = std::max(worst, std::abs(coherent_series(r, p, mu, nterms) - coherent_closed(r, p, mu)));
                     }
                   }
                   return worst;
                 }});
  out.push_back({"coherent.norm", 1e-9, [mu] {
                   double worst = 0.0;
                   for (const auto& p : coherent_cases(mu)) {
                     const auto f = coherent_profile(p, mu);
                     const double n = specfun::radial_inner_product(f, f, mu, coherent_rmax(p, mu)).real();
                     worst = std::max(worst, std::abs(n - 1.0));
                   }
                   return worst;
                 }});
  out.push_back({"coherent.generating_function", 1e-10, [] {
                   double worst = 0.0;
                   for (auto [x, y, nu] : {std::tuple{1.7, 0.4, 2.3}, {0.3, -0.5, 0.0}, {4.0, 0.25, 5.5}, {2.2, 0.6, 1.0}}) {
                     double sum = 0.0;
                     for (int n = 0; n <= 200; ++n) sum += specfun::laguerre(n, nu, x) * std::pow(y, n);
                     const double closed = std::pow(1.0 - y, -nu - 1.0) * std::exp(-x * y / (1.0 - y));
                     worst = std::max(worst, std::abs(sum - closed) / std::abs(closed));
                   }
                   return worst;
                 }});
  out.push_back({"coherent.normal_form", 1e-14, [seed] {
                   std::mt19937_64 rng(seed + 3);
                   std::uniform_real_distribution<double> u(-2.0, 2.0);
                   double worst = 0.0;
                   for (int i = 0; i < 20; ++i) {
                     const auto f = normal_form(cplx(u(rng), u(rng)));
                     worst = std::max(worst, std::abs(f.eta - std::log(1.0 - std::norm(f.zeta))));
                   }
                   return worst;
                 }});
  out.push_back({"coherent.evolution_series", 1e-9, [mu, grid] {
                   const auto p = CoherentParams::from_m(std::polar(0.5, 0.3), hi(1), mu);
                   double worst = 0.0;
                   for (double tau : {0.7, 2.4}) {
                     worst = std::max(worst, series_evolution_crosscheck(p, EvolutionParams::make(tau), mu, 300, grid));
                   }
                   return worst;
                 }});
  out.push_back({"coherent.evolution_norm", 1e-9, [mu] {
                   const auto p = CoherentParams::from_m(cplx(0.5), hi(2), mu);
                   double worst = 0.0;
                   for (double tau : {0.3, 1.1, 2.9}) {
                     const auto t = EvolutionParams::make(tau);
                     const CoherentParams pt{evolve_parameter(p, t).first, p.k};
                     const auto f = evolved_profile(p, t, mu);
                     worst = std::max(worst, std::abs(specfun::radial_inner_product(f, f, mu, coherent_rmax(pt, mu)).real() - 1.0));
                   }
                   return worst;
                 }});
  out.push_back({"coherent.period", 1e-12, [mu, grid] {
                   const auto p = CoherentParams::from_m(std::polar(0.6, 0.9), hi(1), mu);
                   double worst = 0.0;
                   for (double tau : {0.0, 0.45, 2.2}) {
                     for (double r : grid) {
                       const double a = std::norm(coherent_evolved(r, p, EvolutionParams::make(tau), mu));
                       const double b = std::norm(coherent_evolved(r, p, EvolutionParams::make(tau + kPi), mu));
                       worst = std::max(worst, std::abs(a - b));
                     }
                   }
                   return worst;
                 }});
  out.push_back({"coherent.tau_additivity", 1e-12, [mu, grid] {
                   const auto p = CoherentParams::from_m(std::polar(0.55, -0.7), hi(2), mu);
                   const double t1 = 0.37, t2 = 1.21;
                   const auto [xi1, ph1] = evolve_parameter(p, EvolutionParams::make(t1));
                   const CoherentParams p1{xi1, p.k};
                   double worst = 0.0;
                   for (double r : grid) {
                     const cplx twice = ph1 * coherent_evolved(r, p1, EvolutionParams::make(t2), mu);
                     const cplx once = coherent_evolved(r, p, EvolutionParams::make(t1 + t2), mu);
                     worst = std::max(worst, std::abs(twice - once));
                   }
                   return worst;
                 }});
}

}  // namespace

Suite parse_suite(std::string_view text) {
  if (text == "angular") return Suite::angular;
  if (text == "radial") return Suite::radial;
  if (text == "algebra") return Suite::algebra;
  if (text == "coherent") return Suite::coherent;
  if (text == "all") return Suite::all;
  throw UsageError(fmt::format("unknown suite '{}'", text));
}

std::vector<Check> build_checks(Suite suite, const RunConfig& config) {
  config.validate();
  const DeformationParams mu = config.deformation();
  std::vector<Check> out;
  if (suite == Suite::angular || suite == Suite::all) angular_checks(out, mu);
  if (suite == Suite::radial || suite == Suite::all) radial_checks(out, mu);
  if (suite == Suite::algebra || suite == Suite::all) algebra_checks(out, mu, config.seed);
  if (suite == Suite::coherent || suite == Suite::all) coherent_checks(out, mu, config.seed);
  return out;
}

std::vector<CheckResult> run_checks(std::vector<Check> checks, const std::vector<ToleranceOverride>& overrides,
                                    int threads) {
  for (auto& c : checks) {
    // Later overrides win.
    for (const auto& o : overrides) {
      if (o.matches(c.name)) c.tolerance = o.value;
    }
  }
  std::vector<CheckResult> results(checks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      double r = std::numeric_limits<double>::quiet_NaN();
      try {
        r = checks[i].residual();
      } catch (const std::exception&) {
        // A throwing check is reported as a failure with a NaN residual.
      }
      results[i] = {checks[i].name, r, checks[i].tolerance, r <= checks[i].tolerance};
    }
  };
  const int n = std::clamp(threads, 1, static_cast<int>(std::max<std::size_t>(checks.size(), 1)));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return results;
}

int thread_cap() {
  const int hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DUNKL_OSC_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return std::min(v, hw);
  }
  return hw;
}

void write_report(const std::vector<CheckResult>& results, std::ostream& out) {
  out << '[';
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    const std::string residual = std::isfinite(r.residual) ? num(r.residual) : "null";
    out << (i ? ",\n " : "")
        << fmt::format("{{\"name\": \"{}\", \"residual\": {}, \"tolerance\": {}, \"pass\": {}}}", r.name, residual,
                       num(r.tolerance), r.pass ? "true" : "false");
  }
  out << "]\n";
}

}  // namespace dunkl::cli
