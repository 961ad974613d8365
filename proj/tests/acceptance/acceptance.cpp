// Acceptance criteria, one PASS/FAIL line each.
// Usage: acceptance <criterion 1-9 | all> <path to dunkl_osc>
#include <fmt/format.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dunkl/basis.hpp"
#include "dunkl/coherent.hpp"
#include "dunkl/dunkl_ops.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/specfun.hpp"
#include "dunkl/su11.hpp"
#include "../support/oracles.hpp"

using namespace dunkl;

namespace {

constexpr double kPi = std::numbers::pi;

std::string g_cli;

HalfInteger hi(int twice) { return HalfInteger::from_twice(twice); }

RadialProfile sturmian(int n, int twice_m, const DeformationParams& mu) {
  return basis::radial_sturmian(basis::RadialQuantum::from_m(n, hi(twice_m), mu), mu);
}

// One measured quantity against its threshold.
struct Measure {
  std::string label;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

Measure at_most(std::string label, double value, double tol) { return {std::move(label), value, tol, value <= tol}; }

Measure exactly(std::string label, double value, double expected) {
  return {std::move(label), value, expected, value == expected};
}

RadialProfile random_profile(std::mt19937_64& rng) {
  const auto c = oracle::random_coefficients(rng, 6);
  return RadialProfile([c](double r, int order) {
    const Jet x = Jet::variable(r, order);
    Jet p(order, c.back());
    for (std::size_t i = c.size() - 1; i-- > 0;) p = p * x + c[i];
    return p * exp(-0.5 * (x * x));
  });
}

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  Run r;
  const std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::vector<double>> csv_rows(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::stringstream ss(text);
  std::string line;
  bool header = false;
  while (std::getline(ss, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      header = true;
      continue;
    }
    std::vector<double> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

std::vector<Measure> criterion_spectrum() {
  std::vector<Measure> m;
  m.push_back(exactly("energy(0,0,(0,0))", basis::energy(0, hi(0), DeformationParams()), 1.0));
  m.push_back(exactly("energy(2,1,(0.25,0.75))", basis::energy(2, hi(2), DeformationParams(0.25, 0.75)), 8.0));
  int count = 0;
  for (const auto& s : basis::enumerate_states(3.0, DeformationParams())) count += s.energy == 3.0;
  m.push_back(exactly("degeneracy(E=3, mu=0)", count, 4.0));
  int brute = 0;
  for (const auto& s : oracle::brute_states(3.0, 0.0, 0.0)) brute += s.energy == 3.0;
  m.push_back(exactly("brute-force degeneracy(E=3, mu=0)", brute, 4.0));
  return m;
}

std::vector<Measure> criterion_angular() {
  std::vector<Measure> m;
  for (auto [m1, m2] : {std::pair{0.0, 0.0}, {0.5, 0.5}, {0.3, 1.2}}) {
    const DeformationParams mu(m1, m2);
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
    m.push_back(at_most(fmt::format("gram({},{}) {} states", m1, m2, labels.size()), worst, 1e-9));
  }
  const auto phi0 = basis::angular_wavefunction(basis::AngularQuantum::make(1, 1, hi(0), DeformationParams()),
                                                DeformationParams());
  double eta = 0.0;
  for (double p : {0.0, 0.4, 1.3, 2.9, 4.4, 6.0}) eta = std::max(eta, std::abs(phi0(p) - 1.0 / std::sqrt(2.0 * kPi)));
  m.push_back(at_most("eta0 = 1/sqrt(2pi)", eta, 1e-10));
  return m;
}

std::vector<Measure> criterion_radial() {
  std::vector<Measure> m;
  for (auto [m1, m2] : {std::pair{0.0, 0.0}, {0.5, 0.5}}) {
    const DeformationParams mu(m1, m2);
    double worst = 0.0;
    for (int tm : {0, 1, 2, 4}) {
      std::vector<RadialProfile> R;
      for (int n = 0; n <= 6; ++n) R.push_back(sturmian(n, tm, mu));
      for (int n = 0; n <= 6; ++n) {
        for (int np = 0; np <= 6; ++np) {
          worst = std::max(worst, std::abs(specfun::radial_inner_product(R[n], R[np], mu) - (n == np ? 1.0 : 0.0)));
        }
      }
    }
    m.push_back(at_most(fmt::format("gram({},{})", m1, m2), worst, 1e-9));
  }
  return m;
}

std::vector<Measure> criterion_eigen() {
  std::vector<Measure> m;
  const auto grid = basis::residual_grid();
  double worst = 0.0;
  for (auto [m1, m2] : {std::pair{0.0, 0.0}, {0.5, 0.5}, {0.25, 0.75}, {0.3, 1.2}}) {
    const DeformationParams mu(m1, m2);
    for (int tm = 0; tm <= 6; ++tm) {
      for (int n = 0; n <= 6; ++n) {
        const auto R = sturmian(n, tm, mu);
        const auto HR = ops::apply_radial_hamiltonian(R, mu, basis::separation_constant(hi(tm), mu));
        const double e = basis::energy(n, hi(tm), mu);
        worst = std::max(worst, max_abs_diff(HR, scaled(e, R), grid) / max_abs(R, grid));
      }
    }
  }
  m.push_back(at_most("radial relative residual", worst, 1e-8));

  struct Case {
    int s1, s2, twice_m, nr;
  };
  const DeformationParams mu(0.5, 0.5);
  const std::vector<std::pair<double, double>> points{{0.7, 0.4}, {-1.1, 0.3}, {0.5, -1.6}, {-0.9, -0.8}, {1.9, 1.2}};
  double plane = 0.0;
  for (const Case c : {Case{1, 1, 0, 0}, Case{1, -1, 1, 1}, Case{-1, 1, 3, 0}, Case{-1, -1, 2, 2}, Case{1, 1, 4, 1}}) {
    const auto aq = basis::AngularQuantum::make(c.s1, c.s2, hi(c.twice_m), mu);
    const auto psi = ops::separable(sturmian(c.nr, c.twice_m, mu), basis::angular_wavefunction(aq, mu),
                                    ops::ParityHint{c.s1, c.s2});
    const auto hpsi = ops::apply_hamiltonian(psi, mu);
    const double e = basis::energy(c.nr, aq.m, mu);
    double diff = 0.0, scale = 0.0;
    for (auto [x, y] : points) {
      diff = std::max(diff, std::abs(hpsi(x, y) - e * psi(x, y)));
      scale = std::max(scale, std::abs(psi(x, y)));
    }
    plane = std::max(plane, diff / scale);
  }
  m.push_back(at_most("2D Dunkl finite-difference residual", plane, 1e-6));
  return m;
}

std::vector<Measure> criterion_algebra() {
  std::vector<Measure> m;
  const auto grid = basis::residual_grid();
  const std::vector<DeformationParams> mus{DeformationParams(), DeformationParams(0.5, 0.5), DeformationParams(0.3, 1.2)};

  double ladder = 0.0;
  for (const auto& mu : mus) {
    for (int tm = 0; tm <= 4; ++tm) {
      const double k = basis::bargmann_k(hi(tm), mu);
      const double l2 = basis::separation_constant(hi(tm), mu);
      for (int n = 0; n <= 4; ++n) {
        const auto R = sturmian(n, tm, mu);
        const auto s = su11::AlgebraState::make(k, n);
        const auto up = scaled(su11::ladder_coefficient(s, su11::Generator::plus), sturmian(n + 1, tm, mu));
        ladder = std::max(ladder, max_abs_diff(su11::apply_A(R, su11::Generator::plus, mu, l2), up, grid));
        const auto down = n > 0 ? scaled(su11::ladder_coefficient(s, su11::Generator::minus), sturmian(n - 1, tm, mu))
                                : RadialProfile::zero();
        ladder = std::max(ladder, max_abs_diff(su11::apply_A(R, su11::Generator::minus, mu, l2), down, grid));
      }
    }
  }
  m.push_back(at_most("ladder", ladder, 1e-7));

  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> l2s(0.0, 12.0);
  double comm = 0.0, half = 0.0;
  for (int i = 0; i < 10; ++i) {
    const auto f = random_profile(rng);
    const auto& mu = mus[i % mus.size()];
    const double l2 = l2s(rng);
    for (auto c : {su11::Commutator::a0_aplus, su11::Commutator::a0_aminus, su11::Commutator::aminus_aplus}) {
      comm = std::max(comm, su11::commutator_residual(c, f, mu, l2, grid));
    }
    const auto half_h = scaled(0.5, ops::apply_radial_hamiltonian(f, mu, l2));
    half = std::max(half, max_abs_diff(su11::apply_A(f, su11::Generator::zero, mu, l2), half_h, grid));
  }
  m.push_back(at_most("commutators", comm, 1e-6));

  double casimir = 0.0;
  for (const auto& mu : mus) {
    for (int tm = 0; tm <= 3; ++tm) {
      const double k = basis::bargmann_k(hi(tm), mu);
      const double l2 = basis::separation_constant(hi(tm), mu);
      for (int n = 0; n <= 3; ++n) casimir = std::max(casimir, su11::casimir_check(sturmian(n, tm, mu), k, mu, l2, grid));
    }
  }
  m.push_back(at_most("Casimir", casimir, 1e-7));
  m.push_back(at_most("A0 = H_r/2", half, 1e-12));

  double fact = 0.0;
  for (const auto& mu : mus) {
    for (int tm = 0; tm <= 3; ++tm) {
      for (int n = 0; n <= 3; ++n) {
        const double e = basis::energy(n, hi(tm), mu);
        const double l2 = basis::separation_constant(hi(tm), mu);
        const auto U = basis::substitute_u(sturmian(n, tm, mu), mu, basis::Substitution::r_to_u);
        for (auto b : {su11::Branch::upper, su11::Branch::lower}) {
          fact = std::max(fact, su11::factorization_residual(U, e, l2, mu, b, grid));
        }
      }
    }
  }
  m.push_back(at_most("factorization", fact, 1e-8));
  return m;
}

std::vector<Measure> criterion_coherent() {
  using namespace coherent;
  std::vector<Measure> m;
  const auto grid = basis::chebyshev_grid(0.0, 8.0, 60);
  const std::vector<DeformationParams> mus{DeformationParams(), DeformationParams(0.5, 0.5), DeformationParams(0.3, 0.7)};
  const std::vector<cplx> xis{cplx(0.8), std::polar(0.8, 2.0), std::polar(0.5, -1.0), cplx(-0.8), std::polar(0.3, 0.5)};
  double series = 0.0, norm = 0.0;
  for (const auto& mu : mus) {
    for (int tm : {0, 1, 2, 4}) {
      for (cplx xi : xis) {
        const auto p = CoherentParams::from_m(xi, hi(tm), mu);
        for (double r : grid) series = std::max(series, std::abs(coherent_series(r, p, mu, 400) - coherent_closed(r, p, mu)));
        const auto f = coherent_profile(p, mu);
        norm = std::max(norm, std::abs(specfun::radial_inner_product(f, f, mu, coherent_rmax(p, mu)).real() - 1.0));
      }
    }
  }
  m.push_back(at_most("series vs closed", series, 1e-10));
  m.push_back(at_most("unit norm", norm, 1e-9));

  // Laguerre generating function with the oracle's explicit sums.
  double gen = 0.0;
  for (auto [x, y, nu] : {std::tuple{1.7, 0.4, 2.3}, {0.3, -0.5, 0.0}, {4.0, 0.25, 5.5}, {2.2, 0.6, 1.0}}) {
    double sum = 0.0;
    for (int n = 0; n <= 120; ++n) sum += oracle::laguerre(n, nu, x) * std::pow(y, n);
    gen = std::max(gen, std::abs(sum - std::pow(1.0 - y, -nu - 1.0) * std::exp(-x * y / (1.0 - y))));
  }
  m.push_back(at_most("generating function", gen, 1e-10));

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double nf = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto f = normal_form(cplx(u(rng), u(rng)));
    nf = std::max(nf, std::abs(f.eta - std::log(1.0 - std::norm(f.zeta))));
  }
  m.push_back(at_most("normal form", nf, 1e-14));
  return m;
}

std::vector<Measure> criterion_evolution() {
  using namespace coherent;
  std::vector<Measure> m;
  const auto grid = basis::chebyshev_grid(0.0, 8.0, 60);
  const DeformationParams mu(0.5, 0.5);
  const auto p = CoherentParams::from_m(std::polar(0.5, 0.3), hi(1), mu);

  // Independent route: Sturmian sum with per-term phases e^{-2i(k+n)tau}.
  double term = 0.0;
  std::vector<RadialProfile> R;
  for (int n = 0; n < 300; ++n) R.push_back(basis::radial_sturmian(basis::RadialQuantum::from_m(n, hi(1), mu), mu));
  for (double tau : {0.7, 2.4}) {
    term = std::max(term, series_evolution_crosscheck(p, EvolutionParams::make(tau), mu, 300, grid));
    for (double r : basis::chebyshev_grid(0.0, 6.0, 20)) {
      cplx sum{};
      for (int n = 0; n < 300; ++n) sum += series_coefficient(p, n) * std::polar(1.0, -2.0 * (p.k + n) * tau) * R[n](r);
      term = std::max(term, std::abs(sum - coherent_evolved(r, p, EvolutionParams::make(tau), mu)));
    }
  }
  m.push_back(at_most("term-by-term evolution", term, 1e-9));

  double norm = 0.0;
  for (double tau : {0.3, 1.1, 2.9}) {
    const auto t = EvolutionParams::make(tau);
    const CoherentParams pt{evolve_parameter(p, t).first, p.k};
    const auto f = evolved_profile(p, t, mu);
    norm = std::max(norm, std::abs(specfun::radial_inner_product(f, f, mu, coherent_rmax(pt, mu)).real() - 1.0));
  }
  m.push_back(at_most("norm conservation", norm, 1e-9));

  double period = 0.0;
  for (double hbar : {1.0, 0.6}) {
    for (double tau : {0.0, 0.45, 2.2}) {
      for (double r : grid) {
        const double a = std::norm(coherent_evolved(r, p, EvolutionParams::make(tau, hbar), mu));
        const double b = std::norm(coherent_evolved(r, p, EvolutionParams::make(tau + kPi * hbar, hbar), mu));
        period = std::max(period, std::abs(a - b));
      }
    }
  }
  m.push_back(at_most("period pi hbar", period, 1e-12));

  const double t1 = 0.37, t2 = 1.21;
  const auto [xi1, ph1] = evolve_parameter(p, EvolutionParams::make(t1));
  const CoherentParams p1{xi1, p.k};
  double add = 0.0;
  for (double r : grid) {
    const cplx twice = ph1 * coherent_evolved(r, p1, EvolutionParams::make(t2), mu);
    add = std::max(add, std::abs(twice - coherent_evolved(r, p, EvolutionParams::make(t1 + t2), mu)));
  }
  m.push_back(at_most("tau additivity", add, 1e-12));
  return m;
}

std::vector<Measure> criterion_mu0() {
  const DeformationParams mu;
  const auto grid = basis::chebyshev_grid(0.0, 6.0, 50);
  double worst = 0.0;
  for (int n = 0; n <= 4; ++n) {
    for (int tm = 0; tm <= 4; ++tm) {
      const auto R = sturmian(n, tm, mu);
      for (double r : grid) worst = std::max(worst, std::abs(R(r).real() - oracle::oscillator_radial(n, tm, r)));
    }
  }
  return {at_most("oscillator radial functions", worst, 1e-12)};
}

std::vector<Measure> criterion_cli() {
  std::vector<Measure> m;
  const Run verify = run_cli("verify --suite all");
  m.push_back(exactly("verify --suite all exit", verify.status, 0));

  const Run s1 = run_cli("spectrum --mu1 0.25 --mu2 0.75 --emax 9");
  const Run s2 = run_cli("spectrum --mu1 0.25 --mu2 0.75 --emax 9");
  m.push_back(exactly("spectrum deterministic", s1.status == 0 && s1.out == s2.out && !s1.out.empty(), 1.0));
  const DeformationParams mu(0.25, 0.75);
  double spec = 0.0;
  const auto rows = csv_rows(s1.out);
  for (const auto& row : rows) {
    const HalfInteger mm = HalfInteger::from_double(row[2]);
    spec = std::max(spec, std::abs(row[6] - basis::energy(static_cast<int>(row[3]), mm, mu)));
    spec = std::max(spec, std::abs(row[4] - basis::bargmann_k(mm, mu)));
    spec = std::max(spec, std::abs(row[5] - basis::separation_constant(mm, mu)));
  }
  m.push_back(exactly("spectrum rows", rows.size(), basis::enumerate_states(9.0, mu).size()));
  m.push_back(at_most("spectrum vs library", spec, 1e-12));

  const std::string args = "coherent --mu1 0.25 --mu2 0.75 --xi 0.5,-0.2 --m 1/2 --tau 0.7 --grid 0.01:8:200";
  const Run c1 = run_cli(args);
  const Run c2 = run_cli(args);
  m.push_back(exactly("coherent deterministic", c1.status == 0 && c1.out == c2.out && !c1.out.empty(), 1.0));
  const auto p = coherent::CoherentParams::from_m(cplx(0.5, -0.2), hi(1), mu);
  double coh = 0.0;
  const auto crow = csv_rows(c1.out);
  for (const auto& row : crow) {
    coh = std::max(coh, std::abs(cplx(row[1], row[2]) - coherent::coherent_evolved(row[0], p, coherent::EvolutionParams::make(0.7), mu)));
  }
  m.push_back(exactly("coherent rows", crow.size(), 200.0));
  m.push_back(at_most("coherent vs library", coh, 1e-12));
  return m;
}

struct Criterion {
  int id;
  std::string title;
  std::function<std::vector<Measure>()> run;
};

bool report(const Criterion& c) {
  std::vector<Measure> ms;
  std::string error;
  try {
    ms = c.run();
  } catch (const std::exception& e) {
    error = e.what();
  }
  bool pass = error.empty();
  std::string detail;
  for (const auto& x : ms) {
    pass = pass && x.pass;
    detail += fmt::format("{}{}={:.3g} ({} {:.3g})", detail.empty() ? "" : "; ", x.label, x.value,
                          x.pass ? "ok" : "FAILS", x.tolerance);
  }
  if (!error.empty()) detail = "exception: " + error;
  std::cout << fmt::format("{} criterion {} {}: {}", pass ? "PASS" : "FAIL", c.id, c.title, detail) << std::endl;
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <1-9|all> <dunkl_osc path>\n";
    return 2;
  }
  g_cli = argv[2];
  const std::vector<Criterion> all{
      {1, "spectrum values", criterion_spectrum},
      {2, "angular orthonormality", criterion_angular},
      {3, "radial orthonormality", criterion_radial},
      {4, "eigenresiduals", criterion_eigen},
      {5, "algebra", criterion_algebra},
      {6, "coherent states", criterion_coherent},
      {7, "time evolution", criterion_evolution},
      {8, "mu=0 reduction", criterion_mu0},
      {9, "CLI contract", criterion_cli},
  };
  const std::string which = argv[1];
  bool ok = true;
  bool ran = false;
  for (const auto& c : all) {
    if (which == "all" || which == std::to_string(c.id)) {
      ok = report(c) && ok;
      ran = true;
    }
  }
  if (!ran) {
    std::cerr << "unknown criterion " << which << '\n';
    return 2;
  }
  return ok ? 0 : 1;
}
