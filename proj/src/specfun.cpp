#include "dunkl/specfun.hpp"

#include <cmath>
#include <string>

namespace dunkl::specfun {

namespace {

void require_degree(int n) {
  if (n < 0) throw DomainError("polynomial degree must be non-negative");
}

void require_weight_exponent(double a, const char* name) {
  if (!(a > -1.0)) {
    throw DomainError(std::string(name) + " must exceed -1 for an integrable weight");
  }
}

}  // namespace

double laguerre(int n, double alpha, double x) {
  require_degree(n);
  require_weight_exponent(alpha, "laguerre alpha");
  return detail::laguerre_recurrence(n, alpha, x);
}

double laguerre_derivative(int n, double alpha, double x) {
  require_degree(n);
  require_weight_exponent(alpha, "laguerre alpha");
  if (n == 0) return 0.0;
  return -detail::laguerre_recurrence(n - 1, alpha + 1.0, x);
}

double jacobi(int n, double alpha, double beta, double x) {
  require_degree(n);
  require_weight_exponent(alpha, "jacobi alpha");
  require_weight_exponent(beta, "jacobi beta");
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError("jacobi argument outside [-1, 1]");
  return detail::jacobi_recurrence(n, alpha, beta, x);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
  return std::lgamma(x);
}

std::vector<double> laguerre_functions(int nmax, double alpha, double x) {
  require_degree(nmax);
  require_weight_exponent(alpha, "laguerre alpha");
  std::vector<double> l(static_cast<std::size_t>(nmax) + 1);
  l[0] = std::exp(-0.5 * x - 0.5 * std::lgamma(alpha + 1.0));
  if (nmax == 0) return l;
  l[1] = (alpha + 1.0 - x) * l[0] / std::sqrt(alpha + 1.0);
  for (int n = 1; n < nmax; ++n) {
    const double lhs = std::sqrt((n + 1.0) * (n + alpha + 1.0));
    l[n + 1] = ((2.0 * n + alpha + 1.0 - x) * l[n] - std::sqrt(n * (n + alpha)) * l[n - 1]) / lhs;
  }
  return l;
}

}  // namespace dunkl::specfun
