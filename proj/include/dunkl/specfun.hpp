#pragma once

#include <vector>

#include "dunkl/errors.hpp"

// Orthogonal polynomials and log-gamma.
//
// Polynomials are evaluated by forward three-term recurrence in the degree.
// The recurrence kernels are templates so the same code runs on doubles and
// on Taylor jets (exact derivatives of composed basis functions).

namespace dunkl::specfun {

namespace detail {

template <class T>
T laguerre_recurrence(int n, double alpha, const T& x) {
  T prev = x * 0.0 + 1.0;
  if (n == 0) return prev;
  T cur = (alpha + 1.0) - x;
  for (int j = 1; j < n; ++j) {
    T next = ((2.0 * j + 1.0 + alpha - x) * cur - (j + alpha) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

template <class T>
T jacobi_recurrence(int n, double alpha, double beta, const T& x) {
  T prev = x * 0.0 + 1.0;
  if (n == 0) return prev;
  T cur = (alpha + 1.0) + 0.5 * (alpha + beta + 2.0) * (x - 1.0);
  const double ab = alpha + beta;
  for (int j = 2; j <= n; ++j) {
    const double a = 2.0 * j + ab;
    const double c0 = 2.0 * j * (j + ab) * (a - 2.0);
    const double c1 = (a - 1.0) * a * (a - 2.0);
    const double c2 = (a - 1.0) * (alpha * alpha - beta * beta);
    const double c3 = 2.0 * (j + alpha - 1.0) * (j + beta - 1.0) * a;
    T next = ((c1 * x + c2) * cur - c3 * prev) / c0;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace detail

/// Generalized Laguerre polynomial L_n^alpha(x). alpha <= -1 is a DomainError.
double laguerre(int n, double alpha, double x);

/// d/dx L_n^alpha(x) = -L_{n-1}^{alpha+1}(x); zero for n = 0.
double laguerre_derivative(int n, double alpha, double x);

/// Jacobi polynomial P_n^{(alpha,beta)}(x) on [-1, 1].
double jacobi(int n, double alpha, double beta, double x);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Normalized Laguerre functions
///   l_n(x) = sqrt(n! / Gamma(n + alpha + 1)) e^{-x/2} L_n^alpha(x),  n = 0..nmax,
/// by their own recurrence, which stays bounded where L_n itself overflows.
std::vector<double> laguerre_functions(int nmax, double alpha, double x);

}  // namespace dunkl::specfun
