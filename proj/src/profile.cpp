#include "dunkl/profile.hpp"

#include <algorithm>
#include <cmath>

namespace dunkl {

cplx fd_first(const std::function<cplx(double)>& f, double x) {
  const double h = 1e-5 * std::max(1.0, std::abs(x));
  return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) / (12.0 * h);
}

cplx fd_second(const std::function<cplx(double)>& f, double x) {
  const double h = 1e-3 * std::max(1.0, std::abs(x));
  return (-f(x - 2 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) - f(x + 2 * h)) /
         (12.0 * h * h);
}

}  // namespace dunkl
