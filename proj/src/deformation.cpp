#include "dunkl/deformation.hpp"

#include <cmath>
#include <string>

#include "dunkl/errors.hpp"

namespace dunkl {

DeformationParams::DeformationParams(double mu1, double mu2) : mu1_(mu1), mu2_(mu2) {
  if (!(mu1 > -0.5) || !(mu2 > -0.5) || !std::isfinite(mu1) || !std::isfinite(mu2)) {
    throw DomainError("deformation couplings must exceed -1/2 (got mu1=" + std::to_string(mu1) +
                      ", mu2=" + std::to_string(mu2) + ")");
  }
}

}  // namespace dunkl
