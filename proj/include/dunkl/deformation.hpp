#pragma once

namespace dunkl {

/// Reflection couplings of the Dunkl deformation: mu1 on the x-axis
/// reflection, mu2 on the y-axis reflection. Both must exceed -1/2 so the
/// deformed measures are normalizable.
class DeformationParams {
 public:
  DeformationParams() = default;
  DeformationParams(double mu1, double mu2);

  double mu1() const { return mu1_; }
  double mu2() const { return mu2_; }
  double sum() const { return mu1_ + mu2_; }

  bool operator==(const DeformationParams&) const = default;

 private:
  double mu1_ = 0.0;
  double mu2_ = 0.0;
};

}  // namespace dunkl
