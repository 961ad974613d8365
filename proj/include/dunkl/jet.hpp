#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <utility>

namespace dunkl {

using cplx = std::complex<double>;

/// Truncated Taylor expansion f(x0 + t) = sum_j c_j t^j, j <= order.
///
/// Jets carry exact derivatives through arithmetic, so differential
/// operators can be composed without finite differences. Binary operations
/// truncate to the lower of the two orders.
class Jet {
 public:
  static constexpr int kMaxOrder = 11;

  Jet() = default;
  explicit Jet(int order, cplx constant = {});

  /// The independent variable x0 + t.
  static Jet variable(double x0, int order);

  int order() const { return order_; }
  cplx operator[](int j) const { return c_[static_cast<std::size_t>(j)]; }
  cplx& operator[](int j) { return c_[static_cast<std::size_t>(j)]; }
  cplx value() const { return c_[0]; }

  /// k-th derivative at x0, i.e. k! c_k.
  cplx derivative(int k) const;

  /// Jet of f' (order drops by one; an order-0 jet maps to the zero jet).
  Jet differentiate() const;
  Jet truncated(int order) const;
  /// Jet of t -> f(x0 - t), the expansion of the mirrored function.
  Jet mirrored() const;

  Jet operator-() const;
  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator/=(const Jet& o);
  Jet& operator+=(cplx s);
  Jet& operator-=(cplx s);
  Jet& operator*=(cplx s);
  Jet& operator/=(cplx s);

 private:
  int order_ = 0;
  std::array<cplx, kMaxOrder + 1> c_{};
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, const Jet& b);
Jet operator+(Jet a, cplx s);
Jet operator+(cplx s, Jet a);
Jet operator-(Jet a, cplx s);
Jet operator-(cplx s, const Jet& a);
Jet operator*(Jet a, cplx s);
Jet operator*(cplx s, Jet a);
Jet operator/(Jet a, cplx s);
Jet operator/(cplx s, const Jet& a);

// Real scalars resolve here instead of through an implicit cplx conversion.
inline Jet operator+(Jet a, double s) { return std::move(a) + cplx(s); }
inline Jet operator+(double s, Jet a) { return std::move(a) + cplx(s); }
inline Jet operator-(Jet a, double s) { return std::move(a) - cplx(s); }
inline Jet operator-(double s, const Jet& a) { return cplx(s) - a; }
inline Jet operator*(Jet a, double s) { return std::move(a) * cplx(s); }
inline Jet operator*(double s, Jet a) { return std::move(a) * cplx(s); }
inline Jet operator/(Jet a, double s) { return std::move(a) / cplx(s); }
inline Jet operator/(double s, const Jet& a) { return cplx(s) / a; }

Jet exp(const Jet& a);
Jet sin(const Jet& a);
Jet cos(const Jet& a);
/// a^p on the principal branch. Requires a.value() != 0 unless p is a
/// non-negative integer.
Jet pow(const Jet& a, double p);
Jet pow(const Jet& a, int p);

}  // namespace dunkl
