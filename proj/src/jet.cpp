#include "dunkl/jet.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

int checked_order(int order) {
  if (order < 0 || order > Jet::kMaxOrder) {
    throw DomainError("jet order out of range: " + std::to_string(order));
  }
  return order;
}

}  // namespace

Jet::Jet(int order, cplx constant) : order_(checked_order(order)) { c_[0] = constant; }

Jet Jet::variable(double x0, int order) {
  Jet j(order, x0);
  if (order >= 1) j[1] = 1.0;
  return j;
}

cplx Jet::derivative(int k) const {
  if (k > order_) throw DomainError("derivative order exceeds jet order");
  double fact = 1.0;
  for (int i = 2; i <= k; ++i) fact *= i;
  return fact * (*this)[k];
}

Jet Jet::differentiate() const {
  if (order_ == 0) return Jet(0);
  Jet d(order_ - 1);
  for (int j = 0; j < order_; ++j) d[j] = static_cast<double>(j + 1) * (*this)[j + 1];
  return d;
}

Jet Jet::truncated(int order) const {
  Jet t(std::min(order, order_));
  for (int j = 0; j <= t.order_; ++j) t[j] = (*this)[j];
  return t;
}

Jet Jet::mirrored() const {
  Jet m = *this;
  for (int j = 1; j <= order_; j += 2) m[j] = -m[j];
  return m;
}

Jet Jet::operator-() const {
  Jet n = *this;
  for (int j = 0; j <= order_; ++j) n[j] = -n[j];
  return n;
}

Jet& Jet::operator+=(const Jet& o) {
  order_ = std::min(order_, o.order_);
  for (int j = 0; j <= order_; ++j) c_[j] += o.c_[j];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  order_ = std::min(order_, o.order_);
  for (int j = 0; j <= order_; ++j) c_[j] -= o.c_[j];
  return *this;
}

Jet& Jet::operator*=(const Jet& o) {
  *this = *this * o;
  return *this;
}

Jet& Jet::operator/=(const Jet& o) {
  *this = *this / o;
  return *this;
}

Jet& Jet::operator+=(cplx s) {
  c_[0] += s;
  return *this;
}

Jet& Jet::operator-=(cplx s) {
  c_[0] -= s;
  return *this;
}

Jet& Jet::operator*=(cplx s) {
  for (int j = 0; j <= order_; ++j) c_[j] *= s;
  return *this;
}

Jet& Jet::operator/=(cplx s) {
  for (int j = 0; j <= order_; ++j) c_[j] /= s;
  return *this;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }

Jet operator*(const Jet& a, const Jet& b) {
  Jet p(std::min(a.order(), b.order()));
  for (int j = 0; j <= p.order(); ++j) {
    cplx s{};
    for (int i = 0; i <= j; ++i) s += a[i] * b[j - i];
    p[j] = s;
  }
  return p;
}

Jet operator/(const Jet& a, const Jet& b) {
  if (b.value() == cplx{}) throw SingularityError("jet division by a vanishing expansion");
  Jet q(std::min(a.order(), b.order()));
  for (int j = 0; j <= q.order(); ++j) {
    cplx s = a[j];
    for (int i = 0; i < j; ++i) s -= q[i] * b[j - i];
    q[j] = s / b[0];
  }
  return q;
}

Jet operator+(Jet a, cplx s) { return a += s; }
Jet operator+(cplx s, Jet a) { return a += s; }
Jet operator-(Jet a, cplx s) { return a -= s; }
Jet operator-(cplx s, const Jet& a) { return -a + s; }
Jet operator*(Jet a, cplx s) { return a *= s; }
Jet operator*(cplx s, Jet a) { return a *= s; }
Jet operator/(Jet a, cplx s) { return a /= s; }
Jet operator/(cplx s, const Jet& a) { return Jet(a.order(), s) / a; }

Jet exp(const Jet& a) {
  Jet e(a.order());
  e[0] = std::exp(a[0]);
  for (int j = 1; j <= a.order(); ++j) {
    cplx s{};
    for (int i = 1; i <= j; ++i) s += static_cast<double>(i) * a[i] * e[j - i];
    e[j] = s / static_cast<double>(j);
  }
  return e;
}

namespace {

void sin_cos(const Jet& a, Jet& s, Jet& c) {
  s = Jet(a.order());
  c = Jet(a.order());
  s[0] = std::sin(a[0]);
  c[0] = std::cos(a[0]);
  for (int j = 1; j <= a.order(); ++j) {
    cplx ss{}, cc{};
    for (int i = 1; i <= j; ++i) {
      ss += static_cast<double>(i) * a[i] * c[j - i];
      cc += static_cast<double>(i) * a[i] * s[j - i];
    }
    s[j] = ss / static_cast<double>(j);
    c[j] = -cc / static_cast<double>(j);
  }
}

}  // namespace

Jet sin(const Jet& a) {
  Jet s, c;
  sin_cos(a, s, c);
  return s;
}

Jet cos(const Jet& a) {
  Jet s, c;
  sin_cos(a, s, c);
  return c;
}

Jet pow(const Jet& a, int p) {
  if (p < 0) return 1.0 / pow(a, -p);
  Jet result(a.order(), 1.0);
  Jet base = a;
  while (p > 0) {
    if (p & 1) result = result * base;
    base = base * base;
    p >>= 1;
  }
  return result;
}

Jet pow(const Jet& a, double p) {
  if (p == std::floor(p) && std::abs(p) <= 64.0) return pow(a, static_cast<int>(p));
  if (a.value() == cplx{}) {
    throw SingularityError("non-integer power of a vanishing expansion");
  }
  Jet y(a.order());
  y[0] = std::pow(a[0], p);
  for (int n = 1; n <= a.order(); ++n) {
    cplx s{};
    for (int k = 1; k <= n; ++k) s += ((p + 1.0) * k - n) * a[k] * y[n - k];
    y[n] = s / (static_cast<double>(n) * a[0]);
  }
  return y;
}

}  // namespace dunkl
