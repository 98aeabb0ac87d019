#pragma once

// Truncated Taylor series ("jets") with normalised coefficients
// c[k] = f^(k)(base) / k!, in one variable (Jet1) and two (Jet2).

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "special_fn.hpp"

namespace eulersums {

class Jet1 {
 public:
  Jet1() : Jet1(0.0, 0) {}

  Jet1(double base, int order) : base_(base), c_(checked_size(order), 0.0) {}

  Jet1(double base, std::vector<double> coeffs) : base_(base), c_(std::move(coeffs)) {
    if (c_.empty()) throw JetMismatch("Jet1: coefficient vector must not be empty");
  }

  static Jet1 constant(double base, int order, double value) {
    Jet1 j(base, order);
    j.c_[0] = value;
    return j;
  }

  // The independent variable t expanded at t = base.
  static Jet1 variable(double base, int order) {
    Jet1 j(base, order);
    j.c_[0] = base;
    if (order >= 1) j.c_[1] = 1.0;
    return j;
  }

  double base() const { return base_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<double>& coeffs() const { return c_; }

  double operator[](int k) const { return c_[index(k)]; }
  double& operator[](int k) { return c_[index(k)]; }

  double value() const { return c_[0]; }
  // f^(k)(base)
  double derivative(int k) const { return detail::factorial(k) * (*this)[k]; }

  void check_compatible(const Jet1& o) const {
    if (base_ != o.base_ || c_.size() != o.c_.size()) {
      throw JetMismatch("Jet1: operands differ in base or order (" + detail::fmt_arg(base_) + "/" +
                        std::to_string(order()) + " vs " + detail::fmt_arg(o.base_) + "/" +
                        std::to_string(o.order()) + ")");
    }
  }

  Jet1& operator+=(const Jet1& o) {
    check_compatible(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  Jet1& operator-=(const Jet1& o) {
    check_compatible(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Jet1& operator*=(const Jet1& o) {
    check_compatible(o);
    std::vector<double> r(c_.size(), 0.0);
    for (std::size_t k = 0; k < c_.size(); ++k) {
      for (std::size_t j = 0; j <= k; ++j) r[k] += c_[j] * o.c_[k - j];
    }
    c_ = std::move(r);
    return *this;
  }
  Jet1& operator+=(double s) {
    c_[0] += s;
    return *this;
  }
  Jet1& operator-=(double s) {
    c_[0] -= s;
    return *this;
  }
  Jet1& operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
  }
  Jet1& operator/=(double s) {
    for (double& v : c_) v /= s;
    return *this;
  }

 private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw JetMismatch("Jet1: negative order");
    return static_cast<std::size_t>(order) + 1;
  }
  std::size_t index(int k) const {
    if (k < 0 || k > order()) {
      throw JetMismatch("Jet1: coefficient " + std::to_string(k) + " beyond order " +
                        std::to_string(order()));
    }
    return static_cast<std::size_t>(k);
  }

  double base_;
  std::vector<double> c_;
};

inline Jet1 operator+(Jet1 a, const Jet1& b) { return a += b; }
inline Jet1 operator-(Jet1 a, const Jet1& b) { return a -= b; }
inline Jet1 operator*(Jet1 a, const Jet1& b) { return a *= b; }
inline Jet1 operator+(Jet1 a, double s) { return a += s; }
inline Jet1 operator+(double s, Jet1 a) { return a += s; }
inline Jet1 operator-(Jet1 a, double s) { return a -= s; }
inline Jet1 operator*(Jet1 a, double s) { return a *= s; }
inline Jet1 operator*(double s, Jet1 a) { return a *= s; }
inline Jet1 operator/(Jet1 a, double s) { return a /= s; }
inline Jet1 operator-(Jet1 a) { return a *= -1.0; }
inline Jet1 operator-(double s, const Jet1& a) { return -a + s; }

/// f(g(t)) where outer[k] = f^(k)(g(base))/k!, k = 0..order.
inline Jet1 compose(const std::vector<double>& outer, const Jet1& inner) {
  const int n = inner.order();
  if (static_cast<int>(outer.size()) < n + 1) throw JetMismatch("compose: outer series too short");
  Jet1 delta = inner;
  delta[0] = 0.0;
  Jet1 r = Jet1::constant(inner.base(), n, outer[static_cast<std::size_t>(n)]);
  for (int k = n - 1; k >= 0; --k) {
    r *= delta;
    r[0] += outer[static_cast<std::size_t>(k)];
  }
  return r;
}

inline Jet1 exp(const Jet1& g) {
  const int n = g.order();
  Jet1 f(g.base(), n);
  f[0] = std::exp(g[0]);
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += j * g[j] * f[k - j];
    f[k] = s / k;
  }
  return f;
}

inline Jet1 log(const Jet1& g) {
  if (!(g[0] > 0.0)) throw DomainError("log(Jet1): value must be positive");
  const int n = g.order();
  Jet1 h(g.base(), n);
  h[0] = std::log(g[0]);
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int j = 1; j < k; ++j) s += j * h[j] * g[k - j];
    h[k] = (g[k] - s / k) / g[0];
  }
  return h;
}

inline Jet1 reciprocal(const Jet1& g) {
  if (g[0] == 0.0) throw DomainError("reciprocal(Jet1): value is zero");
  const int n = g.order();
  Jet1 r(g.base(), n);
  r[0] = 1.0 / g[0];
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += g[j] * r[k - j];
    r[k] = -s / g[0];
  }
  return r;
}

/// g^alpha through the binomial series of the outer power.
inline Jet1 pow(const Jet1& g, double alpha) {
  const double a = g[0];
  if (a == 0.0) throw DomainError("pow(Jet1): value is zero");
  if (a < 0.0 && !detail::is_integer(alpha)) throw DomainError("pow(Jet1): negative base");
  const int n = g.order();
  std::vector<double> outer(static_cast<std::size_t>(n) + 1);
  outer[0] = std::pow(a, alpha);
  for (int k = 1; k <= n; ++k) {
    outer[static_cast<std::size_t>(k)] = outer[static_cast<std::size_t>(k) - 1] * (alpha - k + 1) / (k * a);
  }
  return compose(outer, g);
}

/// ln Gamma(g(t)).
inline Jet1 lgamma(const Jet1& g) {
  const int n = g.order();
  std::vector<double> outer(static_cast<std::size_t>(n) + 1);
  outer[0] = ln_gamma(g[0]);
  for (int k = 1; k <= n; ++k) outer[static_cast<std::size_t>(k)] = polygamma(k - 1, g[0]) / detail::factorial(k);
  return compose(outer, g);
}

/// psi^(s)(g(t)).
inline Jet1 polygamma(int s, const Jet1& g) {
  const int n = g.order();
  std::vector<double> outer(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) outer[static_cast<std::size_t>(k)] = polygamma(s + k, g[0]) / detail::factorial(k);
  return compose(outer, g);
}

inline Jet1 digamma(const Jet1& g) { return polygamma(0, g); }

/// ln Gamma(t+a) - ln Gamma(t+b) for the jet t, with the constant term
/// taken from the scalar difference that keeps a - b exact.
inline Jet1 ln_gamma_ratio(const Jet1& t, double a, double b) {
  const int n = t.order();
  const double t0 = t[0];
  std::vector<double> outer(static_cast<std::size_t>(n) + 1, 0.0);
  outer[0] = ln_gamma_ratio(t0, a, b);
  for (int k = 1; k <= n; ++k) {
    outer[static_cast<std::size_t>(k)] =
        (polygamma(k - 1, t0 + a) - polygamma(k - 1, t0 + b)) / detail::factorial(k);
  }
  return compose(outer, t);
}

/// Jet of ln Gamma at a: [ln Gamma(a), psi(a), psi'(a)/2!, ..., psi^(order-1)(a)/order!].
inline Jet1 ln_gamma_jet(double a, int order) {
  if (!(a > 0.0)) throw DomainError("ln_gamma_jet: requires a > 0, got " + detail::fmt_arg(a));
  return lgamma(Jet1::variable(a, order));
}

// ---------------------------------------------------------------------------

class Jet2 {
 public:
  Jet2(double x0, double z0, int ox, int oz) : x0_(x0), z0_(z0), ox_(ox), oz_(oz) {
    if (ox < 0 || oz < 0) throw JetMismatch("Jet2: negative order");
    c_.assign(static_cast<std::size_t>((ox + 1) * (oz + 1)), 0.0);
  }

  static Jet2 constant(double x0, double z0, int ox, int oz, double value) {
    Jet2 j(x0, z0, ox, oz);
    j(0, 0) = value;
    return j;
  }
  static Jet2 variable_x(double x0, double z0, int ox, int oz) {
    Jet2 j = constant(x0, z0, ox, oz, x0);
    if (ox >= 1) j(1, 0) = 1.0;
    return j;
  }
  static Jet2 variable_z(double x0, double z0, int ox, int oz) {
    Jet2 j = constant(x0, z0, ox, oz, z0);
    if (oz >= 1) j(0, 1) = 1.0;
    return j;
  }

  double x0() const { return x0_; }
  double z0() const { return z0_; }
  int ox() const { return ox_; }
  int oz() const { return oz_; }

  double operator()(int a, int b) const { return c_[index(a, b)]; }
  double& operator()(int a, int b) { return c_[index(a, b)]; }

  void check_compatible(const Jet2& o) const {
    if (x0_ != o.x0_ || z0_ != o.z0_ || ox_ != o.ox_ || oz_ != o.oz_) {
      throw JetMismatch("Jet2: operands differ in base or orders");
    }
  }

  Jet2& operator+=(const Jet2& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Jet2& operator-=(const Jet2& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Jet2& operator*=(const Jet2& o) {
    check_compatible(o);
    Jet2 r(x0_, z0_, ox_, oz_);
    for (int a = 0; a <= ox_; ++a) {
      for (int b = 0; b <= oz_; ++b) {
        double s = 0.0;
        for (int i = 0; i <= a; ++i) {
          for (int j = 0; j <= b; ++j) s += (*this)(i, j) * o(a - i, b - j);
        }
        r(a, b) = s;
      }
    }
    c_ = std::move(r.c_);
    return *this;
  }
  Jet2& operator+=(double s) {
    c_[0] += s;
    return *this;
  }
  Jet2& operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
  }

 private:
  std::size_t index(int a, int b) const {
    if (a < 0 || a > ox_ || b < 0 || b > oz_) {
      throw JetMismatch("Jet2: coefficient (" + std::to_string(a) + "," + std::to_string(b) +
                        ") beyond orders (" + std::to_string(ox_) + "," + std::to_string(oz_) + ")");
    }
    return static_cast<std::size_t>(a * (oz_ + 1) + b);
  }

  double x0_, z0_;
  int ox_, oz_;
  std::vector<double> c_;
};

inline Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
inline Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
inline Jet2 operator*(Jet2 a, const Jet2& b) { return a *= b; }
inline Jet2 operator*(Jet2 a, double s) { return a *= s; }
inline Jet2 operator*(double s, Jet2 a) { return a *= s; }
inline Jet2 operator+(Jet2 a, double s) { return a += s; }
inline Jet2 operator-(Jet2 a) { return a *= -1.0; }

// d_x f = f d_x g gives f[a][b] = (1/a) sum_{i>=1,j} i g[i][j] f[a-i][b-j];
// the a = 0 row is the univariate recurrence in z.
inline Jet2 exp(const Jet2& g) {
  Jet2 f(g.x0(), g.z0(), g.ox(), g.oz());
  f(0, 0) = std::exp(g(0, 0));
  for (int b = 1; b <= g.oz(); ++b) {
    double s = 0.0;
    for (int j = 1; j <= b; ++j) s += j * g(0, j) * f(0, b - j);
    f(0, b) = s / b;
  }
  for (int a = 1; a <= g.ox(); ++a) {
    for (int b = 0; b <= g.oz(); ++b) {
      double s = 0.0;
      for (int i = 1; i <= a; ++i) {
        for (int j = 0; j <= b; ++j) s += i * g(i, j) * f(a - i, b - j);
      }
      f(a, b) = s / a;
    }
  }
  return f;
}

/// a! b! coeff[a][b] = d^a/dx^a d^b/dz^b f(x0, z0).
inline double mixed_partial(const Jet2& j, int a, int b) {
  return detail::factorial(a) * detail::factorial(b) * j(a, b);
}

enum class RatioVariant {
  BETA_SHIFT0,  // Gamma(x+1) Gamma(z) / Gamma(x+z)
  BETA_SHIFT1,  // Gamma(x+1) Gamma(z) / Gamma(x+z+1)
};

inline constexpr int kMaxJetOrderX = 3;
inline constexpr int kMaxJetOrderZ = 12;

/// Bivariate jet of the gamma ratio selected by `variant` at (x0, z0).
inline Jet2 gamma_ratio_jet(RatioVariant variant, double x0, double z0, int ox, int oz) {
  if (ox < 0 || oz < 0 || ox > kMaxJetOrderX || oz > kMaxJetOrderZ) {
    throw DomainError("gamma_ratio_jet: orders must satisfy 0 <= ox <= 3, 0 <= oz <= 12");
  }
  const double a = x0 + 1.0;
  const double z = z0;
  const double c = x0 + z0 + (variant == RatioVariant::BETA_SHIFT1 ? 1.0 : 0.0);
  for (double arg : {a, z, c}) {
    detail::require_not_pole(arg, "gamma_ratio_jet");
    if (!(arg > 0.0)) {
      throw DomainError("gamma_ratio_jet: gamma argument " + detail::fmt_arg(arg) + " is negative");
    }
  }
  const Jet1 la = ln_gamma_jet(a, ox);
  const Jet1 lz = ln_gamma_jet(z, oz);
  const Jet1 lc = ln_gamma_jet(c, ox + oz);
  Jet2 l(x0, z0, ox, oz);
  for (int i = 0; i <= ox; ++i) {
    for (int j = 0; j <= oz; ++j) {
      double v = -lc[i + j] * gen_binom(i + j, i);
      if (j == 0) v += la[i];
      if (i == 0) v += lz[j];
      l(i, j) = v;
    }
  }
  return exp(l);
}

}  // namespace eulersums
