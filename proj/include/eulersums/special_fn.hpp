#pragma once

// Scalar special functions: gamma, psi and its derivatives, Hurwitz and
// Riemann zeta, (generalised) harmonic numbers and binomial coefficients.
//
// All functions are pure and reentrant. Nonpositive integers are poles of
// gamma and of every psi derivative; those raise PoleError.

#include <cmath>
#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <string>
#include <vector>

#include "compensated_sum.hpp"
#include "constants.hpp"
#include "errors.hpp"

namespace eulersums {

namespace detail {

inline bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

inline bool is_integer(double x) { return std::isfinite(x) && x == std::floor(x); }

inline std::string fmt_arg(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// x^n for integer n, exact sign handling for negative bases.
inline double ipow(double x, int n) {
  if (n < 0) return 1.0 / ipow(x, -n);
  double result = 1.0;
  double base = x;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

// sin(pi x) with the argument reduced before multiplying by pi, so that
// sin_pi(-k + eps) keeps full relative accuracy.
inline double sin_pi(double x) {
  double r = std::remainder(x, 2.0);  // [-1, 1]
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  return std::sin(kPi * r);
}

inline double cot_pi(double x) {
  const double r = std::remainder(x, 1.0);  // [-0.5, 0.5], cot has period 1
  return std::cos(kPi * r) / std::sin(kPi * r);
}

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline void require_not_pole(double x, const char* fn) {
  if (is_nonpositive_integer(x)) {
    throw PoleError(std::string(fn) + ": pole at " + fmt_arg(x));
  }
  if (std::isnan(x)) throw DomainError(std::string(fn) + ": NaN argument");
}

// Asymptotic psi for x >= 10.
inline double digamma_asymptotic(double x) {
  const double inv2 = 1.0 / (x * x);
  double power = inv2;
  double series = 0.0;
  for (std::size_t j = 0; j < kBernoulliEven.size(); ++j) {
    const double term = kBernoulliEven[j] / (2.0 * static_cast<double>(j + 1)) * power;
    series += term;
    if (std::abs(term) < 1e-17 * std::abs(std::log(x))) break;
    power *= inv2;
  }
  return std::log(x) - 0.5 / x - series;
}

// Asymptotic psi^(k) for k >= 1 and x >= 10 + k:
// (-1)^{k+1} (k-1)!/x^k [1 + k/(2x) + sum_j B_{2j}/(2j)! (k)_{2j} / x^{2j}].
inline double polygamma_asymptotic(int k, double x) {
  const double inv2 = 1.0 / (x * x);
  double bracket = 1.0 + k / (2.0 * x);
  double rising_over_fact = 1.0;  // (k)_{2j} / (2j)!
  double power = 1.0;
  for (std::size_t j = 1; j <= kBernoulliEven.size(); ++j) {
    const double jj = static_cast<double>(j);
    rising_over_fact *= (k + 2.0 * jj - 2.0) * (k + 2.0 * jj - 1.0) / ((2.0 * jj - 1.0) * (2.0 * jj));
    power *= inv2;
    const double term = kBernoulliEven[j - 1] * rising_over_fact * power;
    bracket += term;
    if (std::abs(term) < 1e-17 * std::abs(bracket)) break;
  }
  const double sign = (k % 2 == 1) ? 1.0 : -1.0;  // (-1)^{k+1}
  return sign * factorial(k - 1) / ipow(x, k) * bracket;
}

}  // namespace detail

/// Natural log of Gamma(x) for x > 0.
inline double ln_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("ln_gamma: requires x > 0, got " + detail::fmt_arg(x));
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

/// Gamma(x) for any non-pole real x; negative arguments via reflection.
inline double gamma(double x) {
  detail::require_not_pole(x, "gamma");
  if (x > 0.0) return std::tgamma(x);
  return kPi / (detail::sin_pi(x) * std::tgamma(1.0 - x));
}

/// psi(x) = d/dx ln Gamma(x). Upward recurrence to x >= 10, then the
/// Bernoulli asymptotic series; negative arguments by reflection.
inline double digamma(double x) {
  detail::require_not_pole(x, "digamma");
  if (x < 0.0) return digamma(1.0 - x) - kPi * detail::cot_pi(x);
  CompensatedSum shift;
  while (x < 10.0) {
    shift.add(-1.0 / x);
    x += 1.0;
  }
  shift.add(detail::digamma_asymptotic(x));
  return shift.value();
}

/// psi^(k)(x) = (-1)^{k+1} k! zeta(k+1, x). Accepts any non-pole x; values
/// left of the threshold are reached by the recurrence
/// psi^(k)(x) = psi^(k)(x+N) - (-1)^k k! sum_{j<N} (x+j)^{-(k+1)}.
inline double polygamma(int k, double x) {
  if (k < 0) throw DomainError("polygamma: order must be >= 0");
  if (k == 0) return digamma(x);
  detail::require_not_pole(x, "polygamma");
  const double threshold = 10.0 + k;
  CompensatedSum shifted;
  while (x < threshold) {
    shifted.add(detail::ipow(x, -(k + 1)));
    x += 1.0;
  }
  const double sign_k = (k % 2 == 0) ? 1.0 : -1.0;
  CompensatedSum total(detail::polygamma_asymptotic(k, x));
  total.add(-sign_k * detail::factorial(k) * shifted.value());
  return total.value();
}

/// zeta(s, a) = sum_{j>=0} (j+a)^{-s} for s > 1, a > 0.
/// Direct terms until the base reaches max(20, s), then Euler-Maclaurin
/// with the integral, the half-term and eight Bernoulli corrections.
inline double hurwitz_zeta(double s, double a) {
  if (!(s > 1.0)) throw DomainError("hurwitz_zeta: requires s > 1, got " + detail::fmt_arg(s));
  if (!(a > 0.0)) throw DomainError("hurwitz_zeta: requires a > 0, got " + detail::fmt_arg(a));
  const double start = std::max(20.0, std::ceil(s));
  CompensatedSum sum;
  double b = a;
  while (b < start) {
    sum.add(std::pow(b, -s));
    b += 1.0;
  }
  const double b_pow = std::pow(b, -s);
  sum.add(b * b_pow / (s - 1.0));
  sum.add(0.5 * b_pow);
  // B_{2k}/(2k)! * s(s+1)...(s+2k-2) * b^{-s-2k+1}
  double coeff = s / b;  // (s)_{1} b^{-1} / 1!
  double fact = 2.0;     // (2k)!
  for (int k = 1; k <= 8; ++k) {
    const double term = kBernoulliEven[k - 1] / fact * coeff * b_pow;
    sum.add(term);
    coeff *= (s + 2.0 * k - 1.0) * (s + 2.0 * k) / (b * b);
    fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
  }
  return sum.value();
}

/// Riemann zeta for s > 1.
inline double riemann_zeta(double s) {
  if (!(s > 1.0)) throw DomainError("riemann_zeta: requires s > 1, got " + detail::fmt_arg(s));
  if (s == 2.0) return kZeta2;
  if (s == 3.0) return kZeta3;
  if (s == 4.0) return kZeta4;
  return hurwitz_zeta(s, 1.0);
}

/// H_n^(m) = sum_{k=1}^n k^{-m}; H_0^(m) = 0.
inline double gen_harmonic(long long n, int m) {
  if (n < 0) throw DomainError("gen_harmonic: requires n >= 0");
  if (m < 1) throw DomainError("gen_harmonic: requires m >= 1");
  CompensatedSum sum;
  for (long long k = n; k >= 1; --k) sum.add(detail::ipow(static_cast<double>(k), -m));
  return sum.value();
}

inline double harmonic(long long n) { return gen_harmonic(n, 1); }

/// Precomputed H_n, H_n^(2), H_n^(3) for 0 <= n <= n_max.
class HarmonicCache {
 public:
  explicit HarmonicCache(std::size_t n_max) : h1_(n_max + 1), h2_(n_max + 1), h3_(n_max + 1) {
    CompensatedSum s1, s2, s3;
    for (std::size_t n = 1; n <= n_max; ++n) {
      const double inv = 1.0 / static_cast<double>(n);
      s1.add(inv);
      s2.add(inv * inv);
      s3.add(inv * inv * inv);
      h1_[n] = s1.value();
      h2_[n] = s2.value();
      h3_[n] = s3.value();
    }
  }

  std::size_t n_max() const { return h1_.size() - 1; }

  double h1(std::size_t n) const { return h1_.at(n); }
  double h2(std::size_t n) const { return h2_.at(n); }
  double h3(std::size_t n) const { return h3_.at(n); }

  /// H_n^(order) for order in {1, 2, 3}.
  double operator()(int order, std::size_t n) const {
    switch (order) {
      case 1: return h1(n);
      case 2: return h2(n);
      case 3: return h3(n);
      default: throw DomainError("HarmonicCache: order must be 1, 2 or 3");
    }
  }

 private:
  std::vector<double> h1_, h2_, h3_;
};

/// H_eta^(m) for real eta not in Z<=-1: gamma + psi(eta+1) for m = 1,
/// zeta(m) + (-1)^{m-1}/(m-1)! psi^(m-1)(eta+1) otherwise.
inline double extended_harmonic(double eta, int m) {
  if (m < 1) throw DomainError("extended_harmonic: requires m >= 1");
  detail::require_not_pole(eta + 1.0, "extended_harmonic");
  if (m == 1) return kEulerGamma + digamma(eta + 1.0);
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;  // (-1)^{m-1}
  return riemann_zeta(m) + sign / detail::factorial(m - 1) * polygamma(m - 1, eta + 1.0);
}

/// Gamma(s+1) / (Gamma(t+1) Gamma(s-t+1)). Exactly zero when only the
/// denominator has a pole.
inline double gen_binom(double s, double t) {
  if (detail::is_nonpositive_integer(s + 1.0)) {
    throw PoleError("gen_binom: Gamma(s+1) has a pole at s = " + detail::fmt_arg(s));
  }
  if (detail::is_nonpositive_integer(t + 1.0) || detail::is_nonpositive_integer(s - t + 1.0)) {
    return 0.0;
  }
  if (detail::is_integer(s) && detail::is_integer(t)) {
    // 0 <= t <= s here; multiplicative form is exact for moderate s.
    const double k = std::min(t, s - t);
    double r = 1.0;
    for (double i = 1.0; i <= k; i += 1.0) r = r * (s - k + i) / i;
    return r;
  }
  const double a = s + 1.0;
  const double b = t + 1.0;
  const double c = s - t + 1.0;
  if (std::max({std::abs(a), std::abs(b), std::abs(c)}) < 150.0) {
    return gamma(a) / (gamma(b) * gamma(c));
  }
  int sa = 0, sb = 0, sc = 0;
  const double la = ::lgamma_r(a, &sa);
  const double lb = ::lgamma_r(b, &sb);
  const double lc = ::lgamma_r(c, &sc);
  return static_cast<double>(sa * sb * sc) * std::exp(la - lb - lc);
}

/// B(mu, nu) = Gamma(mu) Gamma(nu) / Gamma(mu + nu) for mu, nu > 0.
inline double beta(double mu, double nu) {
  if (!(mu > 0.0) || !(nu > 0.0)) throw DomainError("beta: requires mu, nu > 0");
  if (mu + nu < 170.0) return std::tgamma(mu) * std::tgamma(nu) / std::tgamma(mu + nu);
  return std::exp(ln_gamma(mu) + ln_gamma(nu) - ln_gamma(mu + nu));
}

/// {lambda}_l = lambda (lambda-1) ... (lambda-l+1); 1 for l = 0.
inline double falling_factorial(double lambda, int l) {
  if (l < 0) throw DomainError("falling_factorial: requires l >= 0");
  double r = 1.0;
  for (int i = 0; i < l; ++i) r *= lambda - i;
  return r;
}

/// Laurent coefficient of psi at z = -k: (-1)^n zeta(n) + H_k^(n).
inline double laurent_alpha(int n, int k) {
  if (n < 2) throw DomainError("laurent_alpha: requires n >= 2");
  if (k < 0) throw DomainError("laurent_alpha: requires k >= 0");
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * riemann_zeta(n) + gen_harmonic(k, n);
}

namespace detail {

// ln Gamma(a) - ln Gamma(b) given d = a - b exactly. Both arguments are
// shifted by a common integer until min(a,b) >= 10; the Stirling
// difference is then written with log1p so that the leading d ln b term
// does not come from cancelling two large logs.
inline double ln_gamma_ratio_impl(double a, double b, double d) {
  if (d == 0.0) return 0.0;
  if (std::max(a, b) < 10.0) return ln_gamma(a) - ln_gamma(b);
  CompensatedSum sum;
  while (std::min(a, b) < 10.0) {
    sum.add(-std::log1p(d / b));
    a += 1.0;
    b += 1.0;
  }
  sum.add((a - 0.5) * std::log1p(d / b));
  sum.add(d * std::log(b));
  sum.add(-d);
  double pa = 1.0 / a;
  double pb = 1.0 / b;
  const double ia2 = pa * pa;
  const double ib2 = pb * pb;
  for (std::size_t j = 1; j <= 10; ++j) {
    const double jj = static_cast<double>(j);
    const double coeff = kBernoulliEven[j - 1] / (2.0 * jj * (2.0 * jj - 1.0));
    sum.add(coeff * (pa - pb));
    if (std::abs(coeff * pb) < 1e-18 * std::max(1.0, std::abs(d))) break;
    pa *= ia2;
    pb *= ib2;
  }
  return sum.value();
}

}  // namespace detail

/// ln Gamma(a) - ln Gamma(b) for a, b > 0, accurate when both are huge.
inline double ln_gamma_ratio(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("ln_gamma_ratio: requires a, b > 0");
  return detail::ln_gamma_ratio_impl(a, b, a - b);
}

/// ln Gamma(t+a) - ln Gamma(t+b); keeps a - b exact even when t swamps it.
inline double ln_gamma_ratio(double t, double a, double b) {
  if (!(t + a > 0.0) || !(t + b > 0.0)) throw DomainError("ln_gamma_ratio: requires t+a, t+b > 0");
  return detail::ln_gamma_ratio_impl(t + a, t + b, a - b);
}

}  // namespace eulersums
