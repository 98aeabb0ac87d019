#pragma once

// Direct numerical summation of the series families: an adaptive
// compensated summer for fast-decaying terms, and for the slowly decaying
// harmonic-type series a direct head plus an Euler-Maclaurin tail built on
// the exact analytic continuation of the summand.

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "compensated_sum.hpp"
#include "constants.hpp"
#include "errors.hpp"
#include "jet.hpp"
#include "special_fn.hpp"

namespace eulersums {

struct EvalConfig {
  double rel_tol = 1e-10;
  long long max_terms = 100'000'000;
  int em_order = 6;            // Bernoulli corrections in the tail
  int consecutive_small = 3;   // small terms in a row before sum_adaptive may stop
  long long em_crossover = 10'000;  // last directly summed index

  void validate() const {
    if (!(rel_tol > 0.0)) throw DomainError("EvalConfig: rel_tol must be > 0");
    if (max_terms < 1) throw DomainError("EvalConfig: max_terms must be >= 1");
    if (em_order < 1 || em_order > 16) throw DomainError("EvalConfig: em_order must be in 1..16");
    if (consecutive_small < 1) throw DomainError("EvalConfig: consecutive_small must be >= 1");
    if (em_crossover < 1) throw DomainError("EvalConfig: em_crossover must be >= 1");
  }
};

struct SumResult {
  double value = 0.0;
  double tail_estimate = 0.0;  // >= 0
  long long terms_used = 0;
  bool converged = false;
};

namespace detail {

inline void require_finite_term(double t, long long k) {
  if (!std::isfinite(t)) throw SeriesError("non-finite term at k = " + std::to_string(k));
}

// Tail bound after seeing consecutive terms prev, t at index k: the larger
// of a geometric and a power-law extrapolation, or |t| for sign changes.
inline double ratio_tail_bound(double prev, double t, long long k) {
  if (t == 0.0 && prev == 0.0) return 0.0;
  if (prev == 0.0) return std::numeric_limits<double>::infinity();
  const double r = t / prev;
  if (r < 0.0) return std::abs(t);
  if (r >= 1.0) return std::numeric_limits<double>::infinity();
  const double kk = static_cast<double>(std::max<long long>(k, 1));
  const double geo = std::abs(t) * r / (1.0 - r);
  const double q = kk * (1.0 - r);
  const double power = q > 1.0 ? std::abs(t) * kk / (q - 1.0) : std::numeric_limits<double>::infinity();
  return std::max(geo, power);
}

}  // namespace detail

/// Sum term(k) for k >= k_start with Neumaier compensation. Stops after
/// `consecutive_small` terms below rel_tol*|partial| once the ratio-based
/// tail bound is also below rel_tol*|partial|.
template <class Term>
SumResult sum_adaptive(Term&& term, const EvalConfig& cfg, long long k_start = 0) {
  cfg.validate();
  CompensatedSum acc;
  int small_run = 0;
  double prev = 0.0;
  double bound = std::numeric_limits<double>::infinity();
  for (long long i = 0; i < cfg.max_terms; ++i) {
    const long long k = k_start + i;
    const double t = term(k);
    detail::require_finite_term(t, k);
    acc.add(t);
    const double s = acc.value();
    if (i > 0) bound = detail::ratio_tail_bound(prev, t, k);
    small_run = (std::abs(t) <= cfg.rel_tol * std::abs(s)) ? small_run + 1 : 0;
    if (small_run >= cfg.consecutive_small && bound <= cfg.rel_tol * std::abs(s)) {
      return {s, bound, i + 1, true};
    }
    prev = t;
  }
  return {acc.value(), bound, cfg.max_terms, false};
}

struct TailEstimate {
  double value = 0.0;
  double error = 0.0;       // truncation + quadrature + rounding
  double truncation = 0.0;  // size of the last Bernoulli correction
};

/// Euler-Maclaurin estimate of sum_{k > K} f(k). `f` maps the jet of the
/// independent variable t to the jet of the summand, so the same callable
/// supplies point values and derivatives. The integral from K+1 to infinity
/// is taken after t = (K+1) e^v on panels of doubling width.
template <class Smooth>
TailEstimate em_tail(Smooth&& f, long long K, const EvalConfig& cfg) {
  cfg.validate();
  const double a = static_cast<double>(K) + 1.0;
  const int p = cfg.em_order;
  const Jet1 fa = f(Jet1::variable(a, 2 * p - 1));
  if (fa[0] != 0.0 && fa[0] * fa[1] > 0.0) {
    throw SeriesError("em_tail: |term| is not decreasing at t = " + detail::fmt_arg(a));
  }

  CompensatedSum total;
  total.add(0.5 * fa[0]);
  double last_correction = 0.0;
  for (int j = 1; j <= p; ++j) {
    last_correction = -kBernoulliEven[static_cast<std::size_t>(j - 1)] / (2.0 * j) * fa[2 * j - 1];
    total.add(last_correction);
  }

  auto integrand = [&](double v) {
    const double t = a * std::exp(v);
    return f(Jet1::variable(t, 0))[0] * t;
  };
  using Quad = boost::math::quadrature::gauss_kronrod<double, 31>;
  CompensatedSum integral;
  double quad_error = 0.0;
  const double v_max = 690.0 - std::log(a);
  double lo = 0.0;
  double width = 1.0;
  int quiet_panels = 0;
  bool settled = false;
  while (lo < v_max) {
    const double hi = std::min(lo + width, v_max);
    double err = 0.0;
    const double panel = Quad::integrate(integrand, lo, hi, 10, 1e-15, &err);
    if (!std::isfinite(panel)) throw SeriesError("em_tail: non-finite integrand");
    integral.add(panel);
    quad_error += err;
    quiet_panels = (std::abs(panel) <= 1e-18 * std::abs(integral.value())) ? quiet_panels + 1 : 0;
    if (quiet_panels >= 2) {
      settled = true;
      break;
    }
    lo = hi;
    width *= 2.0;
  }
  if (!settled) throw SeriesError("em_tail: tail integral does not settle; term decays too slowly");
  total.add(integral.value());
  const double value = total.value();
  const double error = std::abs(last_correction) + quad_error +
                       4.0 * std::numeric_limits<double>::epsilon() * std::abs(value);
  return {value, error, std::abs(last_correction)};
}

/// Direct compensated sum over k_start..K followed by em_tail beyond K.
/// `make_direct()` returns a fresh callable evaluated at k_start, k_start+1,
/// ... in order (so it may keep running state). K starts at the configured
/// crossover and is quadrupled while the Euler-Maclaurin truncation error
/// alone exceeds the tolerance (a larger K does not help the quadrature).
template <class MakeDirect, class Smooth>
SumResult sum_with_em_tail(MakeDirect&& make_direct, Smooth&& smooth, long long k_start,
                           const EvalConfig& cfg) {
  cfg.validate();
  long long K = std::max(k_start, cfg.em_crossover);
  for (;;) {
    auto term = make_direct(K);
    CompensatedSum head;
    for (long long k = k_start; k <= K; ++k) {
      const double t = term(k);
      detail::require_finite_term(t, k);
      head.add(t);
    }
    const TailEstimate tail = em_tail(smooth, K, cfg);
    CompensatedSum total(head.value());
    total.add(tail.value);
    const double value = total.value();
    const long long used = K - k_start + 1;
    const double target = cfg.rel_tol * std::abs(value);
    const bool ok = tail.error <= target;
    if (ok || tail.truncation <= 0.5 * target || 4 * K > cfg.max_terms) return {value, tail.error, used, ok};
    K *= 4;
  }
}

namespace detail {

// H_t = gamma + psi(t+1)
inline Jet1 harmonic_jet(const Jet1& t) { return digamma(t + 1.0) + kEulerGamma; }

// H_t^(s) = zeta(s) + (-1)^{s-1}/(s-1)! psi^(s-1)(t+1), s >= 2
inline Jet1 gen_harmonic_jet(int s, const Jet1& t) {
  if (s == 1) return harmonic_jet(t);
  const double sign = (s % 2 == 1) ? 1.0 : -1.0;
  return polygamma(s - 1, t + 1.0) * (sign / factorial(s - 1)) + riemann_zeta(s);
}

// 1/binom(n+t, t) = prod_{i=1}^n i/(t+i)
inline Jet1 inv_binom_jet(int n, const Jet1& t) {
  Jet1 r = Jet1::constant(t.base(), t.order(), 1.0);
  for (int i = 1; i <= n; ++i) r *= reciprocal(t + static_cast<double>(i)) * static_cast<double>(i);
  return r;
}

inline double sign_pow(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

// Running H_k, H_k^(2) and 1/binom(n+k,k) for k = 1, 2, ... in order.
struct HarmonicBinomState {
  int n;
  long long k = 0;
  CompensatedSum h1, h2;
  double inv_binom = 1.0;

  explicit HarmonicBinomState(int n_) : n(n_) {}

  void advance_to(long long target) {
    while (k < target) {
      ++k;
      const double kk = static_cast<double>(k);
      h1.add(1.0 / kk);
      h2.add(1.0 / (kk * kk));
      inv_binom *= kk / (n + kk);
    }
  }
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw DomainError(msg);
}

}  // namespace detail

/// sum_{k>=0} H_k / ((n+k+1)^{m+1} binom(n+k,k))
inline SumResult lhs_variant1(int n, int m, const EvalConfig& cfg = {}) {
  detail::require(n >= 0, "lhs_variant1: requires n >= 0");
  detail::require(m >= 1, "lhs_variant1: diverges unless m >= 1");
  auto direct = [n, m](long long) {
    return [st = detail::HarmonicBinomState(n), n, m](long long k) mutable {
      st.advance_to(k);
      return st.h1.value() * st.inv_binom / detail::ipow(n + k + 1.0, m + 1);
    };
  };
  auto smooth = [n, m](const Jet1& t) {
    return detail::harmonic_jet(t) * detail::inv_binom_jet(n, t) * pow(t + (n + 1.0), -(m + 1.0));
  };
  return sum_with_em_tail(direct, smooth, 1, cfg);
}

/// sum_{k>=0} (H_k^2 - H_k^(2)) / ((n+k+1)^{m+1} binom(n+k,k))
inline SumResult lhs_variant2(int n, int m, const EvalConfig& cfg = {}) {
  detail::require(n >= 0, "lhs_variant2: requires n >= 0");
  detail::require(m >= 1, "lhs_variant2: diverges unless m >= 1");
  auto direct = [n, m](long long) {
    return [st = detail::HarmonicBinomState(n), n, m](long long k) mutable {
      st.advance_to(k);
      const double h = st.h1.value();
      return (h * h - st.h2.value()) * st.inv_binom / detail::ipow(n + k + 1.0, m + 1);
    };
  };
  auto smooth = [n, m](const Jet1& t) {
    const Jet1 h = detail::harmonic_jet(t);
    return (h * h - detail::gen_harmonic_jet(2, t)) * detail::inv_binom_jet(n, t) *
           pow(t + (n + 1.0), -(m + 1.0));
  };
  return sum_with_em_tail(direct, smooth, 1, cfg);
}

/// sum_{k>=0} (-1)^{n-1} / ((n+k+1)^{m+1} binom(n+k,k))
inline SumResult lhs_alt(int n, int m, const EvalConfig& cfg = {}) {
  detail::require(n >= 0 && m >= 0, "lhs_alt: requires n, m >= 0");
  detail::require(n + m >= 1, "lhs_alt: diverges for n = m = 0");
  const double sign = -detail::sign_pow(n);
  auto direct = [n, m, sign](long long) {
    return [st = detail::HarmonicBinomState(n), n, m, sign](long long k) mutable {
      st.advance_to(k);
      return sign * st.inv_binom / detail::ipow(n + k + 1.0, m + 1);
    };
  };
  auto smooth = [n, m, sign](const Jet1& t) {
    return detail::inv_binom_jet(n, t) * pow(t + (n + 1.0), -(m + 1.0)) * sign;
  };
  return sum_with_em_tail(direct, smooth, 0, cfg);
}

namespace detail {

// (-1)^k binom(x,k) = Gamma(k-x) / (Gamma(-x) k!) for real t > x.
inline Jet1 alt_binom_jet(double x, const Jet1& t) {
  return exp(ln_gamma_ratio(t, -x, 1.0)) / gamma(-x);
}

// Finite sum of (-1)^k binom(x,k) g(k) for integer x >= 0.
template <class G>
SumResult finite_alt_binom(int x, G&& g) {
  CompensatedSum s;
  for (int k = 0; k <= x; ++k) s.add(sign_pow(k) * gen_binom(x, k) * g(k));
  return {s.value(), 0.0, x + 1, true};
}

}  // namespace detail

/// sum_{k>=1} (-1)^{k-1} binom(x,k) / k^m
inline SumResult lhs_base_binomial(double x, int m, const EvalConfig& cfg = {}) {
  detail::require(x > -1.0, "lhs_base_binomial: requires x > -1");
  detail::require(m >= 1, "lhs_base_binomial: requires m >= 1");
  if (detail::is_integer(x)) {
    SumResult r = detail::finite_alt_binom(static_cast<int>(x), [m](int k) {
      return k == 0 ? 0.0 : -detail::ipow(k, -m);
    });
    r.terms_used = static_cast<long long>(x);
    return r;
  }
  auto direct = [x, m](long long) {
    return [a = 1.0, j = 0LL, x, m](long long k) mutable {
      while (j < k) {
        ++j;
        a *= (j - 1 - x) / static_cast<double>(j);
      }
      return -a * detail::ipow(static_cast<double>(k), -m);
    };
  };
  auto smooth = [x, m](const Jet1& t) { return -(detail::alt_binom_jet(x, t) * pow(t, -static_cast<double>(m))); };
  return sum_with_em_tail(direct, smooth, 1, cfg);
}

/// sum_{k>=0} (-1)^k binom(x,k) / (p+k)^{m+1}
inline SumResult lhs_binomial_shifted(double x, double p, int m, const EvalConfig& cfg = {}) {
  detail::require(x > -1.0, "lhs_binomial_shifted: requires x > -1");
  detail::require(p > 0.0, "lhs_binomial_shifted: requires p > 0");
  detail::require(m >= 0, "lhs_binomial_shifted: requires m >= 0");
  if (detail::is_integer(x)) {
    return detail::finite_alt_binom(static_cast<int>(x), [p, m](int k) { return detail::ipow(p + k, -(m + 1)); });
  }
  auto direct = [x, p, m](long long) {
    return [a = 1.0, j = 0LL, x, p, m](long long k) mutable {
      while (j < k) {
        ++j;
        a *= (j - 1 - x) / static_cast<double>(j);
      }
      return a * detail::ipow(p + static_cast<double>(k), -(m + 1));
    };
  };
  auto smooth = [x, p, m](const Jet1& t) { return detail::alt_binom_jet(x, t) * pow(t + p, -(m + 1.0)); };
  return sum_with_em_tail(direct, smooth, 0, cfg);
}

namespace detail {

inline void require_variant3_domain(const char* fn, double p, int n) {
  require(n >= 0, std::string(fn) + ": requires n >= 0");
  require(p > -(n + 1.0), std::string(fn) + ": requires p + n + 1 > 0");
}

}  // namespace detail

/// sum_{k>=1} (-1)^n / (k (p+n+k)^{m+1} binom(n+k,k))
inline SumResult lhs_variant3(double p, int n, int m, const EvalConfig& cfg = {}) {
  detail::require_variant3_domain("lhs_variant3", p, n);
  detail::require(m >= 0, "lhs_variant3: requires m >= 0");
  const double sign = detail::sign_pow(n);
  auto direct = [p, n, m, sign](long long) {
    return [st = detail::HarmonicBinomState(n), p, n, m, sign](long long k) mutable {
      st.advance_to(k);
      return sign * st.inv_binom / (k * detail::ipow(p + n + k, m + 1));
    };
  };
  auto smooth = [p, n, m, sign](const Jet1& t) {
    return reciprocal(t) * detail::inv_binom_jet(n, t) * pow(t + (p + n), -(m + 1.0)) * sign;
  };
  return sum_with_em_tail(direct, smooth, 1, cfg);
}

/// sum_{k>=1} (-1)^n H_{k-1} / (k (p+n+k)^{m+1} binom(n+k,k))
inline SumResult lhs_variant3H(double p, int n, int m, const EvalConfig& cfg = {}) {
  detail::require_variant3_domain("lhs_variant3H", p, n);
  detail::require(m >= 0, "lhs_variant3H: requires m >= 0");
  const double sign = detail::sign_pow(n);
  auto direct = [p, n, m, sign](long long) {
    return [st = detail::HarmonicBinomState(n), p, n, m, sign](long long k) mutable {
      const double h_prev = st.h1.value();
      st.advance_to(k);
      return sign * h_prev * st.inv_binom / (k * detail::ipow(p + n + k, m + 1));
    };
  };
  auto smooth = [p, n, m, sign](const Jet1& t) {
    return detail::harmonic_jet(t - 1.0) * reciprocal(t) * detail::inv_binom_jet(n, t) *
           pow(t + (p + n), -(m + 1.0)) * sign;
  };
  return sum_with_em_tail(direct, smooth, 1, cfg);
}

/// sum_{k>=1} (H_{k-1}^2 - H_{k-1}^(2)) / (k (p+n+k)^m binom(n+k,k))
inline SumResult lhs_variant4(double p, int n, int m, const EvalConfig& cfg = {}) {
  detail::require_variant3_domain("lhs_variant4", p, n);
  detail::require(m >= 1, "lhs_variant4: diverges unless m >= 1");
  auto direct = [p, n, m](long long) {
    return [st = detail::HarmonicBinomState(n), p, n, m](long long k) mutable {
      const double h = st.h1.value();
      const double h2 = st.h2.value();
      st.advance_to(k);
      return (h * h - h2) * st.inv_binom / (k * detail::ipow(p + n + k, m));
    };
  };
  auto smooth = [p, n, m](const Jet1& t) {
    const Jet1 s = t - 1.0;
    const Jet1 h = detail::harmonic_jet(s);
    return (h * h - detail::gen_harmonic_jet(2, s)) * reciprocal(t) * detail::inv_binom_jet(n, t) *
           pow(t + (p + n), -static_cast<double>(m));
  };
  return sum_with_em_tail(direct, smooth, 1, cfg);
}

/// sum_{k>=0} (H_k - 2 H_{2k}) binom(2k,k) / (4^k (p+k)^{m+1})
inline SumResult lhs_central_binom(double p, int m, const EvalConfig& cfg = {}) {
  detail::require(p > 0.0, "lhs_central_binom: requires p > 0");
  detail::require(m >= 0, "lhs_central_binom: requires m >= 0");
  auto direct = [p, m](long long K) {
    auto cache = std::make_shared<HarmonicCache>(static_cast<std::size_t>(2 * K));
    return [cache, cb = 1.0, j = 0LL, p, m](long long k) mutable {
      while (j < k) {
        ++j;
        cb *= (2.0 * j - 1.0) / (2.0 * j);
      }
      const auto kk = static_cast<std::size_t>(k);
      return (cache->h1(kk) - 2.0 * cache->h1(2 * kk)) * cb / detail::ipow(p + k, m + 1);
    };
  };
  auto smooth = [p, m](const Jet1& t) {
    const Jet1 central = exp(ln_gamma_ratio(t, 0.5, 1.0)) / kSqrtPi;
    return (detail::harmonic_jet(t) - 2.0 * detail::harmonic_jet(2.0 * t)) * central * pow(t + p, -(m + 1.0));
  };
  return sum_with_em_tail(direct, smooth, 1, cfg);
}

/// S(p,q) = sum_{n>=1} H_n^(p) / n^q
inline SumResult lhs_linear_euler(int p, int q, const EvalConfig& cfg = {}) {
  detail::require(p >= 1, "lhs_linear_euler: requires p >= 1");
  detail::require(q >= 2, "lhs_linear_euler: requires q >= 2");
  auto direct = [p, q](long long) {
    return [h = CompensatedSum(), j = 0LL, p, q](long long k) mutable {
      while (j < k) {
        ++j;
        h.add(detail::ipow(static_cast<double>(j), -p));
      }
      return h.value() * detail::ipow(static_cast<double>(k), -q);
    };
  };
  auto smooth = [p, q](const Jet1& t) { return detail::gen_harmonic_jet(p, t) * pow(t, -static_cast<double>(q)); };
  return sum_with_em_tail(direct, smooth, 1, cfg);
}

/// S(1^2; q) = sum_{n>=1} H_n^2 / n^q
inline SumResult lhs_quadratic_euler(int q, const EvalConfig& cfg = {}) {
  detail::require(q >= 2, "lhs_quadratic_euler: requires q >= 2");
  auto direct = [q](long long) {
    return [st = detail::HarmonicBinomState(0), q](long long k) mutable {
      st.advance_to(k);
      const double h = st.h1.value();
      return h * h * detail::ipow(static_cast<double>(k), -q);
    };
  };
  auto smooth = [q](const Jet1& t) {
    const Jet1 h = detail::harmonic_jet(t);
    return h * h * pow(t, -static_cast<double>(q));
  };
  return sum_with_em_tail(direct, smooth, 1, cfg);
}

/// sum_{j>=2} (zeta(m+j) - 1), each bracket evaluated as zeta(m+j, 2).
inline SumResult lhs_goldbach(int m, const EvalConfig& cfg = {}) {
  detail::require(m >= 0, "lhs_goldbach: requires m >= 0");
  return sum_adaptive([m](long long j) { return hurwitz_zeta(static_cast<double>(m + j), 2.0); }, cfg, 2);
}

/// sum_{k>=1} p / (k (p+k))
inline SumResult lhs_psi_series(double p, const EvalConfig& cfg = {}) {
  detail::require(p > -1.0, "lhs_psi_series: requires p > -1");
  auto direct = [p](long long) { return [p](long long k) { return p / (k * (p + k)); }; };
  auto smooth = [p](const Jet1& t) { return reciprocal(t) * reciprocal(t + p) * p; };
  return sum_with_em_tail(direct, smooth, 1, cfg);
}

/// sum_{j>=0} p^j zeta(m+j+2, p+1)
inline SumResult lhs_zeta_power_series(double p, int m, const EvalConfig& cfg = {}) {
  detail::require(p > 0.0, "lhs_zeta_power_series: requires p > 0");
  detail::require(m >= 0, "lhs_zeta_power_series: requires m >= 0");
  return sum_adaptive(
      [p, m](long long j) { return std::pow(p, static_cast<double>(j)) * hurwitz_zeta(m + j + 2.0, p + 1.0); },
      cfg, 0);
}

}  // namespace eulersums
