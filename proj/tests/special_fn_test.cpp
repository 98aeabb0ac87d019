#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "eulersums/special_fn.hpp"
#include "reference_values.hpp"

namespace es = eulersums;

namespace {

double rel_err(double got, double want) {
  return want == 0.0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
}

#define EXPECT_REL(got, want, tol) EXPECT_LE(rel_err((got), (want)), (tol)) << "got " << (got) << " want " << (want)

}  // namespace

TEST(LnGamma, Examples) {
  EXPECT_EQ(es::ln_gamma(1.0), 0.0);
  EXPECT_REL(es::ln_gamma(0.5), std::log(std::sqrt(es::kPi)), 1e-13);
  EXPECT_REL(es::ln_gamma(10.0), std::log(362880.0), 1e-13);
}

TEST(LnGamma, Reference) {
  for (const auto& r : ref::kLnGamma) {
    if (r.value == 0.0) {
      EXPECT_NEAR(es::ln_gamma(r.x), 0.0, 1e-15);
    } else {
      EXPECT_REL(es::ln_gamma(r.x), r.value, 1e-13) << "x=" << r.x;
    }
  }
}

TEST(LnGamma, DomainErrors) {
  EXPECT_THROW(es::ln_gamma(0.0), es::DomainError);
  EXPECT_THROW(es::ln_gamma(-2.5), es::DomainError);
}

TEST(Gamma, Examples) {
  EXPECT_REL(es::gamma(-0.5), -2.0 * es::kSqrtPi, 1e-14);
  EXPECT_REL(es::gamma(5.0), 24.0, 1e-14);
}

TEST(Gamma, HalfIntegerNegative) {
  // Gamma(1/2 - k) = sqrt(pi) (-1)^k 4^k k! / (2k)!
  for (int k = 0; k <= 8; ++k) {
    const double want = es::kSqrtPi * (k % 2 ? -1.0 : 1.0) * std::ldexp(1.0, 2 * k) * es::detail::factorial(k) /
                        es::detail::factorial(2 * k);
    EXPECT_REL(es::gamma(0.5 - k), want, 1e-13) << "k=" << k;
  }
}

TEST(Gamma, Reference) {
  for (const auto& r : ref::kGamma) EXPECT_REL(es::gamma(r.x), r.value, 1e-13) << "x=" << r.x;
}

TEST(Gamma, Poles) {
  for (double x : {0.0, -1.0, -7.0}) EXPECT_THROW(es::gamma(x), es::PoleError);
}

TEST(Gamma, Reflection) {
  for (double z : {0.1, 0.25, 0.5, 0.75, 1.3}) {
    EXPECT_REL(es::gamma(z) * es::gamma(1.0 - z) * std::sin(es::kPi * z), es::kPi, 1e-12) << "z=" << z;
  }
}

TEST(Digamma, Examples) {
  EXPECT_REL(es::digamma(1.0), -es::kEulerGamma, 1e-14);
  EXPECT_REL(es::digamma(6.0), 137.0 / 60.0 - es::kEulerGamma, 1e-14);
  const double psi_half = -es::kEulerGamma - 2.0 * es::kLn2;
  EXPECT_REL(es::digamma(0.5), psi_half, 1e-14);
  EXPECT_REL(es::digamma(3.5), psi_half + 2.0 * es::harmonic(6) - es::harmonic(3), 1e-14);
}

TEST(Digamma, Reference) {
  for (const auto& r : ref::kDigamma) EXPECT_REL(es::digamma(r.x), r.value, 1e-12) << "x=" << r.x;
}

TEST(Digamma, Poles) {
  for (double x : {0.0, -1.0, -3.0}) EXPECT_THROW(es::digamma(x), es::PoleError);
}

TEST(Digamma, Shift) {
  for (double z : {0.3, 1.7, 4.2, 0.01}) {
    double s = 0.0;
    for (int m = 1; m <= 20; ++m) {
      s += 1.0 / (z + m - 1);
      EXPECT_NEAR(es::digamma(z + m) - es::digamma(z), s, 1e-12 * std::max(1.0, s)) << "z=" << z << " m=" << m;
    }
  }
}

TEST(Digamma, HalfInteger) {
  const double psi_half = es::digamma(0.5);
  for (int k = 0; k <= 8; ++k) {
    const double want = es::harmonic(k) - 2.0 * es::harmonic(2 * k);
    EXPECT_NEAR(psi_half - es::digamma(0.5 - k), want, 1e-11) << "k=" << k;
    EXPECT_NEAR(psi_half - es::digamma(0.5 + k), want, 1e-11) << "k=" << k;
  }
}

TEST(Polygamma, Examples) {
  EXPECT_REL(es::polygamma(1, 1.0), es::kZeta2, 1e-13);
  EXPECT_REL(es::polygamma(2, 1.0), -2.0 * es::kZeta3, 1e-13);
  EXPECT_REL(es::polygamma(1, 2.0), es::kZeta2 - 1.0, 1e-13);
}

TEST(Polygamma, Reference) {
  for (const auto& r : ref::kPolygamma) {
    EXPECT_REL(es::polygamma(r.k, r.x), r.value, 1e-11) << "k=" << r.k << " x=" << r.x;
  }
}

TEST(Polygamma, MatchesHurwitz) {
  for (int k = 1; k <= 6; ++k) {
    for (double x : {0.2, 1.0, 3.3, 17.0}) {
      const double want = (k % 2 ? 1.0 : -1.0) * es::detail::factorial(k) * es::hurwitz_zeta(k + 1.0, x);
      EXPECT_REL(es::polygamma(k, x), want, 1e-11) << "k=" << k << " x=" << x;
    }
  }
}

TEST(Polygamma, Recurrence) {
  for (int k = 0; k <= 6; ++k) {
    for (double z : {0.3, 1.7, 4.2}) {
      const double want = (k % 2 ? -1.0 : 1.0) * es::detail::factorial(k) / std::pow(z, k + 1);
      EXPECT_REL(es::polygamma(k, z + 1.0) - es::polygamma(k, z), want, 1e-11) << "k=" << k << " z=" << z;
    }
  }
}

TEST(Polygamma, Shift) {
  // psi^(k)(z+m) - psi^(k)(z) = (-1)^k k! sum_{j<m} 1/(z+j)^{k+1}
  for (int k = 1; k <= 4; ++k) {
    for (double z : {0.3, 2.5}) {
      for (int m : {1, 5, 20}) {
        double s = 0.0;
        for (int j = 0; j < m; ++j) s += std::pow(z + j, -(k + 1));
        s *= (k % 2 ? -1.0 : 1.0) * es::detail::factorial(k);
        EXPECT_REL(es::polygamma(k, z + m) - es::polygamma(k, z), s, 1e-11);
      }
    }
  }
}

TEST(Polygamma, Errors) {
  EXPECT_THROW(es::polygamma(-1, 1.0), es::DomainError);
  EXPECT_THROW(es::polygamma(2, -2.0), es::PoleError);
}

TEST(Zeta, Riemann) {
  EXPECT_REL(es::riemann_zeta(2.0), es::kPi * es::kPi / 6.0, 1e-15);
  EXPECT_REL(es::riemann_zeta(4.0), std::pow(es::kPi, 4) / 90.0, 1e-15);
  EXPECT_REL(es::riemann_zeta(3.0), 1.2020569031595942, 1e-13);
  EXPECT_REL(es::riemann_zeta(5.0), es::hurwitz_zeta(5.0, 1.0), 1e-13);
  EXPECT_THROW(es::riemann_zeta(1.0), es::DomainError);
}

TEST(Zeta, HurwitzExamples) {
  EXPECT_REL(es::hurwitz_zeta(2.0, 1.0), es::kZeta2, 1e-12);
  EXPECT_REL(es::hurwitz_zeta(2.0, 2.0), es::kZeta2 - 1.0, 1e-12);
  EXPECT_REL(es::hurwitz_zeta(3.0, 0.5), 7.0 * es::kZeta3, 1e-12);
}

TEST(Zeta, HurwitzReference) {
  for (const auto& r : ref::kHurwitz) {
    EXPECT_REL(es::hurwitz_zeta(r.s, r.a), r.value, 1e-12) << "s=" << r.s << " a=" << r.a;
  }
}

TEST(Zeta, HurwitzErrors) {
  EXPECT_THROW(es::hurwitz_zeta(1.0, 1.0), es::DomainError);
  EXPECT_THROW(es::hurwitz_zeta(2.0, 0.0), es::DomainError);
}

TEST(Harmonic, Examples) {
  for (int m = 1; m <= 4; ++m) EXPECT_EQ(es::gen_harmonic(0, m), 0.0);
  EXPECT_REL(es::harmonic(4), 25.0 / 12.0, 1e-15);
  EXPECT_REL(es::gen_harmonic(3, 2), 49.0 / 36.0, 1e-15);
}

TEST(Harmonic, BridgeToPsi) {
  for (int n = 0; n <= 100; ++n) {
    EXPECT_NEAR(es::harmonic(n), es::kEulerGamma + es::digamma(n + 1.0), 1e-12) << "n=" << n;
    for (int m = 1; m <= 4; ++m) {
      const double want = es::riemann_zeta(m + 1.0) +
                          (m % 2 ? -1.0 : 1.0) / es::detail::factorial(m) * es::polygamma(m, n + 1.0);
      EXPECT_NEAR(es::gen_harmonic(n, m + 1), want, 1e-11) << "n=" << n << " m=" << m;
    }
  }
}

TEST(Harmonic, Cache) {
  const es::HarmonicCache h(50);
  EXPECT_EQ(h.n_max(), 50u);
  EXPECT_EQ(h.h1(0), 0.0);
  EXPECT_EQ(h.h2(0), 0.0);
  EXPECT_EQ(h.h3(0), 0.0);
  for (std::size_t n = 1; n <= 50; ++n) {
    const double k = static_cast<double>(n);
    EXPECT_GT(h.h1(n), h.h1(n - 1));
    EXPECT_NEAR(h.h1(n) - h.h1(n - 1), 1.0 / k, 1e-15);
    EXPECT_NEAR(h.h2(n) - h.h2(n - 1), 1.0 / (k * k), 1e-15);
    EXPECT_NEAR(h.h3(n) - h.h3(n - 1), 1.0 / (k * k * k), 1e-15);
    EXPECT_EQ(h(1, n), h.h1(n));
    EXPECT_NEAR(h.h2(n), es::gen_harmonic(static_cast<long long>(n), 2), 1e-15);
  }
}

TEST(Harmonic, Extended) {
  EXPECT_REL(es::extended_harmonic(3.0, 1), 11.0 / 6.0, 1e-14);
  EXPECT_REL(es::extended_harmonic(0.5, 1), 2.0 - 2.0 * es::kLn2, 1e-13);
  EXPECT_REL(es::extended_harmonic(2.0, 2), 1.25, 1e-13);
  EXPECT_THROW(es::extended_harmonic(-1.0, 1), es::PoleError);
  EXPECT_THROW(es::extended_harmonic(-3.0, 2), es::PoleError);
}

TEST(Binomial, Examples) {
  for (int k = 0; k <= 30; ++k) EXPECT_EQ(es::gen_binom(k, k), 1.0);
  EXPECT_REL(es::gen_binom(0.5, 2.0), -0.125, 1e-14);
  EXPECT_EQ(es::gen_binom(5.0, 2.0), 10.0);
  EXPECT_EQ(es::gen_binom(3.0, 5.0), 0.0);
  EXPECT_EQ(es::gen_binom(2.0, -1.0), 0.0);
  EXPECT_THROW(es::gen_binom(-1.0, 0.5), es::PoleError);
}

TEST(Binomial, LargeArguments) {
  // binom(200.5, 3) by direct product
  const double s = 200.5;
  EXPECT_REL(es::gen_binom(s, 3.0), s * (s - 1) * (s - 2) / 6.0, 1e-12);
  EXPECT_REL(es::gen_binom(300.0, 2.0), 44850.0, 1e-14);
}

TEST(Beta, Examples) {
  EXPECT_REL(es::beta(1.0, 1.0), 1.0, 1e-15);
  EXPECT_REL(es::beta(0.5, 0.5), es::kPi, 1e-14);
  EXPECT_REL(es::beta(2.0, 3.0), 1.0 / 12.0, 1e-14);
  EXPECT_THROW(es::beta(0.0, 1.0), es::DomainError);
}

TEST(FallingFactorial, Examples) {
  for (double l : {-2.5, 0.0, 7.0}) EXPECT_EQ(es::falling_factorial(l, 0), 1.0);
  EXPECT_EQ(es::falling_factorial(5.0, 3), 60.0);
  EXPECT_EQ(es::falling_factorial(0.5, 2), -0.25);
}

TEST(LaurentAlpha, Examples) {
  EXPECT_REL(es::laurent_alpha(2, 0), es::kZeta2, 1e-15);
  EXPECT_REL(es::laurent_alpha(3, 0), -es::kZeta3, 1e-15);
  EXPECT_REL(es::laurent_alpha(2, 2), es::kZeta2 + 1.25, 1e-15);
}

TEST(LnGammaRatio, MatchesDifference) {
  for (double a : {0.3, 2.0, 40.0}) {
    for (double b : {0.5, 3.25, 41.5}) {
      EXPECT_NEAR(es::ln_gamma_ratio(a, b), es::ln_gamma(a) - es::ln_gamma(b), 1e-12);
    }
  }
  // Gamma(t)/Gamma(t+1/2) ~ t^{-1/2} for huge t, where t+1/2 rounds to t+1 would lose it.
  const double t = 1e17;
  EXPECT_REL(es::ln_gamma_ratio(t, 0.0, 0.5), -0.5 * std::log(t), 1e-12);
}

// Limits at the poles z = -k, approached along z = -k + eps. The error must
// shrink by about a decade per decade of eps.
namespace {

struct Sweep {
  const char* name;
  double (*f)(double z);
};

double psi_over_gamma(double z) { return es::digamma(z) / es::gamma(z); }
double second_over_gamma(double z) {
  const double p = es::digamma(z);
  return (p * p - es::polygamma(1, z)) / es::gamma(z);
}
double third_over_gamma(double z) {
  const double p = es::digamma(z);
  return (p * p * p - 3.0 * p * es::polygamma(1, z) + es::polygamma(2, z)) / es::gamma(z);
}

double sgn(int k) { return k % 2 ? -1.0 : 1.0; }

}  // namespace

class PoleLimit : public ::testing::TestWithParam<int> {};

TEST_P(PoleLimit, FirstOrderConvergence) {
  const int k = GetParam();
  const double kf = es::detail::factorial(k);
  const std::vector<Sweep> sweeps = {
      {"residue of gamma", nullptr},
      {"psi/gamma", psi_over_gamma},
      {"(psi^2-psi')/gamma", second_over_gamma},
      {"(psi^3-3psi psi'+psi'')/gamma", third_over_gamma},
  };
  const double limits[4] = {
      sgn(k) / kf,
      -sgn(k) * kf,
      -2.0 * sgn(k) * kf * es::digamma(k + 1.0),
      3.0 * sgn(k) * kf * (es::kZeta2 + es::gen_harmonic(k, 2) - std::pow(es::digamma(k + 1.0), 2)),
  };
  for (std::size_t i = 0; i < sweeps.size(); ++i) {
    double err[3];
    int e = 0;
    for (double eps : {1e-3, 1e-4, 1e-5}) {
      const double z = -k + eps;
      const double v = i == 0 ? (z + k) * es::gamma(z) : sweeps[i].f(z);
      err[e++] = std::abs(v - limits[i]);
    }
    SCOPED_TRACE(sweeps[i].name);
    EXPECT_LT(err[2], 1e-3 * std::max(1.0, std::abs(limits[i])));
    for (int j = 0; j < 2; ++j) {
      const double ratio = err[j] / err[j + 1];
      EXPECT_GE(ratio, 5.0) << "k=" << k << " step " << j;
      EXPECT_LE(ratio, 20.0) << "k=" << k << " step " << j;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(K0to4, PoleLimit, ::testing::Range(0, 5));
