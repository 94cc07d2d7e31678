#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "rzt/numerics.hpp"
#include "rzt/special.hpp"

using namespace rzt;

namespace {

// Independent oracle: recurrence shift to Re z >= 30, then the Stirling
// series with Bernoulli numbers. No shared code with the Lanczos path.
Complex stirling_gamma(Complex z) {
  Complex prod = 1.0;
  while (z.real() < 30.0) {
    prod *= z;
    z += 1.0;
  }
  static const double bern[] = {1.0 / 6,  -1.0 / 30,     1.0 / 42, -1.0 / 30,
                                5.0 / 66, -691.0 / 2730, 7.0 / 6,  -3617.0 / 510};
  Complex lg = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * M_PI);
  Complex zpow = z;
  for (int n = 0; n < 8; ++n) {
    const double d = (2.0 * n + 2.0) * (2.0 * n + 1.0);
    lg += bern[n] / (d * zpow);
    zpow *= z * z;
  }
  return std::exp(lg) / prod;
}

// Independent oracle: K_nu(z) = integral_0^inf e^{-z cosh t} cosh(nu t) dt.
double bessel_k_quadrature(int nu, double z) {
  const double tmax = std::acosh(800.0 / z + 1.0);
  return integrate_graded(
      [&](double t) { return std::exp(-z * std::cosh(t)) * std::cosh(nu * t); },
      0.0, tmax, 28, 32);
}

} // namespace

TEST_CASE("gamma at known points") {
  CHECK(std::abs(gamma(Complex(0.5, 0.0)) - std::sqrt(M_PI)) < 1e-14);
  CHECK(std::abs(gamma(Complex(5.0, 0.0)) - 24.0) < 1e-12);
  CHECK(std::abs(gamma(Complex(1.0, 0.0)) - 1.0) < 1e-14);
  // |Gamma(1+i)| = sqrt(pi / sinh(pi)).
  const double expect = std::sqrt(M_PI / std::sinh(M_PI));
  CHECK(std::abs(std::abs(gamma(Complex(1.0, 1.0))) - expect) < 1e-13);
}

TEST_CASE("gamma against the series oracle") {
  const Complex pts[] = {{1.0, 1.0}, {0.7, -2.3}, {5.5, 3.0}, {-2.5, 0.4},
                         {12.0, -7.0}, {0.1, 0.0}, {-7.3, 0.0}, {3.0, 25.0}};
  for (Complex z : pts) {
    const Complex ref =
        z.real() >= 0.5
            ? stirling_gamma(z)
            : M_PI / (std::sin(M_PI * z) * stirling_gamma(Complex(1.0) - z));
    CHECK(std::abs(gamma(z) - ref) / std::abs(ref) < 1e-12);
  }
}

TEST_CASE("gamma pole error carries the integer") {
  CHECK_THROWS_AS(gamma(Complex(0.0, 0.0)), GammaPoleError);
  try {
    gamma(Complex(-3.0, 0.0));
    FAIL("expected pole");
  } catch (const GammaPoleError& e) {
    CHECK(e.pole() == -3);
  }
  // Just off the pole is fine.
  CHECK(std::isfinite(std::abs(gamma(Complex(-3.0 + 1e-6, 0.0)))));
}

TEST_CASE("reflection identity on random strip points") {
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> re(-10.0, 10.0), im(-10.0, 10.0);
  int tested = 0;
  while (tested < 200) {
    Complex z(re(rng), im(rng));
    if (std::abs(z.real() - std::round(z.real())) < 0.1 && std::abs(z.imag()) < 0.1)
      continue;
    const Complex lhs = gamma(z) * gamma(Complex(1.0) - z) * std::sin(M_PI * z) / M_PI;
    CHECK(std::abs(lhs - 1.0) < 1e-11);
    ++tested;
  }
}

TEST_CASE("recurrence gamma(z+1) = z gamma(z)") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> re(0.5, 20.0), im(-10.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    Complex z(re(rng), im(rng));
    const Complex lhs = gamma(z + 1.0);
    const Complex rhs = z * gamma(z);
    CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-12);
  }
}

TEST_CASE("riesz normalizer branches") {
  // gamma_1(1/2) = sqrt(2 pi): the Gamma(1/4) factors cancel.
  auto v = riesz_normalizer(1, ComplexDegree(0.5));
  REQUIRE(v.kind == NormalizerKind::Regular);
  CHECK(std::abs(v.value - std::sqrt(2.0 * M_PI)) < 1e-12);

  // n=1, alpha=1: log kernel with constant pi (s = 0).
  auto lk = riesz_normalizer(1, ComplexDegree(1.0));
  REQUIRE(lk.kind == NormalizerKind::LogKernel);
  CHECK(lk.s == 0);
  CHECK(std::abs(lk.value - M_PI) < 1e-14);

  // n=2, alpha=-2: delta kernel with s = 1.
  auto dk = riesz_normalizer(2, ComplexDegree(-2.0));
  REQUIRE(dk.kind == NormalizerKind::DeltaKernel);
  CHECK(dk.s == 1);

  // alpha = 0 sits on the delta lattice with s = 0.
  CHECK(riesz_normalizer(1, ComplexDegree(0.0)).kind == NormalizerKind::DeltaKernel);
}

TEST_CASE("lattice classification tolerance") {
  CHECK(riesz_normalizer(1, ComplexDegree(1.0 + 1e-13)).kind == NormalizerKind::LogKernel);
  CHECK(riesz_normalizer(1, ComplexDegree(1.0 + 1e-9)).kind == NormalizerKind::Regular);
  // Complex degrees never classify as exceptional.
  CHECK(riesz_normalizer(1, ComplexDegree(Complex(1.0, 1e-15))).kind ==
        NormalizerKind::Regular);
}

TEST_CASE("log kernel constant matches the n=1 closed form") {
  // gamma_1(1+2s) = (-1)^s pi (2s)! ... via 2^{2s} s! Gamma(1/2+s) = sqrt(pi)(2s)!.
  for (int s = 0; s <= 3; ++s) {
    double fact2s = 1.0;
    for (int k = 2; k <= 2 * s; ++k) fact2s *= k;
    const double expect = ((s % 2 == 0) ? 1.0 : -1.0) * M_PI * fact2s;
    CHECK(std::abs(log_kernel_constant(1, s) - expect) / std::abs(expect) < 1e-14);
  }
}

TEST_CASE("bessel K against the quadrature oracle") {
  for (double z : {0.1, 0.5, 1.0, 3.0, 7.9, 8.1, 12.0, 25.0}) {
    const double k0 = bessel_k0(z);
    const double k1 = bessel_k1(z);
    CHECK(std::abs(k0 - bessel_k_quadrature(0, z)) / k0 < 1e-6);
    CHECK(std::abs(k1 - bessel_k_quadrature(1, z)) / k1 < 1e-6);
  }
}

TEST_CASE("K1 minus pole is stable near zero") {
  CHECK(std::abs(bessel_k1_minus_pole(0.5) - (bessel_k1(0.5) - 2.0)) < 1e-14);
  // K1(z) - 1/z = (z/2)(log(z/2) - 1/2 + euler_gamma) + O(z^3 log z).
  const double z = 1e-4;
  const double expect = 0.5 * z * (std::log(0.5 * z) - 0.5 + 0.57721566490153286);
  CHECK(std::abs(bessel_k1_minus_pole(z) - expect) < 1e-10);
}
