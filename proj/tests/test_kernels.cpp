#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rzt/kernels.hpp"
#include "rzt/numerics.hpp"

using namespace rzt;

namespace {

constexpr double kEuler = 0.57721566490153286061;

GridSpec default_1d() { return GridSpec(1, 4096, 40.0); }

Field gaussian(const GridSpec& spec) { // e^{-x^2} (or e^{-|x|^2})
  return sample(spec, [](std::span<const double> x) {
    double r2 = 0.0;
    for (double c : x) r2 += c * c;
    return Complex(std::exp(-r2), 0.0);
  });
}

Field odd_gaussian(const GridSpec& spec) { // x e^{-x^2}
  return sample(spec, [](std::span<const double> x) {
    return Complex(x[0] * std::exp(-x[0] * x[0]), 0.0);
  });
}

// Sharp-ball oracle for <|x|^{-3/2}, e^{-x^2}> per the explicit continuation
// formula with m = 0: Taylor-subtracted quadrature inside |x| < 1, direct
// outside, plus the rational correction 2 phi(0)/(alpha + 1).
double oracle_abs_power_m0(double alpha) {
  const double inner = 2.0 * integrate_de(
      [&](double x) { return std::pow(x, alpha) * (std::exp(-x * x) - 1.0); }, 0.0, 1.0);
  const double outer = 2.0 * integrate_graded(
      [&](double x) { return std::pow(x, alpha) * std::exp(-x * x); }, 1.0, 9.0, 20, 32);
  return inner + outer + 2.0 / (alpha + 1.0);
}

// Oracle for the principal value at s = 0: regularized quadrature.
double oracle_pv0() {
  const double inner = 2.0 * integrate_de(
      [](double x) { return (std::exp(-x * x) - 1.0) / x; }, 0.0, 1.0);
  const double outer = 2.0 * integrate_graded(
      [](double x) { return std::exp(-x * x) / x; }, 1.0, 9.0, 20, 32);
  return inner + outer;
}

// One-sided oracle per the x_+^alpha definition with m = 1.
double oracle_xplus_m1(double alpha) {
  const double inner = integrate_de(
      [&](double x) { return std::pow(x, alpha) * (std::exp(-x * x) - 1.0); }, 0.0, 1.0);
  const double outer = integrate_graded(
      [&](double x) { return std::pow(x, alpha) * std::exp(-x * x); }, 1.0, 9.0, 20, 32);
  return inner + outer + 1.0 / (alpha + 1.0);
}

} // namespace

TEST_CASE("pointwise kernel values") {
  const double x4[1] = {4.0};
  auto v = riesz_kernel_eval(1, ComplexDegree(0.5), x4);
  REQUIRE(v.kind == KernelValue::Kind::Pointwise);
  CHECK(std::abs(v.value - 1.0 / (2.0 * std::sqrt(2.0 * M_PI))) < 1e-14);

  const double xe[1] = {std::exp(1.0)};
  auto lg = riesz_kernel_eval(1, ComplexDegree(1.0), xe);
  CHECK(std::abs(lg.value - (-1.0 / M_PI)) < 1e-14);

  const double x2[2] = {1.0, 1.0};
  CHECK(riesz_kernel_eval(2, ComplexDegree(-4.0), x2).kind ==
        KernelValue::Kind::NotPointwise);

  const double x0[1] = {0.0};
  CHECK_THROWS_AS(riesz_kernel_eval(1, ComplexDegree(0.5), x0), SingularPointError);
}

TEST_CASE("multi-Riesz kernel products") {
  const double x[2] = {4.0, 4.0};
  MultiIndexDegree half2{{0.5, 0.5}};
  auto v = multi_riesz_kernel_eval(half2, x);
  const double k = 1.0 / (2.0 * std::sqrt(2.0 * M_PI));
  CHECK(std::abs(v.value - k * k) < 1e-14);

  const double y[2] = {std::exp(1.0), 4.0};
  MultiIndexDegree mixed{{1.0, 0.5}};
  CHECK(std::abs(multi_riesz_kernel_eval(mixed, y).value - (-1.0 / M_PI) * k) < 1e-14);

  MultiIndexDegree withdelta{{-2.0, 0.5}};
  CHECK(multi_riesz_kernel_eval(withdelta, x).kind == KernelValue::Kind::NotPointwise);

  const double z[2] = {0.0, 1.0};
  CHECK_THROWS_AS(multi_riesz_kernel_eval(half2, z), SingularPointError);
}

TEST_CASE("homogeneity defect") {
  std::vector<std::array<double, 3>> pts = {
      {1.0, 0, 0}, {0.5, 0, 0}, {2.5, 0, 0}, {-1.7, 0, 0}};
  // Exact power law.
  CHECK(homogeneity_defect(1, ComplexDegree(0.5), 3.0, pts) < 1e-12);
  CHECK(homogeneity_defect(1, ComplexDegree(0.5), 10.0, pts) < 1e-12);
  // Log kernel with the -t^{2s} log t correction.
  CHECK(homogeneity_defect(1, ComplexDegree(1.0), 2.0, pts) < 1e-12);
  CHECK(homogeneity_defect(1, ComplexDegree(3.0), 2.0, pts) < 1e-12);
  // t = 1 is the identity for everything.
  CHECK(homogeneity_defect(1, ComplexDegree(-0.3), 1.0, pts) == 0.0);

  std::vector<std::array<double, 3>> pts2 = {{1.0, 2.0, 0}, {0.7, -1.1, 0}};
  MultiIndexDegree mixed{{1.0, 0.5}}; // log branch times regular branch
  CHECK(homogeneity_defect(mixed, 2.0, pts2) < 1e-12);
}

TEST_CASE("pair_abs_power: direct and continued values") {
  Field phi = gaussian(default_1d());

  // <|x|^0, e^{-x^2}> = sqrt(pi).
  CHECK(std::abs(pair_abs_power(1, Complex(0.0), phi) - std::sqrt(M_PI)) < 1e-10);

  // <|x|^s, e^{-x^2}> = Gamma((s+1)/2) continues to s = -3/2: Gamma(-1/4).
  const double expect = -4.901666809860711;
  const Complex got = pair_abs_power(1, Complex(-1.5), phi);
  CHECK(std::abs(got - expect) < 1e-8);
  CHECK(std::abs(got - oracle_abs_power_m0(-1.5)) < 1e-8);

  // Positive non-integer exponent: Gamma(1.35) at s = 1.7... check s = 0.7.
  CHECK(std::abs(pair_abs_power(1, Complex(0.7), phi) - std::tgamma(0.85)) < 1e-9);

  // Linearity: zero field pairs to zero.
  Field zero(default_1d());
  CHECK(std::abs(pair_abs_power(1, Complex(-1.5), zero)) == 0.0);

  // Lattice guard.
  CHECK_THROWS_AS(pair_abs_power(1, Complex(-1.0), phi), LatticeError);
  CHECK_THROWS_AS(pair_abs_power(1, Complex(-3.0), phi), LatticeError);
}

TEST_CASE("pair_abs_power in two dimensions") {
  // Accuracy in n >= 2 is limited by the cutoff's trapezoid aliasing on the
  // coarser default grids (~1e-5); the 1e-8-class pairings are all 1-D.
  GridSpec spec(2, 256, 12.0);
  Field phi = gaussian(spec);
  // <|x|^s, e^{-|x|^2}>_{R^2} = pi Gamma((s+2)/2) ... at s=0: pi.
  CHECK(std::abs(pair_abs_power(2, Complex(0.0), phi) - M_PI) < 5e-5);
  // s = -1: <|x|^{-1}, e^{-|x|^2}> = pi Gamma(1/2) = pi^{3/2}.
  CHECK(std::abs(pair_abs_power(2, Complex(-1.0), phi) - std::pow(M_PI, 1.5)) < 5e-5);
}

TEST_CASE("pair_abs_power_pv against oracles") {
  Field phi = gaussian(default_1d());
  // s = 0: the regularized value is -euler_gamma.
  const Complex pv0 = pair_abs_power_pv(1, 0, phi);
  CHECK(std::abs(pv0 - (-kEuler)) < 1e-7);
  CHECK(std::abs(pv0 - oracle_pv0()) < 1e-7);

  // s = 1: limit of Gamma((s+1)/2) + 2/(s+3) as s -> -3 is euler_gamma - 1.
  CHECK(std::abs(pair_abs_power_pv(1, 1, phi) - (kEuler - 1.0)) < 1e-6);

  // P(|x|^{-1}) is even, so it pairs to zero with odd fields.
  Field odd = odd_gaussian(default_1d());
  CHECK(std::abs(pair_abs_power_pv(1, 0, odd)) < 1e-10);

  Field zero(default_1d());
  CHECK(std::abs(pair_abs_power_pv(1, 0, zero)) == 0.0);
}

TEST_CASE("pair_xpm_power") {
  Field phi = gaussian(default_1d());

  // alpha = 0, plus side: half Gaussian integral.
  CHECK(std::abs(pair_xpm_power(Side::Plus, Complex(0.0), phi) - 0.5 * std::sqrt(M_PI)) <
        1e-10);

  // Even phi: minus side equals plus side.
  const Complex p = pair_xpm_power(Side::Plus, Complex(0.5), phi);
  const Complex m = pair_xpm_power(Side::Minus, Complex(0.5), phi);
  CHECK(std::abs(p - m) < 1e-11);

  // alpha = -3/2 against the m = 1 oracle; closed form Gamma(-1/4)/2.
  const Complex v = pair_xpm_power(Side::Plus, Complex(-1.5), phi);
  CHECK(std::abs(v - oracle_xplus_m1(-1.5)) < 1e-8);
  CHECK(std::abs(v - (-4.901666809860711 / 2.0)) < 1e-8);

  // Negative integers are the lattice of the one-sided powers.
  CHECK_THROWS_AS(pair_xpm_power(Side::Plus, Complex(-1.0), phi), LatticeError);

  // |x|^alpha = x_+^alpha + x_-^alpha against pair_abs_power.
  const Complex both = pair_abs_power(1, Complex(-1.5), phi);
  CHECK(std::abs(p + m - pair_abs_power(1, Complex(0.5), phi)) < 1e-10);
  CHECK(std::abs(2.0 * v - both) < 1e-8);
}

TEST_CASE("pair_log_weight and the kernel pairing branches") {
  Field phi = gaussian(default_1d());
  // <log|x|, e^{-x^2}> = -sqrt(pi)(euler + 2 log 2)/2.
  const double expect = -0.5 * std::sqrt(M_PI) * (kEuler + 2.0 * std::log(2.0));
  CHECK(std::abs(pair_log_weight(1, 0, phi) - expect) < 1e-10);

  // kappa_1 pairing: -<log|x|, phi>/pi.
  CHECK(std::abs(pair_riesz_kernel(1, ComplexDegree(1.0), phi) - (-expect / M_PI)) < 1e-10);

  // Regular branch: kappa_{1/2} = |x|^{-1/2}/sqrt(2 pi), and
  // <|x|^{-1/2}, e^{-x^2}> = Gamma(1/4).
  const Complex reg = pair_riesz_kernel(1, ComplexDegree(0.5), phi);
  CHECK(std::abs(reg - std::tgamma(0.25) / std::sqrt(2.0 * M_PI)) < 1e-9);

  // Delta branch: kappa_0 = delta, pairing = phi(0) = 1; kappa_{-2} = -phi''(0)... = 2.
  CHECK(std::abs(pair_riesz_kernel(1, ComplexDegree(0.0), phi) - 1.0) < 1e-10);
  CHECK(std::abs(pair_riesz_kernel(1, ComplexDegree(-2.0), phi) - 2.0) < 1e-8);
}

TEST_CASE("pv reciprocal pairing") {
  Field odd = odd_gaussian(default_1d());
  // <P(1/x), x e^{-x^2}> = 2 int_0^inf e^{-x^2} = sqrt(pi).
  CHECK(std::abs(pair_pv_reciprocal(odd) - std::sqrt(M_PI)) < 1e-10);
  // Even fields pair to zero.
  Field even = gaussian(default_1d());
  CHECK(std::abs(pair_pv_reciprocal(even)) < 1e-12);
}

TEST_CASE("branch consistency near the log lattice") {
  // [<kappa_alpha, phi> - <|x|^{2s}, phi>/gamma_n(alpha)] -> <kappa_{n+2s}, phi>
  // as alpha -> n + 2s; the divergence lives in the subtracted pole term.
  Field phi = gaussian(default_1d());
  const Complex target = pair_riesz_kernel(1, ComplexDegree(1.0), phi);
  const Complex mass = pair_abs_power(1, Complex(0.0), phi); // <|x|^0, phi>
  auto regularized = [&](double delta) {
    const Complex g = riesz_normalizer(1, ComplexDegree(1.0 + delta)).value;
    return pair_abs_power(1, Complex(delta), phi) / g - mass / g;
  };
  const double err_coarse = std::abs(regularized(1e-2) - target);
  const double err_fine = std::abs(regularized(1e-4) - target);
  CHECK(err_fine < err_coarse);
  CHECK(err_fine < 1e-4);
}

TEST_CASE("parity: even kernels annihilate odd fields") {
  Field odd = odd_gaussian(default_1d());
  CHECK(std::abs(pair_abs_power(1, Complex(-0.5), odd)) < 1e-10);
  CHECK(std::abs(pair_log_weight(1, 0, odd)) < 1e-10);
}
