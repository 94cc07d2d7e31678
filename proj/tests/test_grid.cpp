#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "rzt/field_io.hpp"
#include "rzt/grid.hpp"

using namespace rzt;

namespace {

Field gaussian_half(const GridSpec& spec) { // e^{-x^2/2}
  return sample(spec, [](std::span<const double> x) {
    double r2 = 0.0;
    for (double c : x) r2 += c * c;
    return Complex(std::exp(-0.5 * r2), 0.0);
  });
}

} // namespace

TEST_CASE("forward transform matches the closed-form Gaussian pair") {
  GridSpec spec(1, 1024, 20.0);
  Field f = gaussian_half(spec);
  SpectralField F = fourier_forward(f);
  // F[e^{-x^2/2}](xi) = sqrt(2 pi) e^{-xi^2/2} under the e^{+i xi x} kernel.
  const double peak = std::sqrt(2.0 * M_PI);
  double worst_rel = 0.0, worst_abs = 0.0;
  for (int m = 0; m < spec.points_per_axis; ++m) {
    const double xi = spec.freq(m);
    const double expect = peak * std::exp(-0.5 * xi * xi);
    const double err = std::abs(F.coeffs[m] - expect);
    if (expect > 1e-4 * peak)
      worst_rel = std::max(worst_rel, err / expect);
    else
      worst_abs = std::max(worst_abs, err);
  }
  CHECK(worst_rel < 1e-10);
  CHECK(worst_abs < 1e-12 * peak);
}

TEST_CASE("forward transform of x e^{-x^2/2} carries the +i xi factor") {
  // Under e^{+i xi x}: F[x e^{-x^2/2}](xi) = +i xi sqrt(2 pi) e^{-xi^2/2}.
  GridSpec spec(1, 1024, 20.0);
  Field f = sample(spec, [](std::span<const double> x) {
    return Complex(x[0] * std::exp(-0.5 * x[0] * x[0]), 0.0);
  });
  SpectralField F = fourier_forward(f);
  double worst = 0.0;
  for (int m = 0; m < spec.points_per_axis; ++m) {
    const double xi = spec.freq(m);
    const Complex expect = Complex(0.0, xi) * std::sqrt(2.0 * M_PI) * std::exp(-0.5 * xi * xi);
    if (std::abs(expect) < 1e-4) continue;
    worst = std::max(worst, std::abs(F.coeffs[m] - expect) / std::abs(expect));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("zero field transforms to zero") {
  GridSpec spec(1, 64, 5.0);
  Field f(spec);
  SpectralField F = fourier_forward(f);
  for (auto c : F.coeffs) CHECK(std::abs(c) == 0.0);
  Field g = fourier_inverse(F);
  for (auto v : g.values) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("round trip is the identity to 1e-12") {
  for (int dim : {1, 2}) {
    GridSpec spec(dim, dim == 1 ? 1024 : 64, 10.0);
    Field f = sample(spec, [](std::span<const double> x) {
      double r2 = 0.0, s = 1.0;
      for (double c : x) {
        r2 += c * c;
        s *= std::cos(1.7 * c) + 0.3;
      }
      return Complex(std::exp(-0.4 * r2) * s, 0.2 * std::sin(r2));
    });
    Field g = fourier_inverse(fourier_forward(f));
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      num += std::norm(f.values[i] - g.values[i]);
      den += std::norm(f.values[i]);
    }
    CHECK(std::sqrt(num / den) < 1e-12);
  }
}

TEST_CASE("inverse of the Gaussian spectrum recovers e^{-x^2/2}") {
  GridSpec spec(1, 1024, 20.0);
  SpectralField F(spec);
  for (int m = 0; m < spec.points_per_axis; ++m) {
    const double xi = spec.freq(m);
    F.coeffs[m] = std::sqrt(2.0 * M_PI) * std::exp(-0.5 * xi * xi);
  }
  Field f = fourier_inverse(F);
  double worst = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double x = spec.node(static_cast<int>(j));
    const double expect = std::exp(-0.5 * x * x);
    if (expect < 1e-4) continue;
    worst = std::max(worst, std::abs(f.values[j] - expect) / expect);
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("Parseval identity at grid level") {
  GridSpec spec(1, 2048, 30.0);
  Field f = gaussian_half(spec);
  SpectralField F = fourier_forward(f);
  double lhs = 0.0;
  for (auto v : f.values) lhs += std::norm(v);
  lhs *= spec.spacing();
  double rhs = 0.0;
  for (auto c : F.coeffs) rhs += std::norm(c);
  rhs *= spec.freq_spacing() / (2.0 * M_PI);
  CHECK(std::abs(lhs - rhs) / lhs < 1e-10);
}

TEST_CASE("real even fields have real coefficients") {
  GridSpec spec(1, 1024, 15.0);
  Field f = sample(spec, [](std::span<const double> x) {
    return Complex(std::exp(-x[0] * x[0]) * std::cos(2.0 * x[0]), 0.0);
  });
  SpectralField F = fourier_forward(f);
  double worst = 0.0;
  for (auto c : F.coeffs) worst = std::max(worst, std::abs(c.imag()));
  CHECK(worst < 1e-12 * f.max_abs() * 2.0 * spec.half_width);
}

TEST_CASE("trig_interpolate agrees with nodes, analytic values, and harmonics") {
  GridSpec spec(1, 1024, 20.0);
  Field f = gaussian_half(spec);
  FieldInterpolator interp(f);

  const double xj = spec.node(700);
  double p[1] = {xj};
  CHECK(std::abs(interp.at(p) - f.values[700]) < 1e-12);

  double q[1] = {0.3};
  CHECK(std::abs(interp.at(q) - std::exp(-0.045)) < 1e-10);

  // A pure grid harmonic e^{i xi_k x} is reproduced off-grid.
  const double xik = spec.freq(37);
  Field h = sample(spec, [&](std::span<const double> x) {
    return std::exp(Complex(0.0, xik * x[0]));
  });
  FieldInterpolator hi(h);
  double r[1] = {1.2345};
  CHECK(std::abs(hi.at(r) - std::exp(Complex(0.0, xik * 1.2345))) < 1e-11);

  double outside[1] = {25.0};
  CHECK_THROWS_AS(hi.at(outside), DomainError);
}

TEST_CASE("spectral derivatives at the origin") {
  GridSpec spec(1, 1024, 20.0);
  Field f = gaussian_half(spec);
  FieldInterpolator interp(f);
  // d/dx e^{-x^2/2} at 0 is 0; second derivative is -1.
  CHECK(std::abs(interp.derivative_at_zero({0, 0, 0}) - 1.0) < 1e-12);
  CHECK(std::abs(interp.derivative_at_zero({1, 0, 0})) < 1e-12);
  CHECK(std::abs(interp.derivative_at_zero({2, 0, 0}) + 1.0) < 1e-10);
}

TEST_CASE("reflect permutes nodes exactly") {
  GridSpec spec(1, 64, 4.0);
  Field f = sample(spec, [](std::span<const double> x) {
    return Complex(x[0] + 0.25 * x[0] * x[0], 0.0);
  });
  Field r = reflect(f);
  for (int j = 1; j < spec.points_per_axis; ++j) {
    const double x = spec.node(j);
    CHECK(r.values[(spec.points_per_axis - j) % spec.points_per_axis] ==
          f.values[j]);
    (void)x;
  }
}

TEST_CASE("RZF1 round trip is bit exact") {
  GridSpec spec(2, 64, 5.0);
  Field f = sample(spec, [](std::span<const double> x) {
    return Complex(std::sin(x[0]) * x[1], std::cos(x[1]));
  });
  const std::string path = std::filesystem::temp_directory_path() / "rzt_io_test.rzf";
  write_field_atomic(path, f);
  Field g = read_field(path);
  REQUIRE(g.spec == f.spec);
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(f.values[i] == g.values[i]);
  std::remove(path.c_str());
}

TEST_CASE("dual grid carries the frequency nodes") {
  GridSpec spec(1, 256, 10.0);
  GridSpec dual = spec.dual();
  CHECK(dual.spacing() == doctest::Approx(spec.freq_spacing()).epsilon(1e-15));
  Field f = gaussian_half(spec);
  Field Fx = spectral_to_field(fourier_forward(f));
  // Node j of the dual grid holds the coefficient at k = j - N/2.
  const int j = 130;
  const double xi = dual.node(j);
  CHECK(std::abs(Fx.values[j] - std::sqrt(2.0 * M_PI) * std::exp(-0.5 * xi * xi)) < 1e-9);
}
