#include "rzt/riesz.hpp"

#include <cmath>

namespace rzt {

namespace {

Complex power_symbol(double r, Complex alpha) {
  if (alpha == Complex(0.0)) return 1.0; // D^0 is the identity, including mode 0
  if (r == 0.0) return 0.0;
  return std::exp(alpha * std::log(r)); // principal branch; r > 0 always
}

void maybe_project(SpectralField& F, LizorkinVariant variant, bool symbol_singular) {
  if (!symbol_singular) return;
  const LizorkinClass cls = default_lizorkin_class(F.spec, variant);
  if (low_mode_energy_fraction(F, cls.taper_radius) <= 1e-10) return;
  for (std::size_t i = 0; i < F.coeffs.size(); ++i) {
    const auto xi = freq_point(F.spec, i);
    F.coeffs[i] *= lizorkin_taper(cls, std::span<const double>(xi.data(), F.spec.dim));
  }
}

} // namespace

Field apply_riesz(const Field& f, ComplexDegree alpha) {
  SpectralField F = fourier_forward(f);
  maybe_project(F, LizorkinVariant::Phi, alpha.value.real() < 0.0);
  for (std::size_t i = 0; i < F.coeffs.size(); ++i) {
    const auto xi = freq_point(F.spec, i);
    double r2 = 0.0;
    for (int a = 0; a < F.spec.dim; ++a) r2 += xi[a] * xi[a];
    F.coeffs[i] *= power_symbol(std::sqrt(r2), alpha.value);
  }
  return fourier_inverse(F);
}

Field apply_multi_riesz(const Field& f, const MultiIndexDegree& alpha) {
  if (static_cast<int>(alpha.components.size()) != f.spec.dim)
    throw ParameterError("apply_multi_riesz: component count != dim");
  bool singular = false;
  for (const auto& c : alpha.components) singular = singular || c.real() < 0.0;
  SpectralField F = fourier_forward(f);
  maybe_project(F, LizorkinVariant::PhiTimes, singular);
  for (std::size_t i = 0; i < F.coeffs.size(); ++i) {
    const auto xi = freq_point(F.spec, i);
    Complex m = 1.0;
    for (int a = 0; a < F.spec.dim; ++a)
      m *= power_symbol(std::abs(xi[a]), alpha.components[static_cast<std::size_t>(a)]);
    F.coeffs[i] *= m;
  }
  return fourier_inverse(F);
}

double riesz_group_check(const Field& f, ComplexDegree alpha, ComplexDegree beta) {
  const double nrm = f.norm2();
  if (nrm == 0.0) return 0.0;
  const Field ab = apply_riesz(apply_riesz(f, alpha), beta);
  const Field sum = apply_riesz(f, ComplexDegree(alpha.value + beta.value));
  const Field inv = apply_riesz(apply_riesz(f, alpha), ComplexDegree(-alpha.value));
  // Compare D^a D^{-a} f against f with the zero mode removed, which is what
  // the operator family acts on.
  Field fproj = f;
  {
    SpectralField F = fourier_forward(f);
    F.coeffs[0] = 0.0;
    fproj = fourier_inverse(F);
  }
  const double d1 = axpby(1.0, ab, -1.0, sum).norm2() / nrm;
  const double d2 = axpby(1.0, inv, -1.0, fproj).norm2() / nrm;
  return std::max(d1, d2);
}

Complex pair_fields(const Field& f, const Field& g) {
  if (!(f.spec == g.spec)) throw ParameterError("pair_fields: grid mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f.values[i] * g.values[i];
  return s * std::pow(f.spec.spacing(), f.spec.dim);
}

} // namespace rzt
