#pragma once

// Complex gamma function and the Riesz normalizing constant
//
//   gamma_n(alpha) = 2^alpha pi^{n/2} Gamma(alpha/2) / Gamma((n - alpha)/2),
//
// with bookkeeping for the two exceptional real lattices: alpha = -2s where
// the kernel degenerates to (-Laplacian)^s delta, and alpha = n + 2s where it
// degenerates to the log kernel with constant
//
//   gamma_n(n + 2s) = (-1)^s 2^{n+2s-1} pi^{n/2} s! Gamma(n/2 + s).

#include <complex>

#include "rzt/errors.hpp"
#include "rzt/numerics.hpp"

namespace rzt {

/// Order/degree parameter of kernels and operators; dimensionless.
struct ComplexDegree {
  Complex value{0.0, 0.0};
  ComplexDegree() = default;
  ComplexDegree(double re) : value(re, 0.0) {}
  ComplexDegree(Complex v) : value(v) {}
  bool is_real() const { return value.imag() == 0.0; }
};

/// Gamma(z) by Lanczos approximation, reflection for Re z < 0.5.
/// Throws GammaPoleError at nonpositive integers.
Complex gamma(Complex z);

/// log Gamma(z) on Re z > 0 (principal branch), for overflow-safe ratios.
Complex log_gamma(Complex z);

enum class NormalizerKind { Regular, LogKernel, DeltaKernel };

struct NormalizerValue {
  NormalizerKind kind = NormalizerKind::Regular;
  /// Regular: gamma_n(alpha). LogKernel: gamma_n(n+2s). DeltaKernel: the
  /// integer s with kappa_{-2s} = (-Laplacian)^s delta.
  Complex value{0.0, 0.0};
  int s = 0; // lattice index for the exceptional kinds
};

/// Classify alpha against the exceptional lattices (real alpha within 1e-12;
/// complex alpha is always Regular) and return the constant.
NormalizerValue riesz_normalizer(int dim, ComplexDegree alpha);

/// The log-kernel constant gamma_n(n+2s) in closed form.
double log_kernel_constant(int dim, int s);

/// Modified Bessel functions of the second kind, real argument z > 0.
double bessel_k0(double z);
double bessel_k1(double z);
/// K1(z) - 1/z, stable near z = 0 (log-type remainder).
double bessel_k1_minus_pole(double z);

} // namespace rzt
