#pragma once

// Riesz kernel evaluation and regularized distributional pairings.
//
// Pointwise kernels:
//   kappa_alpha(x) = |x|^{alpha-n} / gamma_n(alpha)          (regular)
//   kappa_{n+2s}(x) = -|x|^{2s} log|x| / gamma_n(n+2s)       (log lattice)
//   kappa_{-2s}    = (-Laplacian)^s delta                    (not pointwise)
//
// Pairings: <|x|^alpha, phi> for any alpha off the lattice alpha+n in
// {0,-2,-4,...} by Taylor-subtracted quadrature with exact moment
// corrections (the analytic continuation of the regular pairing), the
// principal value at the excluded lattice, and the one-sided powers x_+-^alpha.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "rzt/grid.hpp"
#include "rzt/special.hpp"

namespace rzt {

struct KernelValue {
  enum class Kind { Pointwise, NotPointwise };
  Kind kind = Kind::Pointwise;
  Complex value{0.0, 0.0}; // meaningful iff Pointwise
};

/// Componentwise degrees of the multi-Riesz kernel; |alpha| = sum of components.
struct MultiIndexDegree {
  std::vector<Complex> components;
  Complex total() const {
    Complex s = 0.0;
    for (auto c : components) s += c;
    return s;
  }
};

/// Measured 1-D quasi-asymptotic limit g = C1 x_+^alpha + C2 x_-^alpha, or the
/// lattice branch C1 P(x^{-k}) + C2 delta^{(k-1)} when alpha = -k.
struct LimitForm1D {
  ComplexDegree degree;
  Complex c_plus{0.0, 0.0};
  Complex c_minus{0.0, 0.0};
  bool lattice_case = false;
  int lattice_k = 0;
};

/// kappa_alpha at a point x != 0.
KernelValue riesz_kernel_eval(int dim, ComplexDegree alpha, std::span<const double> x);

/// Product of 1-D kernels, log branches per component (Eq-21.4 structure).
KernelValue multi_riesz_kernel_eval(const MultiIndexDegree& alpha,
                                    std::span<const double> x);

/// Max over samples of |kappa(t x) - scaling law(t, x)|, where the law is
/// t^{alpha-n} kappa(x) for regular kernels and carries the -t^{2s} log t
/// |x|^{2s}/gamma_n correction on the log lattice.
double homogeneity_defect(int dim, ComplexDegree alpha, double t,
                          std::span<const std::array<double, 3>> samples);
double homogeneity_defect(const MultiIndexDegree& alpha, double t,
                          std::span<const std::array<double, 3>> samples);

/// <|x|^alpha, phi>. Throws LatticeError at alpha + n in {0,-2,...} (use
/// pair_abs_power_pv there).
Complex pair_abs_power(int dim, Complex alpha, const Field& phi);

/// <P(|x|^{-n-2s}), phi> by the symmetric-epsilon limit of Eq-(12) form.
Complex pair_abs_power_pv(int dim, int s, const Field& phi);

enum class Side { Plus, Minus };

/// <x_+-^alpha, phi> for n = 1, alpha not a negative integer.
Complex pair_xpm_power(Side side, Complex alpha, const Field& phi);

/// <|x|^{2s} log|x|, phi>.
Complex pair_log_weight(int dim, int s, const Field& phi);

/// <P(1/x), phi> = int_0^inf (phi(x) - phi(-x))/x dx  (n = 1).
Complex pair_pv_reciprocal(const Field& phi);

/// <kappa_alpha, phi> dispatching on the normalizer branch; the delta branch
/// returns (-Laplacian)^s phi (0) computed spectrally.
Complex pair_riesz_kernel(int dim, ComplexDegree alpha, const Field& phi);

/// (-Laplacian)^s phi evaluated at the origin, spectrally.
Complex laplacian_power_at_zero(const Field& phi, int s);

} // namespace rzt
