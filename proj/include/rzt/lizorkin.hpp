#pragma once

// Lizorkin-class test fields: Schwartz functions whose Fourier transform is
// flat to all orders at the origin (Phi), or flat on every coordinate
// hyperplane (PhiTimes). Built from the generating bump
//
//   psi(xi) = exp(-(|xi| - k0)^2 / sigma^2 - sigma^2 / |xi|^2),
//
// which vanishes to infinite order at xi = 0; the field is phi = F[psi].
// Class membership on the grid is a moment tolerance, not exact vanishing.

#include <vector>

#include "rzt/grid.hpp"

namespace rzt {

enum class LizorkinVariant { Phi, PhiTimes };

struct LizorkinClass {
  LizorkinVariant variant = LizorkinVariant::Phi;
  double taper_radius = 0.0;     // epsilon, frequency units
  double moment_tolerance = 1e-8;
};

/// Default class for a grid: taper epsilon = 8 pi / L.
LizorkinClass default_lizorkin_class(const GridSpec& spec, LizorkinVariant variant);

struct LizorkinParams {
  double sigma = 1.0; // bump scale
  double k0 = 0.0;    // modulation: spectral bump center
};

/// A constructed test function along with its closed-form spectrum,
/// normalized so that spectrum(xi) equals fourier_forward(phi) at the nodes.
struct LizorkinTest {
  Field phi;
  LizorkinVariant variant = LizorkinVariant::Phi;
  LizorkinParams params;

  /// One-axis bump factor (no normalization); spectrum() is the product of
  /// these (radial for Phi) times (2 pi)^n.
  double spectrum_axis(double xi) const;
  /// Closed-form spectrum at any frequency point; matches fourier_forward(phi).
  double spectrum(std::span<const double> xi) const;
};

/// Build a Lizorkin test field. Throws ParameterError when the bump
/// underflows everywhere on the grid.
LizorkinTest make_lizorkin_test(const GridSpec& spec, LizorkinVariant variant,
                                const LizorkinParams& params);

struct Moment {
  std::array<int, 3> index{0, 0, 0};
  int order = 0;
  Complex value{0.0, 0.0};
};

/// All mixed moments of order <= max_order by grid quadrature (max_order <= 10).
std::vector<Moment> moments(const Field& phi, int max_order);

/// Largest |moment| of each total order, convenience for tolerance checks.
std::vector<double> moment_sup_by_order(const Field& phi, int max_order);

/// Partial moments along one axis: for each order m <= max_order the
/// (n-1)-dimensional array of int x_k^m phi dx_k. For n = 1 each array has a
/// single entry and the values coincide with moments().
struct MarginalMoments {
  int axis = 0;
  int reduced_dim = 0;
  GridSpec reduced_spec;                         // meaningful when reduced_dim >= 1
  std::vector<std::vector<Complex>> per_order;   // [order][reduced flat index]
  double sup(int order) const;
};
MarginalMoments marginal_moments(const Field& phi, int axis, int max_order);

/// Spectral projection onto the discrete Lizorkin class: multiplies the
/// spectrum by a smooth cutoff vanishing on |xi| <= eps/2 (radial for Phi,
/// per-axis around each hyperplane for PhiTimes).
Field project(const Field& phi, const LizorkinClass& cls);

/// The taper factor used by project() at one frequency point.
double lizorkin_taper(const LizorkinClass& cls, std::span<const double> xi);

} // namespace rzt
