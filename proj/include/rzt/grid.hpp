#pragma once

// Uniform periodic grids on [-L, L)^n, complex sampled fields, and the
// discrete Fourier transform matched to the continuous convention
//
//   F[f](xi) = integral e^{+i xi.x} f(x) dx,
//   f(x)     = (2 pi)^{-n} integral e^{-i xi.x} F(xi) dxi,
//
// realized as Dx^n-weighted sums over the grid with frequency nodes
// xi_k = pi k / L, k in [-N/2, N/2) per axis.

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "rzt/errors.hpp"
#include "rzt/numerics.hpp"

namespace rzt {

struct GridSpec {
  int dim = 1;              // 1, 2 or 3
  int points_per_axis = 64; // power of two, >= 64
  double half_width = 1.0;  // L

  GridSpec() = default;
  GridSpec(int dim_, int n_, double L_);

  double spacing() const { return 2.0 * half_width / points_per_axis; }
  double freq_spacing() const { return M_PI / half_width; }
  double nyquist() const { return M_PI / spacing(); }
  std::size_t cell_count() const;

  /// Spatial node along one axis: x_j = -L + j Dx.
  double node(int j) const { return -half_width + j * spacing(); }
  /// Signed frequency index for storage index m (FFT wrap order).
  int signed_index(int m) const {
    return m < points_per_axis / 2 ? m : m - points_per_axis;
  }
  /// Frequency node for storage index m: xi = pi k / L with k = signed_index(m).
  double freq(int m) const { return freq_spacing() * signed_index(m); }

  /// Grid carrying the frequency nodes of this one as its spatial nodes.
  GridSpec dual() const;

  bool operator==(const GridSpec&) const = default;
};

/// Complex values sampled on the grid, row-major with axis 0 slowest.
struct Field {
  GridSpec spec;
  std::vector<Complex> values;

  Field() = default;
  explicit Field(const GridSpec& s) : spec(s), values(s.cell_count()) {}
  Field(const GridSpec& s, std::vector<Complex> v);

  Complex& operator[](std::size_t i) { return values[i]; }
  const Complex& operator[](std::size_t i) const { return values[i]; }
  std::size_t size() const { return values.size(); }

  /// L2 norm with the Dx^n quadrature weight.
  double norm2() const;
  double max_abs() const;
  bool all_finite() const;
};

/// Fourier coefficients indexed by frequency node (FFT wrap order per axis).
struct SpectralField {
  GridSpec spec;
  std::vector<Complex> coeffs;

  SpectralField() = default;
  explicit SpectralField(const GridSpec& s) : spec(s), coeffs(s.cell_count()) {}

  std::size_t size() const { return coeffs.size(); }
};

/// Decompose flat index into per-axis indices (axis 0 slowest).
std::array<int, 3> unflatten(const GridSpec& spec, std::size_t flat);
std::size_t flatten(const GridSpec& spec, const std::array<int, 3>& idx);

/// Spatial coordinates of a node.
std::array<double, 3> node_point(const GridSpec& spec, std::size_t flat);
/// Frequency coordinates of a spectral node.
std::array<double, 3> freq_point(const GridSpec& spec, std::size_t flat);

/// coeffs[k] = Dx^n sum_j e^{+i xi_k.x_j} f(x_j).
SpectralField fourier_forward(const Field& f);

/// Exact discrete inverse of fourier_forward, including the (2 pi)^{-n} factor.
Field fourier_inverse(const SpectralField& F);

/// Reinterpret spectral coefficients as a Field on the dual grid
/// (node j of the dual grid holds the coefficient at k = j - N/2 per axis).
Field spectral_to_field(const SpectralField& F);

/// Band-limited evaluation at arbitrary points. Holds the spectrum, so
/// repeated calls cost O(N^n) each with no further transforms.
class FieldInterpolator {
public:
  explicit FieldInterpolator(const Field& f);
  explicit FieldInterpolator(SpectralField F);

  /// Trigonometric-polynomial value at x; exact at grid nodes.
  Complex at(std::span<const double> x) const;
  /// Mixed partial derivative at the origin, order[axis] per axis.
  Complex derivative_at_zero(const std::array<int, 3>& order) const;

  const GridSpec& spec() const { return F_.spec; }

private:
  SpectralField F_;
};

/// One-shot band-limited value; x must lie inside [-L, L)^n.
Complex trig_interpolate(const Field& f, std::span<const double> x);

/// Sample an analytic function onto a grid.
Field sample(const GridSpec& spec, const std::function<Complex(std::span<const double>)>& fn);

/// Pointwise linear combination a*f + b*g (specs must match).
Field axpby(Complex a, const Field& f, Complex b, const Field& g);

/// Reflected field g(x) = f(-x), exact node permutation.
Field reflect(const Field& f);

/// Fraction of spectral energy carried by modes with |xi| <= radius.
double low_mode_energy_fraction(const SpectralField& F, double radius);

} // namespace rzt
