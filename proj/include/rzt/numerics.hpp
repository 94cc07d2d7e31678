#pragma once

// Small numerics toolbox shared by the pairing and estimation code:
// C-infinity cutoffs, Gauss-Legendre and tanh-sinh quadrature, least squares.

#include <cmath>
#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace rzt {

using Complex = std::complex<double>;

/// C-infinity step: 0 for u <= 0, 1 for u >= 1, flat to all orders at both ends.
inline double smoothstep_flat(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / u);
  const double b = std::exp(-1.0 / (1.0 - u));
  return a / (a + b);
}

/// Taper ramp exp(1 - 1/(1 - v^2)) on v in [0, 1): 1 at v = 0, 0 as v -> 1.
inline double bump_ramp(double v) {
  if (v <= 0.0) return 1.0;
  if (v >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - v * v));
}

/// Gauss-Legendre nodes/weights on [-1, 1], cached per order.
const std::vector<std::pair<double, double>>& gauss_legendre(int order);

/// Integrate f over [a, b] with a single Gauss-Legendre rule.
template <typename F>
auto integrate_gl(F&& f, double a, double b, int order = 32) {
  using R = decltype(f(a));
  const auto& nw = gauss_legendre(order);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  R sum{};
  for (const auto& [x, w] : nw) sum += R(w * half) * f(mid + half * x);
  return sum;
}

/// Integrate over [a, b] split into geometrically graded panels toward `a`.
/// Suited to integrands that vary fastest near the left endpoint.
template <typename F>
auto integrate_graded(F&& f, double a, double b, int panels = 24, int order = 24) {
  using R = decltype(f(a));
  R sum{};
  // Panel edges: a + (b-a) * r^k, geometric in reverse.
  const double ratio = std::pow(2.0, -1.0);
  std::vector<double> edges{b};
  double len = b - a;
  for (int k = 1; k < panels; ++k) {
    len *= ratio;
    edges.push_back(a + len);
  }
  edges.push_back(a);
  for (size_t i = 0; i + 1 < edges.size(); ++i)
    sum += integrate_gl(f, edges[i + 1], edges[i], order);
  return sum;
}

/// tanh-sinh (double exponential) rule on (a, b); handles integrable endpoint
/// singularities. Fixed level for determinism.
template <typename F>
auto integrate_de(F&& f, double a, double b, double h = 0.04, double umax = 3.6) {
  using R = decltype(f(0.5 * (a + b)));
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  R sum{};
  const int nmax = static_cast<int>(umax / h);
  for (int i = -nmax; i <= nmax; ++i) {
    const double u = i * h;
    const double s = 0.5 * M_PI * std::sinh(u);
    const double x = std::tanh(s);
    const double w = 0.5 * M_PI * std::cosh(u) / (std::cosh(s) * std::cosh(s));
    const double xi = mid + half * x;
    if (xi <= a || xi >= b) continue;
    sum += R(w * h * half) * f(xi);
  }
  return sum;
}

/// Ordinary least squares y ~ a + b x. Returns {a, b, rms residual}.
struct LineFit {
  double intercept = 0.0;
  double slope = 0.0;
  double rms = 0.0;
};
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Least squares y ~ a + b x + c z (three-parameter plane fit).
struct PlaneFit {
  double a = 0.0, b = 0.0, c = 0.0;
  double rms = 0.0;
};
PlaneFit fit_plane(std::span<const double> x, std::span<const double> z,
                   std::span<const double> y);

/// Solve the 2x2 complex system M c = rhs. Throws ConditioningError when the
/// scaled determinant is below `rcond`.
std::pair<Complex, Complex> solve_2x2(const Complex M[2][2], const Complex rhs[2],
                                      double rcond = 1e-10);

/// Median of a small vector (copies; input untouched).
double median(std::vector<double> v);

/// Thread-count hint from RZT_THREADS (clamped to [1, 64]); never affects results.
int thread_count_hint();

/// Deterministic parallel map over [0, n): each index writes its own slot.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace rzt
