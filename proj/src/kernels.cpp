#include "rzt/kernels.hpp"

#include <cmath>

namespace rzt {

namespace {

double radius(int dim, std::span<const double> x) {
  double r2 = 0.0;
  for (int a = 0; a < dim; ++a) r2 += x[a] * x[a];
  return std::sqrt(r2);
}

// C-infinity cutoff: 1 on r <= 1, 0 on r >= 2, flat at both junctions. The
// wide transition keeps the bump's grid-trapezoid aliasing near roundoff.
double cutoff_w(double r) { return 1.0 - smoothstep_flat(r - 1.0); }

// R(nu) = int_0^2 r^{nu-1} w(r) dr. The pole of the analytic continuation
// sits entirely in the closed-form piece 1/nu.
Complex ramp_moment(Complex nu) {
  const Complex ramp = integrate_gl(
      [&](double r) { return std::pow(r, nu - 1.0) * cutoff_w(r); }, 1.0, 2.0, 48);
  return 1.0 / nu + ramp;
}

// d/dnu R(nu) = int_0^2 r^{nu-1} log r w(r) dr.
Complex ramp_moment_log(Complex nu) {
  const Complex ramp = integrate_gl(
      [&](double r) { return std::pow(r, nu - 1.0) * std::log(r) * cutoff_w(r); },
      1.0, 2.0, 48);
  return -1.0 / (nu * nu) + ramp;
}

// Surface integral of theta^{j} over S^{n-1} for an all-even multi-index
// j = 2a: 2 prod Gamma(a_i + 1/2) / Gamma(n/2 + |a|).
double angular_moment(int dim, const std::array<int, 3>& j) {
  double num = 1.0;
  int half_sum = 0;
  for (int axis = 0; axis < dim; ++axis) {
    const int a = j[axis] / 2;
    num *= std::tgamma(a + 0.5);
    half_sum += a;
  }
  return 2.0 * num / std::tgamma(0.5 * dim + half_sum);
}

struct TaylorTerm {
  std::array<int, 3> j{0, 0, 0};
  int order = 0;
  Complex coeff{0.0, 0.0}; // d^j phi(0) / j!
};

// All multi-indices |j| <= m for the grid's dimension, with spectral
// derivative coefficients.
std::vector<TaylorTerm> taylor_at_zero(const FieldInterpolator& interp, int m) {
  const int dim = interp.spec().dim;
  std::vector<TaylorTerm> terms;
  std::array<int, 3> j{0, 0, 0};
  for (j[0] = 0; j[0] <= m; ++j[0]) {
    const int up2 = dim >= 2 ? m - j[0] : 0;
    for (j[1] = 0; j[1] <= up2; ++j[1]) {
      const int up3 = dim >= 3 ? m - j[0] - j[1] : 0;
      for (j[2] = 0; j[2] <= up3; ++j[2]) {
        TaylorTerm t;
        t.j = j;
        t.order = j[0] + j[1] + j[2];
        double fact = 1.0;
        for (int a = 0; a < dim; ++a)
          for (int k = 2; k <= j[a]; ++k) fact *= k;
        t.coeff = interp.derivative_at_zero(j) / fact;
        terms.push_back(t);
      }
    }
  }
  return terms;
}

Complex taylor_eval(const std::vector<TaylorTerm>& terms, int dim,
                    std::span<const double> x) {
  Complex sum = 0.0;
  for (const auto& t : terms) {
    double mono = 1.0;
    for (int a = 0; a < dim; ++a)
      for (int k = 0; k < t.j[a]; ++k) mono *= x[a];
    sum += t.coeff * mono;
  }
  return sum;
}

bool all_even(const std::array<int, 3>& j) {
  return j[0] % 2 == 0 && j[1] % 2 == 0 && j[2] % 2 == 0;
}

// Subtraction order: at least what the continuation requires, and enough to
// keep the subtracted integrand ~ |x|^{4.5+} so the grid trapezoid reaches
// 1e-10 territory at the default spacings.
int subtraction_order(double re_alpha, int dim) {
  const int required = std::max(0, static_cast<int>(std::floor(-re_alpha - dim)) + 1);
  const int smooth = std::max(0, static_cast<int>(std::ceil(4.5 - re_alpha)));
  return std::max(required, smooth);
}

void check_abs_power_lattice(int dim, Complex alpha) {
  if (alpha.imag() != 0.0) return;
  const double shifted = -(alpha.real() + dim) / 2.0; // s if alpha = -n-2s
  const double s = std::round(shifted);
  if (s >= 0.0 && std::abs(shifted - s) < 1e-12)
    throw LatticeError("pair_abs_power: alpha + n on {0,-2,-4,...}; use pair_abs_power_pv(s=" +
                       std::to_string(static_cast<long long>(s)) + ")");
}

} // namespace

KernelValue riesz_kernel_eval(int dim, ComplexDegree alpha, std::span<const double> x) {
  const double r = radius(dim, x);
  if (r == 0.0) throw SingularPointError("riesz_kernel_eval: x = 0");
  const NormalizerValue norm = riesz_normalizer(dim, alpha);
  KernelValue out;
  switch (norm.kind) {
    case NormalizerKind::DeltaKernel:
      out.kind = KernelValue::Kind::NotPointwise;
      return out;
    case NormalizerKind::LogKernel:
      out.value = -std::pow(r, 2.0 * norm.s) * std::log(r) / norm.value;
      return out;
    case NormalizerKind::Regular:
      out.value = std::pow(Complex(r, 0.0), alpha.value - double(dim)) / norm.value;
      return out;
  }
  return out;
}

KernelValue multi_riesz_kernel_eval(const MultiIndexDegree& alpha,
                                    std::span<const double> x) {
  KernelValue out;
  out.value = 1.0;
  for (std::size_t j = 0; j < alpha.components.size(); ++j) {
    const double xj[1] = {x[j]};
    if (xj[0] == 0.0)
      throw SingularPointError("multi_riesz_kernel_eval: component x_j = 0");
    KernelValue part = riesz_kernel_eval(1, ComplexDegree(alpha.components[j]), xj);
    if (part.kind == KernelValue::Kind::NotPointwise) {
      out.kind = KernelValue::Kind::NotPointwise;
      out.value = 0.0;
      return out;
    }
    out.value *= part.value;
  }
  return out;
}

namespace {

// Predicted kappa(t x) from kappa(x) and the scaling law of the branch.
Complex predicted_scaled_1d(ComplexDegree alpha, double t, double x) {
  const double x1[1] = {x};
  const NormalizerValue norm = riesz_normalizer(1, alpha);
  const Complex kx = riesz_kernel_eval(1, alpha, x1).value;
  if (norm.kind == NormalizerKind::LogKernel) {
    const double p2s = std::pow(std::abs(x), 2.0 * norm.s);
    return std::pow(t, 2.0 * norm.s) * kx -
           std::pow(t, 2.0 * norm.s) * std::log(t) * p2s / norm.value;
  }
  return std::pow(Complex(t, 0.0), alpha.value - 1.0) * kx;
}

} // namespace

double homogeneity_defect(int dim, ComplexDegree alpha, double t,
                          std::span<const std::array<double, 3>> samples) {
  const NormalizerValue norm = riesz_normalizer(dim, alpha);
  if (norm.kind == NormalizerKind::DeltaKernel) return 0.0; // not pointwise
  double worst = 0.0;
  for (const auto& s : samples) {
    std::array<double, 3> tx = s;
    for (int a = 0; a < dim; ++a) tx[a] *= t;
    const std::span<const double> xs(s.data(), dim);
    const Complex actual =
        riesz_kernel_eval(dim, alpha, std::span<const double>(tx.data(), dim)).value;
    const Complex kx = riesz_kernel_eval(dim, alpha, xs).value;
    Complex expected;
    if (norm.kind == NormalizerKind::LogKernel) {
      const double p2s = std::pow(radius(dim, xs), 2.0 * norm.s);
      expected = std::pow(t, 2.0 * norm.s) * kx -
                 std::pow(t, 2.0 * norm.s) * std::log(t) * p2s / norm.value;
    } else {
      expected = std::pow(Complex(t, 0.0), alpha.value - double(dim)) * kx;
    }
    worst = std::max(worst, std::abs(actual - expected));
  }
  return worst;
}

double homogeneity_defect(const MultiIndexDegree& alpha, double t,
                          std::span<const std::array<double, 3>> samples) {
  double worst = 0.0;
  for (const auto& s : samples) {
    std::array<double, 3> tx = s;
    for (auto& c : tx) c *= t;
    const KernelValue actual =
        multi_riesz_kernel_eval(alpha, std::span<const double>(tx.data(), alpha.components.size()));
    if (actual.kind == KernelValue::Kind::NotPointwise) continue;
    Complex expected = 1.0;
    for (std::size_t j = 0; j < alpha.components.size(); ++j)
      expected *= predicted_scaled_1d(ComplexDegree(alpha.components[j]), t, s[j]);
    worst = std::max(worst, std::abs(actual.value - expected));
  }
  return worst;
}

Complex pair_abs_power(int dim, Complex alpha, const Field& phi) {
  if (dim != phi.spec.dim) throw ParameterError("pair_abs_power: dimension mismatch");
  check_abs_power_lattice(dim, alpha);
  const GridSpec& spec = phi.spec;
  FieldInterpolator interp(phi);
  const int m = subtraction_order(alpha.real(), dim);
  const auto terms = taylor_at_zero(interp, m);

  // Quadrature part: Dx^n sum |x|^alpha (phi - w(|x|) T_m(x)).
  Complex q = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const auto xp = node_point(spec, i);
    const std::span<const double> x(xp.data(), spec.dim);
    const double r = radius(spec.dim, x);
    if (r == 0.0) continue; // integrand vanishes at the origin by construction
    Complex sub = phi.values[i];
    const double w = cutoff_w(r);
    if (w > 0.0) sub -= w * taylor_eval(terms, spec.dim, x);
    q += std::pow(Complex(r, 0.0), alpha) * sub;
  }
  q *= std::pow(spec.spacing(), spec.dim);

  // Moment corrections: sum over all-even multi-indices.
  Complex corr = 0.0;
  for (const auto& t : terms) {
    if (!all_even(t.j)) continue;
    corr += t.coeff * angular_moment(spec.dim, t.j) *
            ramp_moment(alpha + double(spec.dim + t.order));
  }
  return q + corr;
}

Complex laplacian_power_at_zero(const Field& phi, int s) {
  // Each d/dx_a acts as -i xi_a under the e^{-i xi x} inverse, so
  // Delta^s phi(0) = sum (-|xi|^2)^s coeffs and (-Delta)^s picks up (+|xi|^2)^s.
  SpectralField F = fourier_forward(phi);
  Complex out = 0.0;
  for (std::size_t i = 0; i < F.coeffs.size(); ++i) {
    const auto xi = freq_point(F.spec, i);
    double r2 = 0.0;
    for (int a = 0; a < F.spec.dim; ++a) r2 += xi[a] * xi[a];
    out += std::pow(r2, s) * F.coeffs[i];
  }
  return out * std::pow(F.spec.freq_spacing() / (2.0 * M_PI), F.spec.dim);
}

Complex pair_abs_power_pv(int dim, int s, const Field& phi) {
  // Symmetric-epsilon realization of the Eq-(12) limit with a Richardson step.
  const double alpha0 = -double(dim) - 2.0 * s;
  FieldInterpolator interp(phi);
  const auto terms = taylor_at_zero(interp, 2 * s);
  Complex residue_coeff = 0.0; // sum_{|j|=2s, even} c_j A_j = pole residue numerator
  for (const auto& t : terms) {
    if (t.order != 2 * s || !all_even(t.j)) continue;
    residue_coeff += t.coeff * angular_moment(dim, t.j);
  }
  auto bracket = [&](double eps) {
    const Complex plus =
        pair_abs_power(dim, Complex(alpha0 + eps, 0.0), phi) - residue_coeff / eps;
    const Complex minus =
        pair_abs_power(dim, Complex(alpha0 - eps, 0.0), phi) + residue_coeff / eps;
    return 0.5 * (plus + minus);
  };
  const Complex a1 = bracket(1e-3);
  const Complex a2 = bracket(5e-4);
  return (4.0 * a2 - a1) / 3.0;
}

Complex pair_xpm_power(Side side, Complex alpha, const Field& phi) {
  if (phi.spec.dim != 1)
    throw ParameterError("pair_xpm_power: one-dimensional fields only");
  if (alpha.imag() == 0.0) {
    const double r = std::round(alpha.real());
    if (r <= -1.0 && std::abs(alpha.real() - r) < 1e-12)
      throw LatticeError("pair_xpm_power: alpha a negative integer; use the "
                         "composites |x|^alpha / |x|^alpha sign x (Eq 18.5/18.6 forms)");
  }
  const Field& f = side == Side::Plus ? phi : reflect(phi);
  const GridSpec& spec = f.spec;
  FieldInterpolator interp(f);
  const int m = subtraction_order(alpha.real(), 1);
  const auto terms = taylor_at_zero(interp, m);

  Complex q = 0.0;
  for (int j = 1; j < spec.points_per_axis; ++j) {
    const double x = spec.node(j);
    if (x <= 0.0) continue;
    const double xs[1] = {x};
    Complex sub = f.values[static_cast<std::size_t>(j)];
    const double w = cutoff_w(x);
    if (w > 0.0) sub -= w * taylor_eval(terms, 1, xs);
    q += std::pow(Complex(x, 0.0), alpha) * sub;
  }
  q *= spec.spacing();

  Complex corr = 0.0;
  for (const auto& t : terms)
    corr += t.coeff * ramp_moment(alpha + double(1 + t.order));
  return q + corr;
}

Complex pair_log_weight(int dim, int s, const Field& phi) {
  if (dim != phi.spec.dim) throw ParameterError("pair_log_weight: dimension mismatch");
  const GridSpec& spec = phi.spec;
  FieldInterpolator interp(phi);
  const int m = std::max(2 * s, 5);
  const auto terms = taylor_at_zero(interp, m);
  Complex q = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const auto xp = node_point(spec, i);
    const std::span<const double> x(xp.data(), spec.dim);
    const double r = radius(spec.dim, x);
    if (r == 0.0) continue;
    Complex sub = phi.values[i];
    const double w = cutoff_w(r);
    if (w > 0.0) sub -= w * taylor_eval(terms, spec.dim, x);
    q += std::pow(r, 2.0 * s) * std::log(r) * sub;
  }
  q *= std::pow(spec.spacing(), spec.dim);

  Complex corr = 0.0;
  for (const auto& t : terms) {
    if (!all_even(t.j)) continue;
    corr += t.coeff * angular_moment(spec.dim, t.j) *
            ramp_moment_log(Complex(2.0 * s + spec.dim + t.order, 0.0));
  }
  return q + corr;
}

Complex pair_pv_reciprocal(const Field& phi) {
  if (phi.spec.dim != 1) throw ParameterError("pair_pv_reciprocal: n = 1 only");
  const GridSpec& spec = phi.spec;
  const int n = spec.points_per_axis;
  FieldInterpolator interp(phi);
  // Integrand (phi(x) - phi(-x))/x is band-limited smooth; trapezoid on [0, L).
  Complex sum = 0.5 * 2.0 * interp.derivative_at_zero({1, 0, 0}); // limit at x = 0
  for (int j = 1; j < n / 2; ++j) {
    const double x = spec.node(n / 2 + j); // positive nodes
    const Complex diff = phi.values[static_cast<std::size_t>(n / 2 + j)] -
                         phi.values[static_cast<std::size_t>((n / 2 - j))];
    sum += diff / x;
  }
  return sum * spec.spacing();
}

Complex pair_riesz_kernel(int dim, ComplexDegree alpha, const Field& phi) {
  const NormalizerValue norm = riesz_normalizer(dim, alpha);
  switch (norm.kind) {
    case NormalizerKind::DeltaKernel:
      // <(-Laplacian)^s delta, phi> = (-Laplacian)^s phi(0).
      return laplacian_power_at_zero(phi, norm.s);
    case NormalizerKind::LogKernel:
      return -pair_log_weight(dim, norm.s, phi) / norm.value;
    case NormalizerKind::Regular:
      return pair_abs_power(dim, alpha.value - double(dim), phi) / norm.value;
  }
  return 0.0;
}

} // namespace rzt
