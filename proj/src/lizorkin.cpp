#include "rzt/lizorkin.hpp"

#include <cmath>

namespace rzt {

namespace {

double bump_axis(double u, const LizorkinParams& p) {
  if (u == 0.0) return 0.0;
  const double r = std::abs(u);
  const double band = (r - p.k0) / p.sigma;
  const double flat = p.sigma / r;
  const double expo = -band * band - flat * flat;
  return expo < -700.0 ? 0.0 : std::exp(expo);
}

double bump_radial(std::span<const double> xi, const LizorkinParams& p) {
  double r2 = 0.0;
  for (double c : xi) r2 += c * c;
  return bump_axis(std::sqrt(r2), p);
}

// Taper ramp: 0 on r <= eps/2, 1 on r >= eps.
double taper_axis(double r, double eps) {
  r = std::abs(r);
  if (r <= 0.5 * eps) return 0.0;
  if (r >= eps) return 1.0;
  const double v = 2.0 * (eps - r) / eps; // 1 at eps/2, 0 at eps
  return bump_ramp(v);
}

} // namespace

LizorkinClass default_lizorkin_class(const GridSpec& spec, LizorkinVariant variant) {
  LizorkinClass cls;
  cls.variant = variant;
  cls.taper_radius = 8.0 * spec.freq_spacing();
  cls.moment_tolerance = 1e-8;
  return cls;
}

double LizorkinTest::spectrum_axis(double xi) const {
  return bump_axis(xi, params);
}

double LizorkinTest::spectrum(std::span<const double> xi) const {
  const double scale = std::pow(2.0 * M_PI, phi.spec.dim);
  if (variant == LizorkinVariant::Phi) return scale * bump_radial(xi, params);
  double prod = 1.0;
  for (double c : xi) prod *= bump_axis(c, params);
  return scale * prod;
}

LizorkinTest make_lizorkin_test(const GridSpec& spec, LizorkinVariant variant,
                                const LizorkinParams& params) {
  if (!(params.sigma > 0.0)) throw ParameterError("make_lizorkin_test: sigma > 0 required");
  SpectralField psi(spec);
  double peak = 0.0;
  for (std::size_t i = 0; i < psi.coeffs.size(); ++i) {
    const auto xi = freq_point(spec, i);
    const std::span<const double> xis(xi.data(), spec.dim);
    double v;
    if (variant == LizorkinVariant::Phi) {
      v = bump_radial(xis, params);
    } else {
      v = 1.0;
      for (int a = 0; a < spec.dim; ++a) v *= bump_axis(xi[a], params);
    }
    psi.coeffs[i] = v;
    peak = std::max(peak, v);
  }
  if (peak < 1e-280)
    throw ParameterError("make_lizorkin_test: bump underflows on this grid "
                         "(sigma or k0 out of the resolvable band)");
  LizorkinTest test;
  // phi = F[psi]; with F[F[psi]](x) = (2 pi)^n psi(-x), realize phi via the
  // inverse transform scaled by (2 pi)^n so fourier_forward(phi) == (2 pi)^n psi.
  Field f = fourier_inverse(psi);
  for (auto& v : f.values) v *= std::pow(2.0 * M_PI, spec.dim);
  test.phi = std::move(f);
  test.variant = variant;
  test.params = params;
  return test;
}

std::vector<Moment> moments(const Field& phi, int max_order) {
  if (max_order > 10) throw ParameterError("moments: max_order <= 10");
  const GridSpec& spec = phi.spec;
  std::vector<Moment> out;
  std::array<int, 3> j{0, 0, 0};
  for (j[0] = 0; j[0] <= max_order; ++j[0]) {
    const int up2 = spec.dim >= 2 ? max_order - j[0] : 0;
    for (j[1] = 0; j[1] <= up2; ++j[1]) {
      const int up3 = spec.dim >= 3 ? max_order - j[0] - j[1] : 0;
      for (j[2] = 0; j[2] <= up3; ++j[2]) {
        Moment m;
        m.index = j;
        m.order = j[0] + j[1] + j[2];
        out.push_back(m);
      }
    }
  }
  const double w = std::pow(spec.spacing(), spec.dim);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const auto x = node_point(spec, i);
    for (auto& m : out) {
      double mono = 1.0;
      for (int a = 0; a < spec.dim; ++a)
        for (int k = 0; k < m.index[a]; ++k) mono *= x[a];
      m.value += mono * phi.values[i];
    }
  }
  for (auto& m : out) m.value *= w;
  return out;
}

std::vector<double> moment_sup_by_order(const Field& phi, int max_order) {
  std::vector<double> sup(static_cast<std::size_t>(max_order) + 1, 0.0);
  for (const auto& m : moments(phi, max_order))
    sup[static_cast<std::size_t>(m.order)] =
        std::max(sup[static_cast<std::size_t>(m.order)], std::abs(m.value));
  return sup;
}

double MarginalMoments::sup(int order) const {
  double s = 0.0;
  for (const auto& v : per_order[static_cast<std::size_t>(order)])
    s = std::max(s, std::abs(v));
  return s;
}

MarginalMoments marginal_moments(const Field& phi, int axis, int max_order) {
  const GridSpec& spec = phi.spec;
  if (axis < 0 || axis >= spec.dim)
    throw ParameterError("marginal_moments: axis out of range");
  MarginalMoments out;
  out.axis = axis;
  out.reduced_dim = spec.dim - 1;
  if (out.reduced_dim >= 1)
    out.reduced_spec = GridSpec(out.reduced_dim, spec.points_per_axis, spec.half_width);
  const std::size_t reduced_count =
      out.reduced_dim >= 1 ? out.reduced_spec.cell_count() : 1;
  out.per_order.assign(static_cast<std::size_t>(max_order) + 1,
                       std::vector<Complex>(reduced_count, Complex(0.0)));
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const auto idx = unflatten(spec, i);
    const double xk = spec.node(idx[axis]);
    // Flatten the remaining axes in order.
    std::size_t ri = 0;
    for (int a = 0; a < spec.dim; ++a) {
      if (a == axis) continue;
      ri = ri * spec.points_per_axis + static_cast<std::size_t>(idx[a]);
    }
    double mono = 1.0;
    for (int m = 0; m <= max_order; ++m) {
      out.per_order[static_cast<std::size_t>(m)][ri] += mono * phi.values[i];
      mono *= xk;
    }
  }
  for (auto& row : out.per_order)
    for (auto& v : row) v *= spec.spacing();
  return out;
}

double lizorkin_taper(const LizorkinClass& cls, std::span<const double> xi) {
  if (cls.variant == LizorkinVariant::Phi) {
    double r2 = 0.0;
    for (double c : xi) r2 += c * c;
    return taper_axis(std::sqrt(r2), cls.taper_radius);
  }
  double prod = 1.0;
  for (double c : xi) prod *= taper_axis(c, cls.taper_radius);
  return prod;
}

Field project(const Field& phi, const LizorkinClass& cls) {
  SpectralField F = fourier_forward(phi);
  for (std::size_t i = 0; i < F.coeffs.size(); ++i) {
    const auto xi = freq_point(F.spec, i);
    F.coeffs[i] *= lizorkin_taper(cls, std::span<const double>(xi.data(), F.spec.dim));
  }
  return fourier_inverse(F);
}

} // namespace rzt
