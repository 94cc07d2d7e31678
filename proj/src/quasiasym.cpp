#include "rzt/quasiasym.hpp"

#include <algorithm>
#include <limits>
#include <cmath>

#include "rzt/special.hpp"

namespace rzt {

double Automodel::operator()(double t) const {
  double v = std::pow(t, degree);
  for (int k = 0; k < log_order; ++k) v *= std::log(t);
  return v;
}

// ---------------------------------------------------------------------------
// Evaluator

struct Evaluator::Node {
  Kind kind = Kind::Gaussian;
  int dim = 1;
  Complex amp{1.0, 0.0};
  double a = 0.0;   // power exponent
  int m = 0;        // log order
  double scale = 1.0;
  Field field;
  std::shared_ptr<const FieldInterpolator> interp;
  std::shared_ptr<const SpectralField> spec;
  bool zero_extendable = false;
  std::vector<Evaluator> kids;
};

namespace {

// Fixed smooth origin mollifier: 0 on |x| <= 0.1, 1 on |x| >= 0.2.
double origin_mollifier(double r) { return smoothstep_flat((r - 0.1) / 0.1); }

} // namespace

Evaluator Evaluator::gaussian(double scale, Complex amp) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Gaussian;
  n->scale = scale;
  n->amp = amp;
  return Evaluator(n);
}

Evaluator Evaluator::abs_power(double a, Complex amp) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::AbsPower;
  n->a = a;
  n->amp = amp;
  return Evaluator(n);
}

Evaluator Evaluator::sign_power(double a, Complex amp) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::SignPower;
  n->a = a;
  n->amp = amp;
  return Evaluator(n);
}

Evaluator Evaluator::log_power(double a, int m, Complex amp) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::LogPower;
  n->a = a;
  n->m = m;
  n->amp = amp;
  return Evaluator(n);
}

Evaluator Evaluator::dirac_approx(double scale) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::DiracApprox;
  n->scale = scale;
  return Evaluator(n);
}

Evaluator Evaluator::sqrt1plusx2(Complex amp) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sqrt1PlusX2;
  n->amp = amp;
  return Evaluator(n);
}

Evaluator Evaluator::sqrt1plusx2_fourier(Complex amp) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sqrt1PlusX2Fourier;
  n->amp = amp;
  return Evaluator(n);
}

Evaluator Evaluator::sampled(Field f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sampled;
  n->dim = f.spec.dim;
  n->field = std::move(f);
  n->spec = std::make_shared<const SpectralField>(fourier_forward(n->field));
  n->interp = std::make_shared<const FieldInterpolator>(SpectralField(*n->spec));
  // A field that has decayed to negligible values at the domain boundary
  // represents a function that may be extended by zero outside the window.
  double boundary = 0.0;
  const GridSpec& spec = n->field.spec;
  for (std::size_t i = 0; i < n->field.size(); ++i) {
    const auto idx = unflatten(spec, i);
    bool edge = false;
    for (int a = 0; a < spec.dim; ++a)
      edge = edge || idx[a] == 0 || idx[a] == spec.points_per_axis - 1;
    if (edge) boundary = std::max(boundary, std::abs(n->field.values[i]));
  }
  n->zero_extendable = boundary <= 1e-12 * n->field.max_abs();
  return Evaluator(n);
}

Evaluator Evaluator::pointwise_product(std::vector<Evaluator> factors) {
  if (factors.empty()) throw ParameterError("pointwise_product: no factors");
  auto n = std::make_shared<Node>();
  n->kind = Kind::PointwiseProduct;
  n->dim = factors.front().dim();
  for (const auto& f : factors)
    if (f.dim() != n->dim) throw ParameterError("pointwise_product: dim mismatch");
  n->kids = std::move(factors);
  return Evaluator(n);
}

Evaluator Evaluator::axis_product(std::vector<Evaluator> factors) {
  if (factors.empty() || factors.size() > 3)
    throw ParameterError("axis_product: need 1..3 factors");
  auto n = std::make_shared<Node>();
  n->kind = Kind::AxisProduct;
  n->dim = static_cast<int>(factors.size());
  for (const auto& f : factors)
    if (f.dim() != 1) throw ParameterError("axis_product: factors must be 1-D");
  n->kids = std::move(factors);
  return Evaluator(n);
}

Evaluator::Kind Evaluator::kind() const { return node_->kind; }
int Evaluator::dim() const { return node_->dim; }
Complex Evaluator::amp() const { return node_->amp; }
double Evaluator::power() const { return node_->a; }
double Evaluator::scale() const { return node_->scale; }
int Evaluator::log_exponent() const { return node_->m; }
const Field& Evaluator::field() const { return node_->field; }
const FieldInterpolator& Evaluator::interp() const { return *node_->interp; }
const SpectralField& Evaluator::spectrum() const { return *node_->spec; }
const std::vector<Evaluator>& Evaluator::factors() const { return node_->kids; }
bool Evaluator::zero_extendable() const { return node_->zero_extendable; }

bool Evaluator::even() const {
  switch (node_->kind) {
    case Kind::SignPower:
      return false;
    case Kind::LogPower:
    case Kind::AbsPower:
    case Kind::Gaussian:
    case Kind::DiracApprox:
    case Kind::Sqrt1PlusX2:
    case Kind::Sqrt1PlusX2Fourier:
      return true;
    case Kind::Sampled:
      return false; // unknown; treat as not certified even
    case Kind::PointwiseProduct:
    case Kind::AxisProduct: {
      bool e = true;
      for (const auto& k : node_->kids) e = e && k.even();
      return e;
    }
  }
  return false;
}

namespace {

Complex eval_atom(Evaluator::Kind kind, Complex amp, double a, int m, double scale,
                  double x, bool regularized) {
  using Kind = Evaluator::Kind;
  const double r = std::abs(x);
  switch (kind) {
    case Kind::Gaussian: {
      const double u = x / scale;
      return amp * std::exp(-u * u);
    }
    case Kind::DiracApprox: {
      const double u = x / scale;
      return std::exp(-u * u) / (scale * std::sqrt(M_PI));
    }
    case Kind::Sqrt1PlusX2:
      return amp * std::sqrt(1.0 + x * x);
    case Kind::Sqrt1PlusX2Fourier: {
      if (r == 0.0) return regularized ? Complex(0.0) : Complex(-INFINITY, 0.0);
      const double chi = regularized ? origin_mollifier(r) : 1.0;
      return amp * chi * (-2.0 * bessel_k1(r) / r);
    }
    case Kind::AbsPower: {
      if (r == 0.0) {
        if (a > 0.0) return 0.0;
        if (a == 0.0) return amp;
        return regularized ? Complex(0.0) : Complex(INFINITY, 0.0);
      }
      const double chi = (regularized && a < 0.0) ? origin_mollifier(r) : 1.0;
      return amp * chi * std::pow(r, a);
    }
    case Kind::SignPower: {
      if (r == 0.0) return 0.0;
      const double chi = (regularized && a < 0.0) ? origin_mollifier(r) : 1.0;
      const double sgn = x > 0.0 ? 1.0 : -1.0;
      return amp * chi * sgn * std::pow(r, a);
    }
    case Kind::LogPower: {
      if (r == 0.0) {
        if (a > 0.0) return 0.0; // |x|^a log^m |x| -> 0
        return regularized ? Complex(0.0) : Complex(INFINITY, 0.0);
      }
      const double chi = (regularized && a <= 0.0) ? origin_mollifier(r) : 1.0;
      double v = std::pow(r, a);
      for (int k = 0; k < m; ++k) v *= std::log(r);
      return amp * chi * v;
    }
    default:
      throw ParameterError("eval_atom: not an atom");
  }
}

Complex eval_impl(const Evaluator& f, std::span<const double> x, bool regularized) {
  using Kind = Evaluator::Kind;
  switch (f.kind()) {
    case Kind::Sampled:
      return f.interp().at(x);
    case Kind::PointwiseProduct: {
      Complex p = 1.0;
      for (const auto& k : f.factors()) p *= eval_impl(k, x, regularized);
      return p;
    }
    case Kind::AxisProduct: {
      Complex p = 1.0;
      for (std::size_t a = 0; a < f.factors().size(); ++a)
        p *= eval_impl(f.factors()[a], x.subspan(a, 1), regularized);
      return p;
    }
    default:
      return eval_atom(f.kind(), f.amp(), f.power(), f.log_exponent(), f.scale(),
                       x[0], regularized);
  }
}

} // namespace

Complex Evaluator::eval(std::span<const double> x) const {
  return eval_impl(*this, x, false);
}

Complex Evaluator::eval_regularized(std::span<const double> x) const {
  return eval_impl(*this, x, true);
}

std::optional<double> Evaluator::origin_power() const {
  switch (node_->kind) {
    case Kind::AbsPower:
    case Kind::SignPower:
      return node_->a < 0.0 ? std::optional<double>(node_->a) : std::nullopt;
    case Kind::LogPower:
      return node_->a <= 0.0 ? std::optional<double>(node_->a) : std::nullopt;
    case Kind::Sqrt1PlusX2Fourier:
      return -2.0;
    case Kind::PointwiseProduct: {
      double sum = 0.0;
      bool any = false;
      for (const auto& k : node_->kids)
        if (auto p = k.origin_power()) {
          sum += *p;
          any = true;
        }
      return any ? std::optional<double>(sum) : std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

std::optional<Evaluator> Evaluator::fourier_image() const {
  switch (node_->kind) {
    case Kind::Gaussian: {
      // F[amp e^{-(x/s)^2}] = amp s sqrt(pi) e^{-(s xi / 2)^2}.
      const double s = node_->scale;
      return gaussian(2.0 / s, node_->amp * s * std::sqrt(M_PI));
    }
    case Kind::DiracApprox:
      return gaussian(2.0 / node_->scale, 1.0);
    case Kind::Sqrt1PlusX2:
      return sqrt1plusx2_fourier(node_->amp);
    case Kind::AbsPower: {
      const double a = node_->a;
      // F[|x|^a] = 2 Gamma(a+1) cos(pi (a+1)/2) |xi|^{-a-1}. Degenerate when
      // the constant vanishes (even a >= 0: image is a delta derivative) or
      // Gamma has a pole (negative integers).
      const double r = std::round(a);
      const bool integer = std::abs(a - r) < 1e-12;
      if (integer && (r < 0.0 || std::lround(r) % 2 == 0)) return std::nullopt;
      const Complex c = 2.0 * gamma(Complex(a + 1.0, 0.0)) *
                        std::cos(0.5 * M_PI * (a + 1.0));
      return abs_power(-a - 1.0, node_->amp * c);
    }
    case Kind::SignPower: {
      const double a = node_->a;
      // F[|x|^a sign x] = 2i Gamma(a+1) sin(pi (a+1)/2) |xi|^{-a-1} sign xi,
      // degenerate for odd a >= 0 and at the Gamma poles.
      const double r = std::round(a);
      const bool integer = std::abs(a - r) < 1e-12;
      if (integer && (r < 0.0 || std::lround(r) % 2 == 1)) return std::nullopt;
      const Complex c = Complex(0.0, 2.0) * gamma(Complex(a + 1.0, 0.0)) *
                        std::sin(0.5 * M_PI * (a + 1.0));
      return sign_power(-a - 1.0, node_->amp * c);
    }
    case Kind::AxisProduct: {
      std::vector<Evaluator> imgs;
      for (const auto& k : node_->kids) {
        auto im = k.fourier_image();
        if (!im) return std::nullopt;
        imgs.push_back(*im);
      }
      return axis_product(std::move(imgs));
    }
    default:
      return std::nullopt;
  }
}

std::string Evaluator::describe() const {
  switch (node_->kind) {
    case Kind::Gaussian: return "gaussian(scale=" + std::to_string(node_->scale) + ")";
    case Kind::AbsPower: return "abs_power(" + std::to_string(node_->a) + ")";
    case Kind::SignPower: return "sign_power(" + std::to_string(node_->a) + ")";
    case Kind::LogPower:
      return "log_power(" + std::to_string(node_->a) + "," + std::to_string(node_->m) + ")";
    case Kind::DiracApprox: return "dirac_approx(" + std::to_string(node_->scale) + ")";
    case Kind::Sqrt1PlusX2: return "sqrt1plusx2";
    case Kind::Sqrt1PlusX2Fourier: return "sqrt1plusx2_fourier";
    case Kind::Sampled: return "sampled";
    case Kind::PointwiseProduct: {
      std::string s = "product(";
      for (const auto& k : node_->kids) s += k.describe() + ",";
      s.back() = ')';
      return s;
    }
    case Kind::AxisProduct: {
      std::string s = "axis_product(";
      for (const auto& k : node_->kids) s += k.describe() + ",";
      s.back() = ')';
      return s;
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// TestField

TestField TestField::from_field(Field f) {
  TestField t;
  t.norm2 = f.norm2();
  t.interp = std::make_shared<const FieldInterpolator>(f);
  const double thresh = 1e-15 * f.max_abs();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (std::abs(f.values[i]) <= thresh) continue;
    t.active.push_back(i);
    const auto x = node_point(f.spec, i);
    for (int a = 0; a < f.spec.dim; ++a)
      t.max_active_coord = std::max(t.max_active_coord, std::abs(x[a]));
  }
  t.phi = std::move(f);
  if (t.phi.spec.dim == 1) {
    // Synthesized spectrum: the forward sum evaluated at arbitrary xi; only
    // meaningful where the field's band has decayed, hence the Nyquist clip.
    auto shared = std::make_shared<const Field>(t.phi);
    t.spectrum = [shared](std::span<const double> xi) -> Complex {
      const GridSpec& spec = shared->spec;
      if (std::abs(xi[0]) >= spec.nyquist()) return 0.0;
      Complex sum = 0.0;
      for (std::size_t j = 0; j < shared->size(); ++j)
        sum += std::exp(Complex(0.0, xi[0] * spec.node(static_cast<int>(j)))) *
               shared->values[j];
      return sum * spec.spacing();
    };
  }
  return t;
}

TestField TestField::from_lizorkin(const LizorkinTest& lt) {
  TestField t = from_field(lt.phi);
  LizorkinTest copy = lt; // capture parameters by value
  t.spectrum = [copy](std::span<const double> xi) -> Complex {
    return copy.spectrum(xi);
  };
  t.moment_free = true;
  return t;
}

// ---------------------------------------------------------------------------
// pair_scaled

namespace {

// Exact-power factorization for homogeneous singular atoms: the scaling of
// |x|^a is analytic while the pairing itself is the regularized quadrature.
std::optional<Complex> split_pairing(const Evaluator& f, const TestField& test, double s) {
  using Kind = Evaluator::Kind;
  switch (f.kind()) {
    case Kind::AbsPower: {
      const double a = f.power();
      if (a >= 0.0) return std::nullopt;
      if (test.phi.spec.dim != 1)
        throw ParameterError("pair_scaled: singular atoms are 1-D");
      return f.amp() * std::pow(s, a) * pair_abs_power(1, Complex(a, 0.0), test.phi);
    }
    case Kind::SignPower: {
      const double a = f.power();
      if (a >= 0.0) return std::nullopt;
      const Complex plus = pair_xpm_power(Side::Plus, Complex(a, 0.0), test.phi);
      const Complex minus = pair_xpm_power(Side::Minus, Complex(a, 0.0), test.phi);
      return f.amp() * std::pow(s, a) * (plus - minus);
    }
    case Kind::Sqrt1PlusX2Fourier: {
      // f(s x) = -2/(s x)^2 + r(s x), r(u) = -2 (K1(|u|) - 1/|u|)/|u|.
      const GridSpec& spec = test.phi.spec;
      if (spec.dim != 1) throw ParameterError("pair_scaled: bessel image is 1-D");
      const Complex sing =
          (-2.0 / (s * s)) * pair_abs_power(1, Complex(-2.0, 0.0), test.phi);
      Complex rem = 0.0;
      for (std::size_t idx : test.active) {
        const auto x = node_point(spec, idx);
        const double u = std::abs(s * x[0]);
        if (u == 0.0) continue; // integrable log singularity; single node skipped
        rem += (-2.0 * bessel_k1_minus_pole(u) / u) * test.phi.values[idx];
      }
      rem *= spec.spacing();
      return f.amp() * (sing + rem);
    }
    default:
      return std::nullopt;
  }
}

// Gaussian-family atoms narrower than a few grid cells escape the node sum;
// integrate them on local panels against the interpolated test instead.
std::optional<Complex> concentrated_pairing(const Evaluator& f, const TestField& test,
                                            double s) {
  using Kind = Evaluator::Kind;
  if (f.kind() != Kind::Gaussian && f.kind() != Kind::DiracApprox) return std::nullopt;
  const GridSpec& spec = test.phi.spec;
  if (spec.dim != 1) return std::nullopt;
  const double width = f.scale() / s;
  if (width >= 4.0 * spec.spacing()) return std::nullopt;
  const double reach = std::min(12.0 * width, 0.99 * spec.half_width);
  Complex sum = 0.0;
  const int panels = 24;
  for (int p = -panels; p < panels; ++p) {
    const double a = reach * p / panels;
    const double b = reach * (p + 1) / panels;
    sum += integrate_gl(
        [&](double x) {
          const double sx[1] = {s * x};
          const double xx[1] = {x};
          return f.eval(sx) * test.interp->at(xx);
        },
        a, b, 24);
  }
  return sum;
}

Complex spectral_pairing(const Evaluator& f, const TestField& test, double t) {
  // <g(t.), phi> = (2 pi)^{-n} Dxi^n sum ghat(xi_k) phihat(t xi_k), valid
  // while the dilated spectrum is resolved by the frequency grid.
  const SpectralField& G = f.spectrum();
  double gmax = 0.0;
  for (const auto& c : G.coeffs) gmax = std::max(gmax, std::abs(c));
  const double thresh = 1e-16 * gmax;
  Complex sum = 0.0;
  for (std::size_t i = 0; i < G.coeffs.size(); ++i) {
    if (std::abs(G.coeffs[i]) <= thresh) continue;
    auto xi = freq_point(G.spec, i);
    std::array<double, 3> txi{0.0, 0.0, 0.0};
    for (int a = 0; a < G.spec.dim; ++a) txi[a] = t * xi[a];
    const Complex w = test.spectrum(std::span<const double>(txi.data(), G.spec.dim));
    if (w != Complex(0.0)) sum += G.coeffs[i] * w;
  }
  const double scale = std::pow(G.spec.freq_spacing() / (2.0 * M_PI), G.spec.dim);
  return sum * scale;
}

} // namespace

Complex pair_scaled(const Evaluator& f, const TestField& test, double t, Direction dir) {
  if (!(t > 0.0)) throw ParameterError("pair_scaled: t > 0 required");
  const double s = dir == Direction::Infinity ? t : 1.0 / t;
  if (auto split = split_pairing(f, test, s)) return *split;
  if (auto local = concentrated_pairing(f, test, s)) return *local;

  const GridSpec& spec = test.phi.spec;
  bool clip_outside = false;
  if (f.kind() == Evaluator::Kind::Sampled) {
    if (f.dim() != spec.dim) throw ParameterError("pair_scaled: dimension mismatch");
    // The spectral route pairs the periodized field; legitimate when the
    // field extends by zero or the test cannot see the seam.
    if (dir == Direction::Infinity && test.spectrum &&
        (test.moment_free || f.zero_extendable()))
      return spectral_pairing(f, test, t);
    if (s * test.max_active_coord >= f.field().spec.half_width) {
      if (!f.zero_extendable())
        throw WindowError("pair_scaled: scaled arguments escape the sampled grid; "
                          "enlarge the evaluator's half_width");
      clip_outside = true;
    }
  }

  const double fL = f.kind() == Evaluator::Kind::Sampled ? f.field().spec.half_width : 0.0;
  Complex sum = 0.0;
  for (std::size_t idx : test.active) {
    const auto x = node_point(spec, idx);
    std::array<double, 3> sx{0.0, 0.0, 0.0};
    bool outside = false;
    for (int a = 0; a < spec.dim; ++a) {
      sx[a] = s * x[a];
      if (clip_outside && !(sx[a] >= -fL && sx[a] < fL)) outside = true;
    }
    if (outside) continue; // field decays below threshold out there
    const Complex v = f.eval(std::span<const double>(sx.data(), spec.dim));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) continue; // origin node
    sum += v * test.phi.values[idx];
  }
  return sum * std::pow(spec.spacing(), spec.dim);
}

// ---------------------------------------------------------------------------
// estimate_degree

std::vector<double> TGrid::points() const {
  std::vector<double> ts(static_cast<std::size_t>(count));
  const double ratio = std::log(t_max / t_min);
  for (int i = 0; i < count; ++i)
    ts[static_cast<std::size_t>(i)] = t_min * std::exp(ratio * i / double(count - 1));
  return ts;
}

DegreeEstimate fit_degree_trace(std::vector<double> ts, std::vector<Complex> pairings,
                                Direction dir, FitModel model) {
  DegreeEstimate est;
  est.t_min = ts.front();
  est.t_max = ts.back();
  est.ts = std::move(ts);
  est.pairings = std::move(pairings);

  // Degree -infinity: |pairing| t^10 still decays across the window, or the
  // pairings fall below 1e-6 of their window maximum (decayed to the
  // quadrature noise floor -- faster than any resolvable power).
  const double q_front = std::abs(est.pairings.front()) * std::pow(est.ts.front(), 10.0);
  const double q_back = std::abs(est.pairings.back()) * std::pow(est.ts.back(), 10.0);
  double p_all = 0.0, p_top = 0.0;
  const double log_mid = 0.5 * (std::log(est.t_min) + std::log(est.t_max));
  for (std::size_t i = 0; i < est.ts.size(); ++i) {
    p_all = std::max(p_all, std::abs(est.pairings[i]));
    if (std::log(est.ts[i]) >= log_mid) p_top = std::max(p_top, std::abs(est.pairings[i]));
  }
  if (q_back < 1e-3 * q_front || std::abs(est.pairings.back()) == 0.0 ||
      p_top <= 1e-6 * p_all) {
    est.minus_infinity = true;
    est.valid = true;
    est.degree = -std::numeric_limits<double>::infinity();
    return est;
  }

  // Fit on the top half of the log window.
  std::vector<double> lx, ly, llx;
  for (std::size_t i = 0; i < est.ts.size(); ++i) {
    const double lt = std::log(est.ts[i]);
    const double ap = std::abs(est.pairings[i]);
    if (lt < log_mid || ap == 0.0) continue;
    if (model == FitModel::PowerLog && est.ts[i] <= 3.0) continue;
    lx.push_back(lt);
    ly.push_back(std::log(ap));
    llx.push_back(std::log(std::max(lt, 1e-9)));
  }
  if (lx.size() < 5) {
    est.valid = false;
    return est;
  }

  double slope = 0.0;
  int best_m = 0;
  double best_rms = INFINITY;
  const int m_max = model == FitModel::PowerLog ? 2 : 0;
  for (int m = 0; m <= m_max; ++m) {
    std::vector<double> ym(ly.size());
    for (std::size_t i = 0; i < ly.size(); ++i) ym[i] = ly[i] - m * llx[i];
    const LineFit fit = fit_line(lx, ym);
    if (fit.rms < best_rms) {
      best_rms = fit.rms;
      best_m = m;
      slope = fit.slope;
    }
  }
  est.log_order = best_m;
  est.residual = best_rms;
  est.degree = dir == Direction::Infinity ? slope : -slope;

  // Plateau coefficient: median of the last 5 normalized pairings.
  Automodel rho_hat{slope, best_m};
  std::vector<double> res_re, res_im;
  const std::size_t last = est.ts.size();
  for (std::size_t i = last >= 5 ? last - 5 : 0; i < last; ++i) {
    const Complex c = est.pairings[i] / rho_hat(est.ts[i]);
    res_re.push_back(c.real());
    res_im.push_back(c.imag());
  }
  est.coefficient = Complex(median(res_re), median(res_im));
  est.valid = est.residual <= 0.1;
  return est;
}

DegreeEstimate estimate_degree(const Evaluator& f, const TestField& phi,
                               Direction dir, const TGrid& grid, FitModel model) {
  if (grid.count < 20)
    throw ParameterError("estimate_degree: need >= 20 t-points");
  if (grid.t_max < 100.0 * grid.t_min)
    throw ParameterError("estimate_degree: t-window must span >= 2 decades");
  std::vector<double> ts = grid.points();
  std::vector<Complex> ps(ts.size());
  parallel_for(ts.size(), [&](std::size_t i) { ps[i] = pair_scaled(f, phi, ts[i], dir); });
  return fit_degree_trace(std::move(ts), std::move(ps), dir, model);
}

// ---------------------------------------------------------------------------
// regular variation

AutomodelCheck regular_variation_check(const std::function<double(double)>& rho,
                                       std::span<const double> a_grid,
                                       std::span<const double> t_grid) {
  if (t_grid.size() < 2)
    throw ParameterError("regular_variation_check: need >= 2 t-points");
  AutomodelCheck out;
  const double t1 = t_grid[t_grid.size() - 2];
  const double t2 = t_grid[t_grid.size() - 1];
  const double u1 = 1.0 / std::log(t1), u2 = 1.0 / std::log(t2);
  double drift = 0.0;
  bool finite = true;
  for (double a : a_grid) {
    const double c1 = rho(t1 * a) / rho(t1);
    const double c2 = rho(t2 * a) / rho(t2);
    if (!std::isfinite(c1) || !std::isfinite(c2) || c2 <= 0.0 || c1 <= 0.0) {
      finite = false;
      break;
    }
    drift = std::max(drift, std::abs(c1 / c2 - 1.0));
    // Linear extrapolation in 1/log t to the t -> infinity limit.
    const double cinf = (c2 * u1 - c1 * u2) / (u1 - u2);
    out.a.push_back(a);
    out.c_limit.push_back(cinf);
  }
  if (!finite || drift > 0.5) {
    out.automodel = false;
    return out;
  }
  std::vector<double> la, lc;
  for (std::size_t i = 0; i < out.a.size(); ++i) {
    if (out.c_limit[i] <= 0.0) {
      out.automodel = false;
      return out;
    }
    la.push_back(std::log(out.a[i]));
    lc.push_back(std::log(out.c_limit[i]));
  }
  const LineFit fit = fit_line(la, lc);
  out.alpha_hat = fit.slope;
  for (std::size_t i = 0; i < out.a.size(); ++i) {
    const double pred = std::pow(out.a[i], out.alpha_hat);
    out.max_deviation = std::max(out.max_deviation,
                                 std::abs(out.c_limit[i] - pred) / pred);
  }
  out.automodel = out.max_deviation < 0.05;
  return out;
}

AutomodelCheck regular_variation_check(const Automodel& rho,
                                       std::span<const double> a_grid,
                                       std::span<const double> t_grid) {
  return regular_variation_check([rho](double t) { return rho(t); }, a_grid, t_grid);
}

// ---------------------------------------------------------------------------
// limit form

LimitForm1D fit_limit_form_1d(const Evaluator& f, double limit_degree,
                              const TestField& even_test, const TestField& odd_test,
                              const TGrid& grid, Direction dir) {
  LimitForm1D out;
  out.degree = ComplexDegree(limit_degree);
  const double k_round = std::round(-limit_degree);
  out.lattice_case = limit_degree < 0.0 &&
                     std::abs(limit_degree + k_round) < 1e-9 && k_round >= 1.0;
  out.lattice_k = out.lattice_case ? static_cast<int>(k_round) : 0;
  if (out.lattice_case && out.lattice_k > 1)
    throw ParameterError("fit_limit_form_1d: lattice branch implemented for k = 1 only");

  const TestField* tests[2] = {&even_test, &odd_test};
  const double lambda = dir == Direction::Infinity ? limit_degree : -limit_degree;
  Complex rhs[2];
  Complex M[2][2];
  const auto ts = grid.points();
  for (int i = 0; i < 2; ++i) {
    std::vector<double> re, im;
    for (std::size_t k = ts.size() - 5; k < ts.size(); ++k) {
      const Complex p = pair_scaled(f, *tests[i], ts[k], dir) / std::pow(ts[k], lambda);
      re.push_back(p.real());
      im.push_back(p.imag());
    }
    rhs[i] = Complex(median(re), median(im));
    if (out.lattice_case) {
      M[i][0] = pair_pv_reciprocal(tests[i]->phi);
      const double zero[1] = {0.0};
      M[i][1] = tests[i]->interp->at(zero);
    } else {
      M[i][0] = pair_xpm_power(Side::Plus, Complex(limit_degree, 0.0), tests[i]->phi);
      M[i][1] = pair_xpm_power(Side::Minus, Complex(limit_degree, 0.0), tests[i]->phi);
    }
  }
  auto [c1, c2] = solve_2x2(M, rhs);
  out.c_plus = c1;
  out.c_minus = c2;
  return out;
}

} // namespace rzt
