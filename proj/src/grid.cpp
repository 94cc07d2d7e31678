#include "rzt/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace rzt {

namespace {

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

// FFTW's planner is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// Plain DFT with sign +1 (e^{+2 pi i jk/N}) or -1, in place on buf.
void run_dft(const GridSpec& spec, std::vector<Complex>& buf, int sign) {
  int dims[3] = {spec.points_per_axis, spec.points_per_axis, spec.points_per_axis};
  auto* data = reinterpret_cast<fftw_complex*>(buf.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft(spec.dim, dims, data, data,
                         sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
}

// Parity (-1)^(k_1+...+k_n) of the signed frequency multi-index equals the
// parity of the storage multi-index because N is even.
int index_parity(const GridSpec& spec, std::size_t flat) {
  int p = 0;
  for (int a = 0; a < spec.dim; ++a) {
    p ^= static_cast<int>(flat % spec.points_per_axis) & 1;
    flat /= spec.points_per_axis;
  }
  return p;
}

} // namespace

GridSpec::GridSpec(int dim_, int n_, double L_) : dim(dim_), points_per_axis(n_), half_width(L_) {
  if (dim < 1 || dim > 3) throw ParameterError("GridSpec: dim must be 1, 2 or 3");
  if (!is_pow2(points_per_axis) || points_per_axis < 64)
    throw ParameterError("GridSpec: points_per_axis must be a power of two >= 64");
  if (!(half_width > 0.0)) throw ParameterError("GridSpec: half_width must be positive");
}

std::size_t GridSpec::cell_count() const {
  std::size_t c = 1;
  for (int a = 0; a < dim; ++a) c *= static_cast<std::size_t>(points_per_axis);
  return c;
}

GridSpec GridSpec::dual() const {
  return GridSpec(dim, points_per_axis, 0.5 * M_PI * points_per_axis / half_width);
}

Field::Field(const GridSpec& s, std::vector<Complex> v) : spec(s), values(std::move(v)) {
  if (values.size() != spec.cell_count())
    throw ParameterError("Field: value count does not match grid");
}

double Field::norm2() const {
  double s = 0.0;
  for (const auto& v : values) s += std::norm(v);
  return std::sqrt(s * std::pow(spec.spacing(), spec.dim));
}

double Field::max_abs() const {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v));
  return m;
}

bool Field::all_finite() const {
  return std::all_of(values.begin(), values.end(),
                     [](const Complex& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

std::array<int, 3> unflatten(const GridSpec& spec, std::size_t flat) {
  std::array<int, 3> idx{0, 0, 0};
  for (int a = spec.dim - 1; a >= 0; --a) {
    idx[a] = static_cast<int>(flat % spec.points_per_axis);
    flat /= spec.points_per_axis;
  }
  return idx;
}

std::size_t flatten(const GridSpec& spec, const std::array<int, 3>& idx) {
  std::size_t flat = 0;
  for (int a = 0; a < spec.dim; ++a)
    flat = flat * spec.points_per_axis + static_cast<std::size_t>(idx[a]);
  return flat;
}

std::array<double, 3> node_point(const GridSpec& spec, std::size_t flat) {
  auto idx = unflatten(spec, flat);
  std::array<double, 3> x{0.0, 0.0, 0.0};
  for (int a = 0; a < spec.dim; ++a) x[a] = spec.node(idx[a]);
  return x;
}

std::array<double, 3> freq_point(const GridSpec& spec, std::size_t flat) {
  auto idx = unflatten(spec, flat);
  std::array<double, 3> xi{0.0, 0.0, 0.0};
  for (int a = 0; a < spec.dim; ++a) xi[a] = spec.freq(idx[a]);
  return xi;
}

SpectralField fourier_forward(const Field& f) {
  // xi_k . x_j = -pi(k_1+...+k_n) + 2 pi j.k/N, so the continuous-convention
  // sum is the e^{+i} DFT times (-1)^(sum k) and the Dx^n quadrature weight.
  SpectralField F(f.spec);
  F.coeffs = f.values;
  run_dft(f.spec, F.coeffs, +1);
  const double scale = std::pow(f.spec.spacing(), f.spec.dim);
  for (std::size_t i = 0; i < F.coeffs.size(); ++i)
    F.coeffs[i] *= index_parity(f.spec, i) ? -scale : scale;
  return F;
}

Field fourier_inverse(const SpectralField& F) {
  Field f(F.spec);
  f.values = F.coeffs;
  for (std::size_t i = 0; i < f.values.size(); ++i)
    if (index_parity(F.spec, i)) f.values[i] = -f.values[i];
  run_dft(F.spec, f.values, -1);
  const double scale =
      std::pow(F.spec.freq_spacing() / (2.0 * M_PI), F.spec.dim);
  for (auto& v : f.values) v *= scale;
  return f;
}

Field spectral_to_field(const SpectralField& F) {
  Field out(F.spec.dual());
  const int n = F.spec.points_per_axis;
  for (std::size_t i = 0; i < F.coeffs.size(); ++i) {
    auto idx = unflatten(F.spec, i); // storage order
    std::array<int, 3> shifted{0, 0, 0};
    for (int a = 0; a < F.spec.dim; ++a)
      shifted[a] = (F.spec.signed_index(idx[a]) + n / 2); // node index on dual grid
    out.values[flatten(out.spec, shifted)] = F.coeffs[i];
  }
  return out;
}

FieldInterpolator::FieldInterpolator(const Field& f) : F_(fourier_forward(f)) {}
FieldInterpolator::FieldInterpolator(SpectralField F) : F_(std::move(F)) {}

Complex FieldInterpolator::at(std::span<const double> x) const {
  const auto& spec = F_.spec;
  const int n = spec.points_per_axis;
  const double L = spec.half_width;
  for (int a = 0; a < spec.dim; ++a) {
    if (!(x[a] >= -L && x[a] < L))
      throw DomainError("trig_interpolate: point outside [-L, L)");
  }
  // Per-axis phase tables e^{-i xi_k x_a}, then a tensor contraction.
  std::array<std::vector<Complex>, 3> phase;
  for (int a = 0; a < spec.dim; ++a) {
    phase[a].resize(n);
    for (int m = 0; m < n; ++m)
      phase[a][m] = std::exp(Complex(0.0, -spec.freq(m) * x[a]));
  }
  Complex sum = 0.0;
  if (spec.dim == 1) {
    for (int m = 0; m < n; ++m) sum += F_.coeffs[m] * phase[0][m];
  } else if (spec.dim == 2) {
    for (int m0 = 0; m0 < n; ++m0) {
      Complex row = 0.0;
      const Complex* base = F_.coeffs.data() + static_cast<std::size_t>(m0) * n;
      for (int m1 = 0; m1 < n; ++m1) row += base[m1] * phase[1][m1];
      sum += phase[0][m0] * row;
    }
  } else {
    for (int m0 = 0; m0 < n; ++m0)
      for (int m1 = 0; m1 < n; ++m1) {
        Complex row = 0.0;
        const Complex* base =
            F_.coeffs.data() + (static_cast<std::size_t>(m0) * n + m1) * n;
        for (int m2 = 0; m2 < n; ++m2) row += base[m2] * phase[2][m2];
        sum += phase[0][m0] * phase[1][m1] * row;
      }
  }
  const double scale = std::pow(spec.freq_spacing() / (2.0 * M_PI), spec.dim);
  return sum * scale;
}

Complex FieldInterpolator::derivative_at_zero(const std::array<int, 3>& order) const {
  const auto& spec = F_.spec;
  Complex sum = 0.0;
  for (std::size_t i = 0; i < F_.coeffs.size(); ++i) {
    auto xi = freq_point(spec, i);
    Complex w = 1.0;
    for (int a = 0; a < spec.dim; ++a)
      for (int p = 0; p < order[a]; ++p) w *= Complex(0.0, -xi[a]);
    sum += w * F_.coeffs[i];
  }
  return sum * std::pow(spec.freq_spacing() / (2.0 * M_PI), spec.dim);
}

Complex trig_interpolate(const Field& f, std::span<const double> x) {
  return FieldInterpolator(f).at(x);
}

Field sample(const GridSpec& spec, const std::function<Complex(std::span<const double>)>& fn) {
  Field f(spec);
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    auto x = node_point(spec, i);
    f.values[i] = fn(std::span<const double>(x.data(), spec.dim));
  }
  return f;
}

Field axpby(Complex a, const Field& f, Complex b, const Field& g) {
  if (!(f.spec == g.spec)) throw ParameterError("axpby: grid mismatch");
  Field out(f.spec);
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = a * f.values[i] + b * g.values[i];
  return out;
}

Field reflect(const Field& f) {
  // -x_j = x_{(N-j) mod N} modulo the period, exactly on nodes.
  Field out(f.spec);
  const int n = f.spec.points_per_axis;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    auto idx = unflatten(f.spec, i);
    std::array<int, 3> r{0, 0, 0};
    for (int a = 0; a < f.spec.dim; ++a) r[a] = (n - idx[a]) % n;
    out.values[flatten(f.spec, r)] = f.values[i];
  }
  return out;
}

double low_mode_energy_fraction(const SpectralField& F, double radius) {
  double low = 0.0, total = 0.0;
  for (std::size_t i = 0; i < F.coeffs.size(); ++i) {
    const double e = std::norm(F.coeffs[i]);
    total += e;
    auto xi = freq_point(F.spec, i);
    double r2 = 0.0;
    for (int a = 0; a < F.spec.dim; ++a) r2 += xi[a] * xi[a];
    if (r2 <= radius * radius) low += e;
  }
  return total > 0.0 ? low / total : 0.0;
}

// ---------------------------------------------------------------------------
// numerics.hpp out-of-line pieces (kept here to avoid a one-function TU).

const std::vector<std::pair<double, double>>& gauss_legendre(int order) {
  static std::mutex mu;
  static std::vector<std::vector<std::pair<double, double>>> cache(129);
  std::lock_guard<std::mutex> lock(mu);
  if (order < 2 || order > 128) order = 32;
  auto& entry = cache[order];
  if (!entry.empty()) return entry;
  // Newton iteration on Legendre P_n from the Chebyshev initial guess.
  entry.reserve(order);
  for (int i = 0; i < order; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double p0 = 0.0, p1 = 0.0;
    for (int it = 0; it < 100; ++it) {
      p0 = 1.0;
      p1 = 0.0;
      for (int j = 0; j < order; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      const double dp = order * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    p1 = 0.0;
    p0 = 1.0;
    for (int j = 0; j < order; ++j) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
    }
    const double dp = order * (x * p0 - p1) / (x * x - 1.0);
    entry.emplace_back(x, 2.0 / ((1.0 - x * x) * dp * dp));
  }
  return entry;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  LineFit fit;
  const double det = n * sxx - sx * sx;
  fit.slope = (n * sxy - sx * sy) / det;
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - fit.intercept - fit.slope * x[i];
    ss += r * r;
  }
  fit.rms = std::sqrt(ss / n);
  return fit;
}

PlaneFit fit_plane(std::span<const double> x, std::span<const double> z,
                   std::span<const double> y) {
  // Normal equations for y ~ a + b x + c z.
  const std::size_t n = x.size();
  double m[3][4] = {};
  for (std::size_t i = 0; i < n; ++i) {
    const double row[3] = {1.0, x[i], z[i]};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) m[r][c] += row[r] * row[c];
      m[r][3] += row[r] * y[i];
    }
  }
  // Gaussian elimination with partial pivoting.
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    std::swap(m[col], m[piv]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
    }
  }
  PlaneFit fit;
  fit.a = m[0][3] / m[0][0];
  fit.b = m[1][3] / m[1][1];
  fit.c = m[2][3] / m[2][2];
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - fit.a - fit.b * x[i] - fit.c * z[i];
    ss += r * r;
  }
  fit.rms = std::sqrt(ss / n);
  return fit;
}

std::pair<Complex, Complex> solve_2x2(const Complex M[2][2], const Complex rhs[2],
                                      double rcond) {
  const Complex det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
  double scale = 0.0;
  for (int r = 0; r < 2; ++r)
    scale = std::max(scale, std::abs(M[r][0]) + std::abs(M[r][1]));
  if (std::abs(det) <= rcond * scale * scale)
    throw ConditioningError("solve_2x2: singular limit-form system (degenerate test pair)");
  return {(rhs[0] * M[1][1] - rhs[1] * M[0][1]) / det,
          (M[0][0] * rhs[1] - M[1][0] * rhs[0]) / det};
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

int thread_count_hint() {
  if (const char* env = std::getenv("RZT_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1 && v <= 64) return v;
  }
  return 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const int threads = std::min<std::size_t>(thread_count_hint(), n ? n : 1);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (std::size_t i = t; i < n; i += threads) body(i);
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

} // namespace rzt
