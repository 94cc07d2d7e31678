#include "rzt/special.hpp"

#include <cmath>

namespace rzt {

namespace {

// Lanczos approximation, g = 607/128, 15 terms.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

Complex lanczos_sum(Complex z) {
  Complex s = kLanczos[0];
  for (int k = 1; k < 15; ++k) s += kLanczos[k] / (z + double(k - 1));
  return s;
}

void check_pole(Complex z) {
  if (z.imag() != 0.0) return;
  const double r = std::round(z.real());
  if (r <= 0.0 && std::abs(z.real() - r) < 1e-12)
    throw GammaPoleError(static_cast<long long>(r));
}

} // namespace

Complex gamma(Complex z) {
  check_pole(z);
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    return M_PI / (std::sin(M_PI * z) * gamma(1.0 - z));
  }
  const Complex base = z + (kLanczosG - 0.5);
  return std::sqrt(2.0 * M_PI) * std::pow(base, z - 0.5) * std::exp(-base) *
         lanczos_sum(z);
}

Complex log_gamma(Complex z) {
  if (z.real() <= 0.0)
    throw ParameterError("log_gamma requires Re z > 0");
  const Complex base = z + (kLanczosG - 0.5);
  return 0.5 * std::log(2.0 * M_PI) + (z - 0.5) * std::log(base) - base +
         std::log(lanczos_sum(z));
}

double log_kernel_constant(int dim, int s) {
  double fact = 1.0;
  for (int k = 2; k <= s; ++k) fact *= k;
  const double sign = (s % 2 == 0) ? 1.0 : -1.0;
  return sign * std::pow(2.0, dim + 2 * s - 1) * std::pow(M_PI, 0.5 * dim) *
         fact * std::tgamma(0.5 * dim + s);
}

NormalizerValue riesz_normalizer(int dim, ComplexDegree alpha) {
  if (dim < 1 || dim > 3) throw ParameterError("riesz_normalizer: dim must be 1..3");
  constexpr double kLatticeTol = 1e-12;
  if (alpha.is_real()) {
    const double a = alpha.value.real();
    // alpha = -2s: kappa_{-2s} = (-Laplacian)^s delta.
    const double sd = -0.5 * a;
    const double sd_round = std::round(sd);
    if (sd_round >= 0.0 && std::abs(a + 2.0 * sd_round) < kLatticeTol) {
      NormalizerValue v;
      v.kind = NormalizerKind::DeltaKernel;
      v.s = static_cast<int>(sd_round);
      v.value = Complex(sd_round, 0.0);
      return v;
    }
    // alpha = n + 2s: log kernel.
    const double sl = 0.5 * (a - dim);
    const double sl_round = std::round(sl);
    if (sl_round >= 0.0 && std::abs(a - dim - 2.0 * sl_round) < kLatticeTol) {
      NormalizerValue v;
      v.kind = NormalizerKind::LogKernel;
      v.s = static_cast<int>(sl_round);
      v.value = Complex(log_kernel_constant(dim, v.s), 0.0);
      return v;
    }
  }
  NormalizerValue v;
  v.kind = NormalizerKind::Regular;
  v.value = std::pow(Complex(2.0, 0.0), alpha.value) * std::pow(M_PI, 0.5 * dim) *
            gamma(0.5 * alpha.value) / gamma(0.5 * (double(dim) - alpha.value));
  return v;
}

// ---------------------------------------------------------------------------
// Modified Bessel K0, K1: power series for z <= 8, asymptotic beyond.

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

double bessel_i0(double z) {
  const double q = 0.25 * z * z;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    term *= q / (double(k) * k);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

double bessel_i1(double z) {
  const double q = 0.25 * z * z;
  double term = 0.5 * z, sum = term;
  for (int k = 1; k < 60; ++k) {
    term *= q / (double(k) * (k + 1.0));
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

double k_asymptotic(int nu, double z) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k <= 14; ++k) {
    term *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * z * k);
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return std::sqrt(0.5 * M_PI / z) * std::exp(-z) * sum;
}

// K1(z) - 1/z by its series (z <= 8).
double k1_series_minus_pole(double z) {
  const double q = 0.25 * z * z;
  const double lg = std::log(0.5 * z);
  double sum = 0.0;
  double factor = 0.5 * z;  // (z/2) (z^2/4)^k / (k!(k+1)!)
  double hk = 0.0;          // H_k
  for (int k = 0; k < 60; ++k) {
    const double hk1 = hk + 1.0 / (k + 1.0);                 // H_{k+1}
    const double psi_sum = (hk - kEulerGamma) + (hk1 - kEulerGamma);
    const double term = factor * (lg - 0.5 * psi_sum);
    sum += term;
    if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300) && k > 3) break;
    factor *= q / (double(k + 1) * (k + 2.0));
    hk = hk1;
  }
  return sum;
}

} // namespace

double bessel_k0(double z) {
  if (!(z > 0.0)) throw ParameterError("bessel_k0 requires z > 0");
  if (z > 8.0) return k_asymptotic(0, z);
  const double q = 0.25 * z * z;
  double sum = -(std::log(0.5 * z) + kEulerGamma) * bessel_i0(z);
  double term = 1.0, hk = 0.0;
  for (int k = 1; k < 60; ++k) {
    term *= q / (double(k) * k);
    hk += 1.0 / k;
    const double add = term * hk;
    sum += add;
    if (add < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double bessel_k1(double z) {
  if (!(z > 0.0)) throw ParameterError("bessel_k1 requires z > 0");
  if (z > 8.0) return k_asymptotic(1, z);
  return 1.0 / z + k1_series_minus_pole(z);
}

double bessel_k1_minus_pole(double z) {
  if (!(z > 0.0)) throw ParameterError("bessel_k1_minus_pole requires z > 0");
  if (z > 8.0) return k_asymptotic(1, z) - 1.0 / z;
  return k1_series_minus_pole(z);
}

} // namespace rzt
