#pragma once

// Quasi-asymptotic machinery: automodel comparison functions rho(t) =
// t^alpha log^m t, scaled distributional pairings <f(t.), phi> and
// <f(./t), phi>, and least-squares estimation of the quasi-asymptotic
// degree at infinity and at zero.
//
// Degree conventions follow the source definitions: at infinity the degree
// is the growth exponent of the pairing itself; at zero the reported degree
// is MINUS the fitted exponent (the comparison function of degree alpha
// certifies quasi-asymptotics of degree -alpha at zero).

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rzt/grid.hpp"
#include "rzt/kernels.hpp"
#include "rzt/lizorkin.hpp"

namespace rzt {

/// Regularly varying comparison function rho(t) = t^degree log^m t.
struct Automodel {
  double degree = 0.0;
  int log_order = 0;
  double operator()(double t) const;
};

/// Pointwise-evaluable distribution at desk scale: catalog closed forms,
/// their products, or a sampled field evaluated by trigonometric
/// interpolation. Catalog atoms know their origin singularity and, where
/// textbook closed forms exist, their Fourier images.
class Evaluator {
public:
  enum class Kind {
    Gaussian,            // amp exp(-(x/scale)^2)
    AbsPower,            // amp |x|^a
    SignPower,           // amp |x|^a sign x
    LogPower,            // amp |x|^a log^m |x|
    DiracApprox,         // exp(-(x/scale)^2) / (scale sqrt(pi)), unit mass
    Sqrt1PlusX2,         // amp sqrt(1 + x^2)
    Sqrt1PlusX2Fourier,  // amp (-2 K1(|xi|) / |xi|), the transform of the above
    Sampled,             // trig interpolation of a grid field
    PointwiseProduct,    // product of same-axis factors
    AxisProduct          // f1(x1) ... fn(xn)
  };

  static Evaluator gaussian(double scale = 1.0, Complex amp = 1.0);
  static Evaluator abs_power(double a, Complex amp = 1.0);
  static Evaluator sign_power(double a, Complex amp = 1.0);
  static Evaluator log_power(double a, int m, Complex amp = 1.0);
  static Evaluator dirac_approx(double scale);
  static Evaluator sqrt1plusx2(Complex amp = 1.0);
  static Evaluator sqrt1plusx2_fourier(Complex amp = 1.0);
  static Evaluator sampled(Field f);
  static Evaluator pointwise_product(std::vector<Evaluator> factors);
  static Evaluator axis_product(std::vector<Evaluator> factors);

  Kind kind() const;
  int dim() const;
  bool even() const;

  /// Raw value; may be infinite at the origin for singular atoms.
  Complex eval(std::span<const double> x) const;
  /// Value with the fixed smooth origin mollifier (vanishing on |x| < 0.1)
  /// applied to singular atoms; used when sampling fields.
  Complex eval_regularized(std::span<const double> x) const;

  /// Local power at the origin for singular atoms (AbsPower -> a, ...).
  std::optional<double> origin_power() const;
  /// Closed-form Fourier image under F[f](xi) = int e^{i xi x} f dx.
  std::optional<Evaluator> fourier_image() const;

  Complex amp() const;
  double power() const;     // a for the power atoms
  double scale() const;     // gaussian/dirac scale
  int log_exponent() const; // m for LogPower
  const Field& field() const;                 // Sampled
  const FieldInterpolator& interp() const;    // Sampled
  const SpectralField& spectrum() const;      // Sampled
  /// Sampled field decayed below 1e-12 of its peak at the boundary, so it
  /// extends by zero outside the window instead of raising WindowError.
  bool zero_extendable() const;
  const std::vector<Evaluator>& factors() const;

  std::string describe() const;

private:
  struct Node;
  explicit Evaluator(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// A test function together with cached structure for repeated pairings.
struct TestField {
  Field phi;
  std::shared_ptr<const FieldInterpolator> interp;
  std::vector<std::size_t> active;  // nodes with |phi| above threshold
  double max_active_coord = 0.0;
  /// Spectrum at arbitrary frequencies, matching fourier_forward(phi):
  /// closed form for Lizorkin tests, otherwise synthesized from the samples
  /// (1-D fields; zero beyond the Nyquist band).
  std::function<Complex(std::span<const double>)> spectrum;
  /// True when every moment of the test vanishes (Lizorkin construction);
  /// such tests are blind to periodization seams of sampled evaluators.
  bool moment_free = false;
  double norm2 = 0.0;

  static TestField from_field(Field f);
  static TestField from_lizorkin(const LizorkinTest& t);
};

enum class Direction { Infinity, Zero };

/// <f(t.), phi> (Infinity) or <f(./t), phi> (Zero), by quadrature of
/// f(s x_j) phi(x_j) over the grid with s = t or 1/t. Homogeneous singular
/// atoms factor the exact power of s out of the regularized pairing; sampled
/// evaluators paired at infinity use the spectral form when the test carries
/// an analytic spectrum, and otherwise must stay inside the grid window.
Complex pair_scaled(const Evaluator& f, const TestField& phi, double t, Direction dir);

/// Geometric t-grid; at least 20 points over at least two decades.
struct TGrid {
  double t_min = 1.0;
  double t_max = 100.0;
  int count = 24;
  std::vector<double> points() const;
};

enum class FitModel { PurePower, PowerLog };

struct DegreeEstimate {
  double degree = 0.0;
  int log_order = 0;
  Complex coefficient{0.0, 0.0};
  double residual = 0.0;
  double t_min = 0.0, t_max = 0.0;
  bool valid = false;
  bool minus_infinity = false;
  std::vector<double> ts;
  std::vector<Complex> pairings;
};

/// Least-squares fit of log|pairing| on the top half of the log-t window.
DegreeEstimate estimate_degree(const Evaluator& f, const TestField& phi,
                               Direction dir, const TGrid& grid, FitModel model);

/// Fit a precomputed pairing trace (the estimator core; used directly when
/// pairings are assembled from factors).
DegreeEstimate fit_degree_trace(std::vector<double> ts, std::vector<Complex> pairings,
                                Direction dir, FitModel model);

struct AutomodelCheck {
  std::vector<double> a;
  std::vector<double> c_limit; // C(a) after 1/log t extrapolation
  double alpha_hat = 0.0;
  double max_deviation = 0.0;  // max |C(a) - a^alpha_hat| / a^alpha_hat
  bool automodel = false;
};

/// Empirical C(a) = lim rho(t a)/rho(t) from the largest t's (with a linear
/// 1/log t extrapolation step) and the fitted degree.
AutomodelCheck regular_variation_check(const std::function<double(double)>& rho,
                                       std::span<const double> a_grid,
                                       std::span<const double> t_grid);
AutomodelCheck regular_variation_check(const Automodel& rho,
                                       std::span<const double> a_grid,
                                       std::span<const double> t_grid);

/// Solve <g, phi_i> = C1 <x_+^d, phi_i> + C2 <x_-^d, phi_i> from the measured
/// plateau pairings of f against an even/odd test pair (n = 1); at d = -1 the
/// lattice basis {P(1/x), delta} is used.
LimitForm1D fit_limit_form_1d(const Evaluator& f, double limit_degree,
                              const TestField& even_test, const TestField& odd_test,
                              const TGrid& grid, Direction dir = Direction::Infinity);

} // namespace rzt
