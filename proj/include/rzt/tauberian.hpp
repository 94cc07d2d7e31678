#pragma once

// Executable verification of the five Tauberian equivalences: each check
// measures both sides of an "if and only if" numerically and reports a
// structured verdict.
//
//   T5: degree alpha at infinity (rho)  <->  transform degree -alpha-n at
//       zero (t^n rho).
//   T6: the 1-D limit-form constants (C1, C2) map to the transform-side
//       coefficients Gamma(alpha+1) B1,2 with B = C1 e^{+-i(alpha+1)pi/2} +
//       C2 e^{-+i(alpha+1)pi/2}.
//   T7: D^beta shifts the degree by -Re beta (comparison t^{-beta} rho).
//   T8: the product operator shifts by -Re|beta| on product-type tests.
//   T9: the N-th fractional primitive of an even quasi-asymptotic has a
//       pointwise plateau D^{-N}f / (|x|^N rho(|x|)) -> A != 0.

#include <map>
#include <string>

#include "rzt/quasiasym.hpp"
#include "rzt/riesz.hpp"

namespace rzt {

enum class Theorem { T5, T6, T7, T8, T9 };
enum class Verdict { Pass, Fail, Inconclusive };

std::string theorem_name(Theorem t);
std::string verdict_name(Verdict v);

struct TraceRow {
  double t = 0.0;
  Complex pairing{0.0, 0.0};
  Complex normalized{0.0, 0.0};
};

struct TauberianReport {
  Theorem theorem = Theorem::T5;
  Verdict verdict = Verdict::Inconclusive;
  DegreeEstimate side_a;
  DegreeEstimate side_b;
  /// Predicted and measured constants, keyed by name (C1, C2, B1, B2, A, ...),
  /// each value paired with the tolerance it was checked at.
  std::map<std::string, Complex> constants;
  double tol_degree = 0.05;
  double tol_constant = 0.05; // relative
  std::string diagnostics;
  std::vector<TraceRow> trace_a, trace_b;
};

// Per-theorem run configurations; defaults are the desk-scale settings the
// acceptance suite runs at.

struct Theorem5Config {
  GridSpec grid{1, 4096, 40.0};
  TGrid tgrid_a{1.0, 1000.0, 25};
  TGrid tgrid_b{1.0, 1000.0, 25};
  double tol_degree = 0.05;
};

/// Side b uses the evaluator's closed-form Fourier image when the catalog
/// provides one, and the grid transform for sampled decaying inputs.
TauberianReport check_theorem5(const Evaluator& f, const Automodel& rho,
                               const Theorem5Config& cfg = {});

struct Theorem6Config {
  GridSpec grid{1, 4096, 40.0};
  TGrid tgrid{1.0, 1000.0, 25};
  double tol_constant = 0.05;
};

/// Generic branch (alpha not a negative integer). The expected limit-form
/// coefficients of f at infinity are measured, not assumed.
TauberianReport check_theorem6(const Evaluator& f, double alpha,
                               const Theorem6Config& cfg = {});

/// Lattice branch k = 1 (delta-type limits).
TauberianReport check_theorem6_lattice(const Evaluator& f, const Theorem6Config& cfg = {});

struct Theorem7Config {
  GridSpec grid{1, 1 << 20, 10000.0};
  double test_k0 = 30.0;
  double test_sigma = 6.0;
  TGrid tgrid{45.0, 4500.0, 25};
  double tol_degree = 0.05;
  double tol_constant = 0.10;
};

TauberianReport check_theorem7(const Evaluator& f, Complex beta, const Automodel& rho,
                               const Theorem7Config& cfg = {});

struct Theorem8Config {
  GridSpec axis_grid{1, 1 << 20, 10000.0};
  GridSpec plane_grid{2, 1024, 8.0};
  double test_k0 = 30.0;
  double test_sigma = 6.0;
  TGrid tgrid{45.0, 4500.0, 25};
  double tol_degree = 0.10;
  double moment_tolerance = 1e-8;
};

/// Product inputs f = f1(x1) f2(x2) against product-type tests; the pairings
/// factor exactly on the tensor grid and are computed per axis.
TauberianReport check_theorem8(const std::vector<Evaluator>& axis_factors,
                               const MultiIndexDegree& beta, const Automodel& rho,
                               const Theorem8Config& cfg = {});

struct Theorem9Config {
  GridSpec grid{1, 4096, 40.0};   // side-a measurement grid
  TGrid tgrid{1.0, 1000.0, 25};   // side-a estimator window
  double x_lo = 0.5, x_hi = 50.0; // plateau sample window
  int x_count = 25;
  double plateau_tolerance = 0.02;
  double tol_constant = 0.05;
  double tail_cutoff = 1e8;       // convolution truncation radius
};

/// The measured side evaluates D^{-N}f by direct regularized convolution
/// with the explicit kernel (the definition), pointwise on a geometric grid.
TauberianReport check_theorem9(const Evaluator& f, int N, const Automodel& rho,
                               const Theorem9Config& cfg = {});

/// D^{-N}f(x) for even f by the convolution with kappa_N, with the even-pair
/// polynomial subtraction that pins the canonical representative. N in {1,2,3}.
Complex riesz_primitive_even(const Evaluator& f, int N, double x, double tail_cutoff);

/// Report serialization: deterministic JSON document and CSV trace rows
/// with header "t,re_pairing,im_pairing,normalized".
std::string report_to_json(const TauberianReport& r);
std::string traces_to_csv(const TauberianReport& r);

} // namespace rzt
