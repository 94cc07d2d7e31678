#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rzt/tauberian.hpp"

using namespace rzt;

TEST_CASE("theorem 5: homogeneous and hyperbola-type entries") {
  auto r1 = check_theorem5(Evaluator::abs_power(1.0), Automodel{1.0, 0});
  CHECK(r1.verdict == Verdict::Pass);
  CHECK(std::abs(r1.side_a.degree - 1.0) < 1e-6);
  CHECK(std::abs(r1.side_b.degree + 2.0) < 0.05);

  auto r2 = check_theorem5(Evaluator::sqrt1plusx2(), Automodel{1.0, 0});
  CHECK(r2.verdict == Verdict::Pass);
  CHECK(std::abs(r2.side_b.degree + 2.0) < 0.05);

  // Symmetric verifiability: predicting side a from side b gives the same
  // comparison (the equivalence read right-to-left).
  const double predicted_a = -r2.side_b.degree - 1.0;
  CHECK(std::abs(r2.side_a.degree - predicted_a) < 0.05);
}

TEST_CASE("theorem 5: delta branch") {
  // A shrinking bump has the degree -1 delta limit; its transform runs to a
  // constant (degree 0 = -(-1) - 1) at zero.
  auto r = check_theorem5(Evaluator::dirac_approx(0.05), Automodel{-1.0, 0});
  CHECK(r.verdict == Verdict::Pass);
  CHECK(std::abs(r.side_a.degree + 1.0) < 0.01);
  CHECK(std::abs(r.side_b.degree) < 0.01);
}

TEST_CASE("theorem 5: sampled evaluator goes through the grid transform") {
  GridSpec spec(1, 4096, 40.0);
  Field g = sample(spec, [](std::span<const double> x) {
    return Complex(std::exp(-x[0] * x[0]), 0.0);
  });
  auto r = check_theorem5(Evaluator::sampled(std::move(g)), Automodel{-1.0, 0});
  CHECK(r.verdict == Verdict::Pass);
}

TEST_CASE("theorem 6 constants: the self-reciprocal pair") {
  auto r = check_theorem6(Evaluator::abs_power(-0.5), -0.5);
  REQUIRE(r.verdict == Verdict::Pass);
  // C1 = C2 = 1, B1 = B2 = sqrt(2), F-side coefficient Gamma(1/2) sqrt(2).
  CHECK(std::abs(r.constants.at("C1") - 1.0) < 1e-3);
  CHECK(std::abs(r.constants.at("C2") - 1.0) < 1e-3);
  CHECK(std::abs(r.constants.at("B1") - std::sqrt(2.0)) < 5e-3);
  const double root2pi = std::sqrt(2.0 * M_PI);
  CHECK(std::abs(r.constants.at("F_coeff_plus_measured") - root2pi) < 0.05 * root2pi);

  // Even f implies B1 = B2.
  CHECK(std::abs(r.constants.at("B1") - r.constants.at("B2")) < 1e-6);
}

TEST_CASE("theorem 6 lattice branch (k = 1, delta limit)") {
  auto r = check_theorem6_lattice(Evaluator::dirac_approx(0.05));
  REQUIRE(r.verdict == Verdict::Pass);
  CHECK(std::abs(r.constants.at("C1")) < 1e-3);
  CHECK(std::abs(r.constants.at("C2") - 1.0) < 1e-3);
  CHECK(std::abs(r.constants.at("C2_transform_side") - 1.0) < 1e-3);
}

TEST_CASE("theorem 7: half-order shift") {
  auto r = check_theorem7(Evaluator::sqrt1plusx2(), Complex(0.5, 0.0), Automodel{1.0, 0});
  REQUIRE(r.verdict == Verdict::Pass);
  CHECK(std::abs(r.side_b.degree - 0.5) < 0.05);
}

TEST_CASE("theorem 9: plateau and predicted constant") {
  auto r = check_theorem9(Evaluator::abs_power(0.5), 1, Automodel{0.5, 0});
  REQUIRE(r.verdict == Verdict::Pass);
  // A = gamma_1(3/2)/gamma_1(5/2) = 2/3 for f = |x|^{1/2}.
  CHECK(std::abs(r.constants.at("A_measured") - 2.0 / 3.0) < 0.05 * (2.0 / 3.0));
  CHECK(r.constants.at("plateau_variation").real() <= 0.02);

  // Scaling f by 3 scales the primitive (and A) by 3 exactly.
  const Complex one = riesz_primitive_even(Evaluator::abs_power(0.5), 1, 7.0, 1e6);
  const Complex three = riesz_primitive_even(Evaluator::abs_power(0.5, 3.0), 1, 7.0, 1e6);
  CHECK(std::abs(three - 3.0 * one) < 1e-12 * std::abs(three));
}

TEST_CASE("theorem 9: hypothesis failure is inconclusive") {
  auto r = check_theorem9(Evaluator::gaussian(1.0), 1, Automodel{0.5, 0});
  CHECK(r.verdict == Verdict::Inconclusive);
}

TEST_CASE("transforming twice reflects with the 2 pi factor") {
  // F[F[f]](x) = 2 pi f(-x) in one dimension under this convention.
  auto f = Evaluator::gaussian(1.4);
  auto im = f.fourier_image();
  REQUIRE(im.has_value());
  auto im2 = im->fourier_image();
  REQUIRE(im2.has_value());
  for (double x : {0.0, 0.7, 2.1}) {
    const double p[1] = {x};
    CHECK(std::abs(im2->eval(p) - 2.0 * M_PI * f.eval(p)) < 1e-12);
  }
}

TEST_CASE("reports serialize deterministically") {
  auto r1 = check_theorem5(Evaluator::abs_power(1.0), Automodel{1.0, 0});
  auto r2 = check_theorem5(Evaluator::abs_power(1.0), Automodel{1.0, 0});
  CHECK(report_to_json(r1) == report_to_json(r2));
  CHECK(traces_to_csv(r1) == traces_to_csv(r2));
  CHECK(traces_to_csv(r1).rfind("t,re_pairing,im_pairing,normalized\n", 0) == 0);
  CHECK(report_to_json(r1).find("\"theorem\": \"T5\"") != std::string::npos);
}
