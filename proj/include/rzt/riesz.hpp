#pragma once

// The Riesz fractional operator D^alpha as a spectral multiplier |xi|^alpha
// (product symbol prod |xi_j|^{alpha_j} for the multi variant), with the
// zero mode -- and the hyperplanes xi_j = 0 for the product symbol --
// annihilated. Annihilation realizes the quotient modulo polynomials, so the
// group law D^alpha D^beta = D^{alpha+beta} and D^alpha D^{-alpha} = id hold
// exactly on the representable class.

#include "rzt/grid.hpp"
#include "rzt/kernels.hpp"
#include "rzt/lizorkin.hpp"
#include "rzt/special.hpp"

namespace rzt {

/// D^alpha f. For Re alpha < 0 the symbol is singular at 0; when the input
/// carries more than 1e-10 of its energy in the taper neighborhood of the
/// zero mode it is projected onto the discrete Lizorkin class first.
Field apply_riesz(const Field& f, ComplexDegree alpha);

/// Multi-Riesz operator with the product symbol; inputs near the hyperplane
/// modes are projected onto the PhiTimes class first under the same rule.
Field apply_multi_riesz(const Field& f, const MultiIndexDegree& alpha);

/// max( ||D^a D^b f - D^{a+b} f|| / ||f||, ||D^a D^{-a} f - f|| / ||f|| ).
double riesz_group_check(const Field& f, ComplexDegree alpha, ComplexDegree beta);

/// Bilinear grid pairing <f, g> = Dx^n sum f g (no conjugation).
Complex pair_fields(const Field& f, const Field& g);

} // namespace rzt
