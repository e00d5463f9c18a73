#pragma once

#include <vector>

#include "rational.hpp"

namespace stokes {

// One term of a trigonometric combination: coeff * cos(angle_pi * pi).
struct CosTerm {
  mpq_class coeff;
  mpq_class angle_pi;  // in units of pi
};

// Dense integer polynomial; index i holds the coefficient of x^i.
using ZPoly = std::vector<mpz_class>;

// Cyclotomic polynomial Phi_M (monic, integer coefficients), memoized.
// Computed by the Moebius product formula with exact binomial multiply/divide.
const ZPoly& cyclotomic(unsigned long M);

// Exact decision: sum coeff_i * cos(pi * a_i) == 0.
// Reduces the corresponding element of Q(zeta_M), M = 2*lcm(denominators),
// modulo Phi_M; zero iff the residue vanishes. Purely integer arithmetic.
bool cos_combination_is_zero(const std::vector<CosTerm>& terms);

// Exact sign in {-1, 0, +1}. Zero comes from the cyclotomic test; a nonzero
// sign is read off a floating estimate once its conservative error bound
// separates it from zero, escalating precision until it does.
int sign_of_cos_combination(const std::vector<CosTerm>& terms);

}  // namespace stokes
