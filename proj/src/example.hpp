#pragma once

#include <string>
#include <vector>

#include "cech.hpp"
#include "factor.hpp"

namespace stokes {

// The rank-one pole with exponent 1/t plus one extra component elsewhere:
// the smallest configuration whose Stokes matrices are nontrivial.  All of
// the combinatorics below (cover cells, gluing words, basis choices) are a
// worked computation for that geometry, recorded as data.
struct ExampleBundle {
  CechDatum fine_pi, fine_zero;      // 22-copy covers near theta = pi and 0
  CechDatum coarse_pi, coarse_zero;  // 2-cell covers on the half-planes
  // Coarse cells pushed into the fine cover: the cover's own cells and the
  // opposite half-plane's cells continued across the boundary.
  std::vector<RefinementEntry> base_pi, tilde_pi;
  std::vector<RefinementEntry> base_zero, tilde_zero;
  GroupWord rot_zero_to_pi;  // identity
  GroupWord rot_pi_to_zero;  // U
};

ExampleBundle build_bundle();

// Change-of-basis matrices between the two coarse bases, computed inside
// the fine covers.  n_pi compares the theta = 0 basis continued to pi
// against the theta = pi basis; n_zero the other way around.
RingMat n_pi_symbolic(const ExampleBundle& bundle);
RingMat n_zero_symbolic(const ExampleBundle& bundle);
RatMat n_pi_matrix(const ExampleBundle& bundle, const MonodromyRep& rep);
RatMat n_zero_matrix(const ExampleBundle& bundle, const MonodromyRep& rep);

// Stokes matrices of the example: s01 crosses the boundary at pi (no
// rotation needed), s10 crosses at 0 after a full turn, so the rotation
// word U multiplies in.
struct StokesDatum {
  Backend backend = Backend::Symbolic;
  std::vector<ExponentialFactor> factors;  // block grading, ordered
  RingMat n_pi, n_zero;       // raw change-of-basis matrices
  RingMat s01, s10;
  std::size_t r = 0;          // matrix backend only
  RatMat s01_mat, s10_mat;    // matrix backend only
};

StokesDatum stokes_data(const MonodromyRep& rep);

// Empty when the datum has the required shape: s01 upper and s10 lower
// block-triangular, diagonal blocks and the full matrices invertible under
// the representation, block count matching the factor grading.
std::vector<std::string> validate_stokes_datum(const StokesDatum& sd,
                                               const MonodromyRep& rep);

// s10 * s01: the total monodromy of the filtered local system.
RingMat total_monodromy(const StokesDatum& sd);
RatMat total_monodromy_matrix(const StokesDatum& sd);

}  // namespace stokes
