#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratmat.hpp"
#include "rep.hpp"
#include "ring.hpp"

namespace stokes {

// One-cells may be listed with multiplicity; each copy is a separate row of
// the complex.  An incidence records that a copy of a one-cell is glued to a
// zero-cell with a sign and a twisting group word.
struct OneCell {
  std::string label;
  std::size_t multiplicity = 1;
};

struct Incidence {
  std::size_t copy = 0;  // index into expanded copies
  long zero_cell = 0;    // id from CechDatum::zero_cells
  int sign = 1;
  GroupWord word;  // identity when untwisted
};

struct CechDatum {
  std::vector<long> zero_cells;  // ids; order fixes the elimination scan
  std::vector<OneCell> one_cells;
  std::vector<Incidence> incidences;
  std::vector<std::size_t> basis_cells;  // copy indices spanning H^1

  std::size_t copy_count() const;
  // Expanded labels; "#k" suffix when a cell has multiplicity > 1.
  std::vector<std::string> copy_labels() const;
};

void validate_datum(const CechDatum& datum);  // throws MalformedDatum

// Differential C^0 -> C^1.  Rows are one-cell copies, columns zero-cells;
// the (copy, z) entry is the signed sum of twisting words over incidences.
RingMat d0_symbolic(const CechDatum& datum);
RatMat d0_matrix(const CechDatum& datum, const MonodromyRep& rep);

struct CohomologyPresentation {
  CechDatum datum;
  Backend backend = Backend::Symbolic;
  std::size_t r = 0;        // matrix backend only
  std::size_t rank_d0 = 0;  // matrix backend only
  long dim = -1;            // matrix backend: copies*r - rank(d0)
};

// Matrix backend computes dim H^1 and checks the declared basis cells are
// transverse to the image of d0; symbolic backend just packages the datum.
CohomologyPresentation h1(const CechDatum& datum, const MonodromyRep& rep);

// Rewrite a cocycle (one ring element per copy) modulo im(d0) as a
// combination supported on the basis cells.
//
// The symbolic form eliminates zero-cell columns using single-term pivots
// only; a row that cannot be cleared raises PivotNotUnit.  The matrix form
// solves an exact linear system and raises InconsistentSystem if the cocycle
// is not a cocycle for the given representation; its result is one r x r
// coefficient block per copy (zero off the basis cells).
std::vector<RingElement> reduce_mod_image(const CechDatum& datum,
                                          const std::vector<RingElement>& cocycle);
std::vector<RatMat> reduce_mod_image(const CechDatum& datum,
                                     const MonodromyRep& rep,
                                     const std::vector<RingElement>& cocycle);

// A refinement sends each coarse copy to a fine copy with a ring coefficient
// (usually +/- a single word).
struct RefinementEntry {
  std::size_t fine_copy = 0;
  RingElement coeff = RingElement::one();
};

// Image of each coarse basis cochain inside the fine complex.
std::vector<std::vector<RingElement>> refinement_images(
    const CechDatum& fine, const std::vector<RefinementEntry>& assignment);

// Push a coarse cochain through the refinement.
std::vector<RingElement> apply_refinement(
    const CechDatum& fine, const std::vector<RefinementEntry>& assignment,
    const std::vector<RingElement>& coarse);

// Given two families of cocycles (images of a reference basis and of a
// comparison basis), produce the matrix N with
//   comparison_i = sum_j reference_j . N[i][j]  modulo im(d0).
// Coefficients act on the right: the image of d0 is a right submodule
// (its entries multiply from the left), so only right combinations are
// well defined on cohomology.
//
// Symbolic form: both families are reduced onto the datum's basis cells; the
// reduced reference family must be a monomial matrix of single-term entries
// (else NotABasis).  Matrix form: exact solve; rank-deficient or inconsistent
// reference family raises NotABasis.
RingMat change_of_basis(const CechDatum& datum,
                        const std::vector<std::vector<RingElement>>& reference,
                        const std::vector<std::vector<RingElement>>& comparison);
RatMat change_of_basis(const CechDatum& datum, const MonodromyRep& rep,
                       const std::vector<std::vector<RingElement>>& reference,
                       const std::vector<std::vector<RingElement>>& comparison);

}  // namespace stokes
