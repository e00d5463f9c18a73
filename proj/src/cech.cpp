#include "cech.hpp"

#include <set>

#include "errors.hpp"

namespace stokes {

std::size_t CechDatum::copy_count() const {
  std::size_t n = 0;
  for (const auto& c : one_cells) n += c.multiplicity;
  return n;
}

std::vector<std::string> CechDatum::copy_labels() const {
  std::vector<std::string> out;
  for (const auto& c : one_cells) {
    if (c.multiplicity == 1) {
      out.push_back(c.label);
    } else {
      for (std::size_t k = 1; k <= c.multiplicity; ++k)
        out.push_back(c.label + "#" + std::to_string(k));
    }
  }
  return out;
}

void validate_datum(const CechDatum& datum) {
  std::set<long> ids(datum.zero_cells.begin(), datum.zero_cells.end());
  if (ids.size() != datum.zero_cells.size())
    fail("MalformedDatum", "duplicate zero-cell id");
  std::set<std::string> labels;
  for (const auto& c : datum.one_cells) {
    if (c.multiplicity == 0)
      fail("MalformedDatum", "one-cell '" + c.label + "' has multiplicity zero");
    if (!labels.insert(c.label).second)
      fail("MalformedDatum", "duplicate one-cell label '" + c.label + "'");
  }
  const std::size_t copies = datum.copy_count();
  for (const auto& inc : datum.incidences) {
    if (inc.copy >= copies)
      fail("MalformedDatum", "incidence names a copy out of range");
    if (!ids.count(inc.zero_cell))
      fail("MalformedDatum",
           "incidence names unknown zero-cell " + std::to_string(inc.zero_cell));
    if (inc.sign != 1 && inc.sign != -1)
      fail("MalformedDatum", "incidence sign must be +1 or -1");
  }
  std::set<std::size_t> seen;
  for (std::size_t b : datum.basis_cells) {
    if (b >= copies) fail("MalformedDatum", "basis cell out of range");
    if (!seen.insert(b).second) fail("MalformedDatum", "duplicate basis cell");
  }
}

namespace {

std::size_t zc_index(const CechDatum& datum, long id) {
  for (std::size_t j = 0; j < datum.zero_cells.size(); ++j)
    if (datum.zero_cells[j] == id) return j;
  fail("Internal", "zero-cell id vanished after validation");
}

// copies*r x basis*r indicator: the k-th basis copy carries an identity block.
RatMat basis_indicator(const CechDatum& datum, std::size_t r) {
  RatMat e(datum.copy_count() * r, datum.basis_cells.size() * r);
  for (std::size_t k = 0; k < datum.basis_cells.size(); ++k)
    e.set_block(datum.basis_cells[k] * r, k * r, RatMat::identity(r));
  return e;
}

void require_matrix_backend(const MonodromyRep& rep, const char* what) {
  if (rep.backend() != Backend::Matrix)
    fail("BadInput", std::string(what) + " needs a matrix representation");
}

}  // namespace

RingMat d0_symbolic(const CechDatum& datum) {
  validate_datum(datum);
  RingMat m(datum.copy_count(), datum.zero_cells.size());
  for (const auto& inc : datum.incidences) {
    const std::size_t j = zc_index(datum, inc.zero_cell);
    m.at(inc.copy, j) = m.at(inc.copy, j) + RingElement::word(inc.word, inc.sign);
  }
  return m;
}

RatMat d0_matrix(const CechDatum& datum, const MonodromyRep& rep) {
  require_matrix_backend(rep, "the matrix differential");
  return rep.evaluate(d0_symbolic(datum));
}

CohomologyPresentation h1(const CechDatum& datum, const MonodromyRep& rep) {
  validate_datum(datum);
  CohomologyPresentation out;
  out.datum = datum;
  out.backend = rep.backend();
  if (rep.backend() == Backend::Symbolic) return out;
  const std::size_t r = rep.rank();
  const RatMat a = d0_matrix(datum, rep);
  out.r = r;
  out.rank_d0 = a.rank();
  out.dim = static_cast<long>(datum.copy_count() * r) -
            static_cast<long>(out.rank_d0);
  if (!datum.basis_cells.empty()) {
    const RatMat e = basis_indicator(datum, r);
    if (augment(a, e).rank() != out.rank_d0 + datum.basis_cells.size() * r)
      fail("BasisNotTransverse",
           "declared basis cells meet the image of the differential");
  }
  return out;
}

std::vector<RingElement> reduce_mod_image(const CechDatum& datum,
                                          const std::vector<RingElement>& cocycle) {
  validate_datum(datum);
  const std::size_t copies = datum.copy_count();
  if (cocycle.size() != copies)
    fail("BadInput", "cochain length does not match the number of one-cell copies");
  const RingMat d0 = d0_symbolic(datum);
  const std::size_t nz = datum.zero_cells.size();
  std::vector<bool> in_basis(copies, false);
  for (std::size_t b : datum.basis_cells) in_basis[b] = true;

  std::vector<RingElement> work = cocycle;
  std::vector<bool> used(nz, false);
  // Each round either consumes a fresh zero-cell column or stops, so the
  // scan terminates after at most nz + 1 passes.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t row = 0; row < copies; ++row) {
      if (in_basis[row] || work[row].is_zero()) continue;
      for (std::size_t z = 0; z < nz; ++z) {
        if (used[z]) continue;
        const auto pivot = d0.at(row, z).single_term();
        if (!pivot) continue;
        // entry = c.w, so entry^-1 = (1/c).w^-1 and b_z = entry^-1 . work[row].
        const RingElement b =
            RingElement::word(pivot->second.inverse(), 1 / pivot->first) *
            work[row];
        for (std::size_t row2 = 0; row2 < copies; ++row2) {
          if (!d0.at(row2, z).is_zero()) {
            work[row2] = work[row2] - d0.at(row2, z) * b;
          }
        }
        used[z] = true;
        changed = true;
        break;
      }
    }
  }
  const auto labels = datum.copy_labels();
  for (std::size_t row = 0; row < copies; ++row) {
    if (!in_basis[row] && !work[row].is_zero())
      fail("PivotNotUnit", "no single-term pivot clears copy '" + labels[row] +
                               "'; residue " + work[row].str());
  }
  return work;
}

std::vector<RatMat> reduce_mod_image(const CechDatum& datum,
                                     const MonodromyRep& rep,
                                     const std::vector<RingElement>& cocycle) {
  require_matrix_backend(rep, "the matrix reduction");
  h1(datum, rep);  // validates the datum and basis transversality
  const std::size_t copies = datum.copy_count();
  if (cocycle.size() != copies)
    fail("BadInput", "cochain length does not match the number of one-cell copies");
  const std::size_t r = rep.rank();
  const RatMat a = d0_matrix(datum, rep);
  RatMat c(copies * r, r);
  for (std::size_t i = 0; i < copies; ++i)
    c.set_block(i * r, 0, rep.evaluate(cocycle[i]));
  const std::size_t nb = datum.basis_cells.size();
  const RatMat sys = nb ? augment(a, basis_indicator(datum, r)) : a;
  const auto sol = solve(sys, c);
  if (!sol)
    fail("InconsistentSystem",
         "cochain is not reducible onto the basis for this representation");
  std::vector<RatMat> out(copies, RatMat(r, r));
  for (std::size_t k = 0; k < nb; ++k)
    out[datum.basis_cells[k]] = sol->block(a.cols() + k * r, 0, r, r);
  return out;
}

std::vector<std::vector<RingElement>> refinement_images(
    const CechDatum& fine, const std::vector<RefinementEntry>& assignment) {
  validate_datum(fine);
  const std::size_t copies = fine.copy_count();
  std::vector<std::vector<RingElement>> out;
  for (const auto& ent : assignment) {
    if (ent.fine_copy >= copies)
      fail("MalformedDatum", "refinement targets a copy out of range");
    std::vector<RingElement> img(copies);
    img[ent.fine_copy] = ent.coeff;
    out.push_back(std::move(img));
  }
  return out;
}

std::vector<RingElement> apply_refinement(
    const CechDatum& fine, const std::vector<RefinementEntry>& assignment,
    const std::vector<RingElement>& coarse) {
  if (coarse.size() != assignment.size())
    fail("BadInput", "coarse cochain length does not match the refinement");
  const auto images = refinement_images(fine, assignment);
  std::vector<RingElement> out(fine.copy_count());
  for (std::size_t i = 0; i < assignment.size(); ++i)
    out[assignment[i].fine_copy] =
        out[assignment[i].fine_copy] + assignment[i].coeff * coarse[i];
  return out;
}

RingMat change_of_basis(const CechDatum& datum,
                        const std::vector<std::vector<RingElement>>& reference,
                        const std::vector<std::vector<RingElement>>& comparison) {
  validate_datum(datum);
  const std::size_t k = datum.basis_cells.size();
  if (reference.size() != k || comparison.size() != k)
    fail("BadInput", "change of basis needs one image per basis cell");
  // Slot values on the basis cells after reduction.
  auto rows = [&](const std::vector<std::vector<RingElement>>& family) {
    RingMat m(k, k);
    for (std::size_t i = 0; i < family.size(); ++i) {
      const auto red = reduce_mod_image(datum, family[i]);
      for (std::size_t l = 0; l < k; ++l)
        m.at(i, l) = red[datum.basis_cells[l]];
    }
    return m;
  };
  const RingMat ra = rows(reference);
  const RingMat rt = rows(comparison);

  // reference_j must reduce to a single slot sigma(j) with a single-term
  // value a_j; then comparison_i = sum_j reference_j . N[i][j] pins
  // N[i][j] = a_j^-1 . rt[i][sigma(j)].
  std::vector<std::size_t> sigma(k);
  std::vector<RingElement> inv(k);
  std::vector<bool> slot_used(k, false);
  for (std::size_t j = 0; j < k; ++j) {
    std::optional<std::size_t> hit;
    for (std::size_t l = 0; l < k; ++l) {
      if (ra.at(j, l).is_zero()) continue;
      if (hit) fail("NotABasis", "reference image reduces onto several basis cells");
      hit = l;
    }
    if (!hit) fail("NotABasis", "reference image reduces to zero");
    const auto term = ra.at(j, *hit).single_term();
    if (!term)
      fail("NotABasis", "reference image does not reduce to a single term");
    if (slot_used[*hit])
      fail("NotABasis", "two reference images reduce onto the same basis cell");
    slot_used[*hit] = true;
    sigma[j] = *hit;
    inv[j] = RingElement::word(term->second.inverse(), 1 / term->first);
  }
  RingMat n(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) n.at(i, j) = inv[j] * rt.at(i, sigma[j]);
  return n;
}

RatMat change_of_basis(const CechDatum& datum, const MonodromyRep& rep,
                       const std::vector<std::vector<RingElement>>& reference,
                       const std::vector<std::vector<RingElement>>& comparison) {
  require_matrix_backend(rep, "the matrix change of basis");
  validate_datum(datum);
  if (reference.size() != comparison.size())
    fail("BadInput", "reference and comparison families differ in size");
  const std::size_t k = reference.size();
  const std::size_t r = rep.rank();
  const std::size_t copies = datum.copy_count();
  const RatMat a = d0_matrix(datum, rep);
  auto stack = [&](const std::vector<std::vector<RingElement>>& family) {
    RatMat m(copies * r, k * r);
    for (std::size_t j = 0; j < k; ++j) {
      if (family[j].size() != copies)
        fail("BadInput", "cochain length does not match the number of one-cell copies");
      for (std::size_t c = 0; c < copies; ++c)
        m.set_block(c * r, j * r, rep.evaluate(family[j][c]));
    }
    return m;
  };
  const RatMat f = stack(reference);
  const RatMat g = stack(comparison);
  if (augment(a, f).rank() != a.rank() + k * r)
    fail("NotABasis", "reference images are not independent modulo the differential");
  const auto sol = solve(augment(a, f), g);
  if (!sol)
    fail("NotABasis", "comparison images do not lie in the span of the reference images");
  RatMat n(k * r, k * r);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      n.set_block(i * r, j * r, sol->block(a.cols() + j * r, i * r, r, r));
  return n;
}

}  // namespace stokes
