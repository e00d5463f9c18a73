#include "example.hpp"

#include "errors.hpp"

namespace stokes {

namespace {

// The two fine covers differ only by swapping the roles of S and T in the
// gluing words; cells, signs and incidence shape are shared.
CechDatum fine_datum(bool swap_st) {
  const GroupWord S = swap_st ? GroupWord::t() : GroupWord::s();
  const GroupWord T = swap_st ? GroupWord::s() : GroupWord::t();
  CechDatum d;
  d.zero_cells = {2, 11, 10, 3, 9};
  d.one_cells = {{"(1,2)", 1},  {"(1,9)", 1},  {"(1,11)", 1}, {"(2,3)", 1},
                 {"(2,8)", 1},  {"(2,9)", 1},  {"(2,10)", 1}, {"(2,11)", 1},
                 {"(3,9)", 2},  {"(3,10)", 1}, {"(3,11)", 1}, {"(4,9)", 1},
                 {"(4,10)", 1}, {"(4,11)", 1}, {"(5,9)", 1},  {"(5,10)", 1},
                 {"(6,9)", 2},  {"(8,9)", 1},  {"(9,10)", 1}, {"(10,11)", 1}};
  auto inc = [&](std::size_t copy, long z, int sign, GroupWord w = GroupWord()) {
    d.incidences.push_back({copy - 1, z, sign, w});  // copies 1-based here
  };
  inc(4, 2, -1);
  inc(8, 2, -1);
  inc(8, 11, +1);
  inc(12, 11, +1);
  inc(22, 11, +1, S * T.inverse());
  inc(11, 10, +1, T);
  inc(22, 10, -1, S);
  inc(9, 3, -1);
  inc(11, 3, -1, T * S.inverse());
  inc(12, 3, -1);
  inc(2, 9, +1);
  inc(13, 9, +1);
  inc(16, 9, +1);
  inc(18, 9, +1);
  inc(19, 9, +1, S);
  inc(20, 9, +1);
  inc(21, 9, -1);
  // (2,11) and (10,11) carry the half-plane basis; the theta = 0 cover
  // lists them in the opposite order.
  d.basis_cells = swap_st ? std::vector<std::size_t>{21, 7}
                          : std::vector<std::size_t>{7, 21};
  return d;
}

CechDatum coarse_datum(bool zero_side) {
  CechDatum d;
  d.one_cells = zero_side ? std::vector<OneCell>{{"a1", 1}, {"a3", 1}}
                          : std::vector<OneCell>{{"a2", 1}, {"a4", 1}};
  d.basis_cells = {0, 1};
  return d;
}

RingElement minus_one() { return RingElement::scalar(-1); }

}  // namespace

ExampleBundle build_bundle() {
  ExampleBundle b;
  b.fine_pi = fine_datum(false);
  b.fine_zero = fine_datum(true);
  b.coarse_pi = coarse_datum(false);
  b.coarse_zero = coarse_datum(true);
  b.base_pi = {{7, RingElement::one()}, {21, RingElement::one()}};
  b.tilde_pi = {{8, minus_one()}, {10, minus_one()}};
  b.base_zero = {{21, RingElement::one()}, {7, RingElement::one()}};
  b.tilde_zero = {{10, minus_one()}, {8, minus_one()}};
  b.rot_zero_to_pi = GroupWord();
  b.rot_pi_to_zero = GroupWord::u();
  return b;
}

RingMat n_pi_symbolic(const ExampleBundle& b) {
  return change_of_basis(b.fine_pi, refinement_images(b.fine_pi, b.base_pi),
                         refinement_images(b.fine_pi, b.tilde_pi));
}

RingMat n_zero_symbolic(const ExampleBundle& b) {
  return change_of_basis(b.fine_zero, refinement_images(b.fine_zero, b.base_zero),
                         refinement_images(b.fine_zero, b.tilde_zero));
}

RatMat n_pi_matrix(const ExampleBundle& b, const MonodromyRep& rep) {
  return change_of_basis(b.fine_pi, rep,
                         refinement_images(b.fine_pi, b.base_pi),
                         refinement_images(b.fine_pi, b.tilde_pi));
}

RatMat n_zero_matrix(const ExampleBundle& b, const MonodromyRep& rep) {
  return change_of_basis(b.fine_zero, rep,
                         refinement_images(b.fine_zero, b.base_zero),
                         refinement_images(b.fine_zero, b.tilde_zero));
}

StokesDatum stokes_data(const MonodromyRep& rep) {
  const ExampleBundle b = build_bundle();
  StokesDatum sd;
  sd.backend = rep.backend();
  sd.factors = {ExponentialFactor::zero(),
                ExponentialFactor::polar(1, {mpq_class(1), Angle()})};

  auto rotation = [](const GroupWord& w) {
    RingMat m(2, 2);
    m.at(0, 0) = RingElement::word(w);
    m.at(1, 1) = RingElement::word(w);
    return m;
  };
  sd.n_pi = n_pi_symbolic(b);
  sd.n_zero = n_zero_symbolic(b);
  sd.s01 = rotation(b.rot_zero_to_pi) * sd.n_pi;
  sd.s10 = rotation(b.rot_pi_to_zero) * sd.n_zero;
  if (rep.backend() == Backend::Matrix) {
    sd.r = rep.rank();
    sd.s01_mat = rep.evaluate(rotation(b.rot_zero_to_pi)) * n_pi_matrix(b, rep);
    sd.s10_mat = rep.evaluate(rotation(b.rot_pi_to_zero)) * n_zero_matrix(b, rep);
  }
  return sd;
}

std::vector<std::string> validate_stokes_datum(const StokesDatum& sd,
                                               const MonodromyRep& rep) {
  std::vector<std::string> out;
  const std::size_t k = sd.factors.size();
  if (sd.s01.rows != k || sd.s01.cols != k || sd.s10.rows != k || sd.s10.cols != k) {
    out.push_back("block count does not match the factor grading");
    return out;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i > j && !sd.s01.at(i, j).is_zero())
        out.push_back("s01 has a block below the diagonal at (" +
                      std::to_string(i) + "," + std::to_string(j) + ")");
      if (i < j && !sd.s10.at(i, j).is_zero())
        out.push_back("s10 has a block above the diagonal at (" +
                      std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  if (rep.backend() == Backend::Matrix) {
    const std::size_t r = rep.rank();
    auto check = [&](const RingMat& m, const char* name) {
      for (std::size_t i = 0; i < k; ++i)
        if (!rep.evaluate(m.at(i, i)).inverse())
          out.push_back(std::string(name) + " diagonal block " +
                        std::to_string(i) + " is singular");
      if (!rep.evaluate(m).inverse())
        out.push_back(std::string(name) + " is singular");
      (void)r;
    };
    check(sd.s01, "s01");
    check(sd.s10, "s10");
    if (sd.s01_mat != rep.evaluate(sd.s01) || sd.s10_mat != rep.evaluate(sd.s10))
      out.push_back("matrix backend disagrees with the evaluated words");
  } else {
    // Symbolic proxy: a single-term diagonal block is a unit of the group
    // algebra, hence invertible under every representation.
    auto check = [&](const RingMat& m, const char* name) {
      for (std::size_t i = 0; i < k; ++i)
        if (!m.at(i, i).single_term())
          out.push_back(std::string(name) + " diagonal block " +
                        std::to_string(i) + " is not a unit");
    };
    check(sd.s01, "s01");
    check(sd.s10, "s10");
  }
  return out;
}

RingMat total_monodromy(const StokesDatum& sd) { return sd.s10 * sd.s01; }

RatMat total_monodromy_matrix(const StokesDatum& sd) {
  if (sd.backend != Backend::Matrix)
    fail("BadInput", "matrix total monodromy needs the matrix backend");
  return sd.s10_mat * sd.s01_mat;
}

}  // namespace stokes
