#include "rep.hpp"

#include <random>

#include "errors.hpp"

namespace stokes {

MonodromyRep MonodromyRep::symbolic() {
  MonodromyRep rep;
  rep.backend_ = Backend::Symbolic;
  return rep;
}

MonodromyRep MonodromyRep::matrices(RatMat s, RatMat t, RatMat u) {
  const RatMat* in[3] = {&s, &t, &u};
  const char* names[3] = {"S", "T", "U"};
  MonodromyRep rep;
  rep.backend_ = Backend::Matrix;
  rep.r_ = s.rows();
  for (int g = 0; g < 3; ++g) {
    if (in[g]->rows() != rep.r_ || in[g]->cols() != rep.r_)
      fail("BadInput", std::string("monodromy matrix ") + names[g] +
                           " is not square of the common size");
    auto inv = in[g]->inverse();
    if (!inv)
      fail("BadInput", std::string("monodromy matrix ") + names[g] +
                           " is singular; representations must be invertible");
    rep.gen_[g] = *in[g];
    rep.inv_[g] = *inv;
  }
  return rep;
}

MonodromyRep MonodromyRep::random(std::size_t rank, unsigned long seed) {
  if (rank == 0) fail("BadInput", "representation rank must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  RatMat out[3];
  for (auto& m : out) {
    for (;;) {
      RatMat cand(rank, rank);
      for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j)
          cand.at(i, j) = make_rat(num(rng), den(rng));
      if (cand.inverse()) {
        m = cand;
        break;
      }
    }
  }
  return matrices(out[0], out[1], out[2]);
}

std::size_t MonodromyRep::rank() const {
  if (backend_ != Backend::Matrix)
    fail("Internal", "rank queried on the symbolic representation");
  return r_;
}

RatMat MonodromyRep::generator(int g, bool inverse) const {
  if (backend_ != Backend::Matrix)
    fail("Internal", "matrix queried on the symbolic representation");
  if (g < 0 || g > 2) fail("Internal", "generator index out of range");
  return inverse ? inv_[g] : gen_[g];
}

RatMat MonodromyRep::evaluate(const GroupWord& w) const {
  RatMat acc = RatMat::identity(rank());
  for (int code : w.letters()) acc = acc * generator(code >> 1, code & 1);
  return acc;
}

RatMat MonodromyRep::evaluate(const RingElement& e) const {
  RatMat acc(rank(), rank());
  for (const auto& [word, coeff] : e.terms())
    acc = acc + evaluate(word).scaled(coeff);
  return acc;
}

RatMat MonodromyRep::evaluate(const RingMat& m) const {
  const std::size_t r = rank();
  RatMat out(m.rows * r, m.cols * r);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      out.set_block(i * r, j * r, evaluate(m.at(i, j)));
  return out;
}

}  // namespace stokes
