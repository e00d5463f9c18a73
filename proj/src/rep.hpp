#pragma once

#include "ratmat.hpp"
#include "ring.hpp"

namespace stokes {

enum class Backend { Symbolic, Matrix };

// Monodromy representation of the free group on S, T, U: either the formal
// symbolic one (elements stay in the group algebra) or an assignment of
// exact-rational invertible matrices.
class MonodromyRep {
 public:
  static MonodromyRep symbolic();
  // Validates: all square of equal size, all invertible.
  static MonodromyRep matrices(RatMat s, RatMat t, RatMat u);
  // Small random rational entries, re-drawn until invertible.
  static MonodromyRep random(std::size_t rank, unsigned long seed);

  Backend backend() const { return backend_; }
  std::size_t rank() const;

  RatMat generator(int g, bool inverse = false) const;
  RatMat evaluate(const GroupWord& w) const;
  RatMat evaluate(const RingElement& e) const;
  // Each ring entry becomes an r x r block.
  RatMat evaluate(const RingMat& m) const;

 private:
  MonodromyRep() = default;
  Backend backend_ = Backend::Symbolic;
  std::size_t r_ = 0;
  RatMat gen_[3], inv_[3];
};

}  // namespace stokes
