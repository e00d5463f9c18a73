#pragma once

#include <string>
#include <vector>

#include "angle.hpp"

namespace stokes {

struct PolarCoefficient {
  mpq_class modulus;  // > 0
  Angle argument;
  bool operator==(const PolarCoefficient& o) const {
    return modulus == o.modulus && argument == o.argument;
  }
};

// The polar part mu0 * t^(-q) of an exponent, or zero. Only the leading
// datum (q, mu0) is stored; orderings, Stokes directions and the downstream
// geometry depend on nothing else.
class ExponentialFactor {
 public:
  static ExponentialFactor zero() { return ExponentialFactor(); }
  static ExponentialFactor polar(long q, PolarCoefficient mu0);

  bool is_zero() const { return zero_; }
  long q() const { return q_; }
  const PolarCoefficient& mu0() const { return mu0_; }

  bool operator==(const ExponentialFactor& o) const {
    if (zero_ != o.zero_) return false;
    if (zero_) return true;
    return q_ == o.q_ && mu0_ == o.mu0_;
  }
  bool operator!=(const ExponentialFactor& o) const { return !(*this == o); }

  // "0", "1/t", "t^-2", "3·t^-2", "i·t^-2", ...
  std::string str() const;

 private:
  ExponentialFactor() = default;
  bool zero_ = true;
  long q_ = 0;
  PolarCoefficient mu0_{mpq_class(1), Angle()};
};

enum class ComparisonResult { LessEq, GreaterEq, Equal, Stokes };

// Ordering at direction theta: LessEq iff arg(c) - q*theta lies in the open
// interval (pi/2, 3pi/2) mod 2pi, where c*t^(-q) is the leading term of
// phi - psi; Stokes on the boundary; Equal iff phi - psi vanishes.
// Decided exactly (sign of a two-term cosine combination), never numerically.
ComparisonResult compare_at(const ExponentialFactor& phi, const ExponentialFactor& psi,
                            const Angle& theta);

// The 2q directions where the pair is incomparable, ascending in [0, 2pi).
// Throws EqualFactors when phi - psi = 0 and UnrepresentableAngle when the
// argument of the leading coefficient is not a rational multiple of pi.
std::vector<Angle> stokes_directions(const ExponentialFactor& phi, const ExponentialFactor& psi);

// Sorted so earlier entries are <=_theta0 later ones; ties between Equal
// factors keep input order. Throws StokesDirectionHit naming the pair.
std::vector<ExponentialFactor> total_order(const std::vector<ExponentialFactor>& factors,
                                           const Angle& theta0);

inline bool is_less_eq(ComparisonResult r) {
  return r == ComparisonResult::LessEq || r == ComparisonResult::Equal;
}

}  // namespace stokes
