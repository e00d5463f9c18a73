#pragma once

#include <optional>
#include <string>

#include "rational.hpp"

namespace stokes {

// A direction on the circle: an exact rational multiple of pi, stored in
// units of pi and normalized into [0, 2). All comparisons are exact rational
// comparisons; nothing here ever touches floating point.
class Angle {
 public:
  Angle() : v_(0) {}
  explicit Angle(const mpq_class& pi_units) : v_(normalized(pi_units)) {}

  static mpq_class normalized(const mpq_class& q);

  // value in units of pi, in [0, 2)
  const mpq_class& pi_units() const { return v_; }

  Angle operator+(const Angle& o) const { return Angle(v_ + o.v_); }
  Angle operator-(const Angle& o) const { return Angle(v_ - o.v_); }
  Angle operator-() const { return Angle(-v_); }
  Angle scaled(long k) const { return Angle(v_ * k); }

  bool operator==(const Angle& o) const { return v_ == o.v_; }
  bool operator!=(const Angle& o) const { return v_ != o.v_; }
  bool operator<(const Angle& o) const { return v_ < o.v_; }

  // "0", "π", "n·π", "a/b·π"
  std::string str() const;

  // accepts the str() forms plus bare rationals meaning multiples of pi
  static std::optional<Angle> parse(const std::string& s);

 private:
  mpq_class v_;
};

inline Angle quarter_pi(long k) { return Angle(make_rat(k, 2)); }  // k * pi/2

}  // namespace stokes
