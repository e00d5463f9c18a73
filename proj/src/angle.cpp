#include "angle.hpp"

namespace stokes {

mpq_class Angle::normalized(const mpq_class& q) {
  // reduce mod 2 into [0, 2)
  mpq_class half = q / 2;
  mpq_class r = q - 2 * mpq_class(rat_floor(half));
  r.canonicalize();
  return r;
}

std::string Angle::str() const {
  if (v_ == 0) return "0";
  if (v_.get_den() == 1) {
    if (v_.get_num() == 1) return "π";
    return v_.get_num().get_str() + "·π";
  }
  return rat_str(v_) + "·π";
}

std::optional<Angle> Angle::parse(const std::string& s) {
  if (s == "0") return Angle();
  std::string t = s;
  // strip a trailing "·π" or "π" or "*pi"/"pi"
  auto strip_suffix = [&t](const std::string& suf) {
    if (t.size() >= suf.size() && t.compare(t.size() - suf.size(), suf.size(), suf) == 0) {
      t = t.substr(0, t.size() - suf.size());
      return true;
    }
    return false;
  };
  bool had_pi = strip_suffix("·π") || strip_suffix("*π") || strip_suffix("π") ||
                strip_suffix("·pi") || strip_suffix("*pi") || strip_suffix("pi");
  if (had_pi && t.empty()) return Angle(mpq_class(1));
  auto q = parse_rat(t);
  if (!q) return std::nullopt;
  return Angle(*q);
}

}  // namespace stokes
