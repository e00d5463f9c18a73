#pragma once

#include <gmpxx.h>
#include <optional>
#include <string>

namespace stokes {

// Parse "p", "-p", "p/q" into a canonical rational. Rejects q <= 0 and junk.
inline std::optional<mpq_class> parse_rat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::string t = s;
  // mpq_class(string) aborts on garbage, so pre-screen.
  std::size_t slash = t.find('/');
  auto is_int = [](const std::string& x) {
    if (x.empty()) return false;
    std::size_t i = (x[0] == '-' || x[0] == '+') ? 1 : 0;
    if (i == x.size()) return false;
    for (; i < x.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(x[i]))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!is_int(t)) return std::nullopt;
    return mpq_class(mpz_class(t));
  }
  std::string num = t.substr(0, slash), den = t.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) return std::nullopt;
  mpz_class d(den);
  if (d <= 0) return std::nullopt;
  mpq_class q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

inline std::string rat_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline mpq_class make_rat(long num, long den = 1) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

// floor(q) as an integer
inline mpz_class rat_floor(const mpq_class& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

inline mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline mpq_class rat_abs(const mpq_class& q) { return q < 0 ? mpq_class(-q) : q; }

}  // namespace stokes
