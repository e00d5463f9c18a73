#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaussian.hpp"

namespace stokes {

// Polynomial in two variables with Gaussian-rational coefficients and
// nonnegative exponents. Terms are kept in lex order on (first, second).
class BiPoly {
 public:
  using Expo = std::pair<long, long>;

  BiPoly() = default;
  static BiPoly constant(GaussianRational c);
  static BiPoly monomial(GaussianRational c, long a, long b);

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator-() const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly pow(long e) const;  // e >= 0

  GaussianRational eval(const GaussianRational& x, const GaussianRational& y) const;

  // True when the polynomial has exactly one term.
  bool is_monomial() const { return terms_.size() == 1; }
  // Valid when is_monomial(): (coefficient, exponents).
  std::pair<GaussianRational, Expo> sole_term() const;

  // Smallest exponent of each variable over all terms; (0,0) for the zero poly.
  Expo content_exponents() const;
  // Divides out x^a y^b; caller guarantees the content bound.
  BiPoly shifted(long a, long b) const;

  std::size_t term_count() const { return terms_.size(); }
  const std::map<Expo, GaussianRational>& terms() const { return terms_; }

  std::string str(const std::string& x = "u", const std::string& y = "v") const;

 private:
  void insert(Expo e, GaussianRational c);
  std::map<Expo, GaussianRational> terms_;
};

// Exact quotient p / d, or nullopt when d does not divide p.
std::optional<BiPoly> try_divide(const BiPoly& p, const BiPoly& d);

// Product of coefficient, a (possibly negative) monomial, and powers of
// content-free polynomial factors. The value is
//   coeff * x^x_exp * y^y_exp * prod_i factors[i].first ^ factors[i].second.
// coeff == 0 encodes the zero expression.
struct LaurentExpression {
  GaussianRational coeff{mpq_class(1)};
  long x_exp = 0;
  long y_exp = 0;
  std::vector<std::pair<BiPoly, long>> factors;

  std::string str(const std::string& x = "u", const std::string& y = "v") const;
};

// Canonicalizes: extracts monomial content from every factor, folds constant
// and monomial factors into coeff/exponents, merges repeated factors, and
// cancels numerator factors against denominator factors by exact division.
LaurentExpression normalize(LaurentExpression e);

bool laurent_equal(const LaurentExpression& a, const LaurentExpression& b);

}  // namespace stokes
