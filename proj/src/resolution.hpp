#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bipoly.hpp"
#include "divisor.hpp"

namespace stokes {

// Exact conversions between the polar and Gaussian-rational coefficient
// representations. Polar arguments must be multiples of pi/2 to admit a
// Gaussian value; the reverse direction needs the value to lie on an axis.
std::optional<GaussianRational> gaussian_from_polar(const PolarCoefficient& p);
std::optional<PolarCoefficient> polar_from_gaussian(const GaussianRational& g);
// Exact argument as a multiple of pi; defined on the axes and diagonals.
std::optional<Angle> gaussian_arg(const GaussianRational& g);

enum class ChartKind { Identity, Base, BaseTilde, Primed, PrimedTilde };

// x = u^a11 v^a12, y = u^a21 v^a22 for the pair (x, y) being expressed.
struct ExpMat {
  long a11, a12, a21, a22;
};

// One chart of the blow-up tower. Base charts express (t, y) monomially in
// the chart coordinates. Charts created after the translation step carry the
// stage-1 matrix of their host chart, the translation v = v' + c, and a
// second monomial matrix expressing (u, v') in the final coordinates.
struct Chart {
  ChartKind kind = ChartKind::Identity;
  long index = 0;  // k for Base, n for BaseTilde, s for Primed, q for PrimedTilde
  ExpMat stage1{1, 0, 0, 1};
  std::optional<GaussianRational> translation;
  std::optional<ExpMat> stage2;
  BiPoly t_expr, y_expr;  // composite: t and y in the chart coordinates
  std::string label;
  std::string xname = "u", yname = "v";
};

struct GoodForm {
  enum class Kind { Holomorphic, Good, Bad };
  Kind kind = Kind::Bad;
  long m = 0, n = 0;          // valid for Good
  GaussianRational beta0;     // valid for Good; nonzero

  static GoodForm holomorphic() { return {Kind::Holomorphic, 0, 0, {}}; }
  static GoodForm bad() { return {Kind::Bad, 0, 0, {}}; }
  static GoodForm good(long m, long n, GaussianRational b) {
    return {Kind::Good, m, n, std::move(b)};
  }

  bool operator==(const GoodForm& o) const {
    if (kind != o.kind) return false;
    if (kind != Kind::Good) return true;
    return m == o.m && n == o.n && beta0 == o.beta0;
  }
  std::string str() const;
};

struct Intersection {
  std::size_t component;    // index into config.components
  std::string chart_label;
  GaussianRational v0;      // the point is (0, v0) in that chart
};

struct Resolution {
  ExponentialFactor psi = ExponentialFactor::zero();
  std::vector<Chart> charts;
  std::vector<LaurentExpression> chart_exprs;  // pullback of 1/y - psi(t) per chart
  std::vector<GoodForm> chart_forms;           // certificate at each chart origin
  std::vector<Intersection> intersections;     // one per AtInfinity component
};

// Pullback of g = 1/y - psi(t) = (t^q - mu0*y)/(t^q*y) to the chart, as a
// normalized factored expression in the chart coordinates.
LaurentExpression pullback(const ExponentialFactor& psi, const Chart& chart);

// Reads off g = u^(-m) v^(-n) beta(u, v) at the point (0, v0): Holomorphic
// when no pole is left and the denominator is a unit there, Good(m, n,
// beta(0, v0)) when that value is nonzero, Bad otherwise.
GoodForm is_good(const LaurentExpression& expr, const GaussianRational& v0);

// The blow-up tower for the twist psi over the configuration: n = max q_i
// point blow-ups in a chain, and for psi != 0 a translation by 1/mu0 at the
// pole of psi followed by q further blow-ups. Every chart origin certifies
// Holomorphic or Good, and each AtInfinity component meets the exceptional
// divisor in the single point recorded in intersections.
Resolution resolve(const ExponentialFactor& psi, const DivisorConfig& config);

}  // namespace stokes
