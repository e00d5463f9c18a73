#include "resolution.hpp"

#include <algorithm>

namespace stokes {

std::optional<GaussianRational> gaussian_from_polar(const PolarCoefficient& p) {
  mpq_class a = p.argument.pi_units();  // in [0, 2)
  if (a.get_den() == 1) {
    if (a == 0) return GaussianRational(p.modulus);
    return GaussianRational(-p.modulus);  // a == 1
  }
  if (a.get_den() == 2) {
    if (a.get_num() == 1) return GaussianRational(mpq_class(0), p.modulus);
    return GaussianRational(mpq_class(0), -p.modulus);  // a == 3/2
  }
  return std::nullopt;
}

std::optional<PolarCoefficient> polar_from_gaussian(const GaussianRational& g) {
  if (g.is_zero()) return std::nullopt;
  if (g.im == 0) {
    if (g.re > 0) return PolarCoefficient{g.re, Angle()};
    return PolarCoefficient{-g.re, Angle(make_rat(1))};
  }
  if (g.re == 0) {
    if (g.im > 0) return PolarCoefficient{g.im, Angle(make_rat(1, 2))};
    return PolarCoefficient{-g.im, Angle(make_rat(3, 2))};
  }
  return std::nullopt;
}

std::optional<Angle> gaussian_arg(const GaussianRational& g) {
  if (g.is_zero()) return std::nullopt;
  if (g.im == 0) return Angle(make_rat(g.re > 0 ? 0 : 1));
  if (g.re == 0) return Angle(make_rat(g.im > 0 ? 1 : 3, 2));
  if (abs(g.re) == abs(g.im)) {
    if (g.re > 0) return Angle(make_rat(g.im > 0 ? 1 : 7, 4));
    return Angle(make_rat(g.im > 0 ? 3 : 5, 4));
  }
  return std::nullopt;
}

std::string GoodForm::str() const {
  switch (kind) {
    case Kind::Holomorphic:
      return "Holomorphic";
    case Kind::Bad:
      return "Bad";
    case Kind::Good:
      return "Good(" + std::to_string(m) + ", " + std::to_string(n) + ", " + beta0.str() + ")";
  }
  return "?";
}

namespace {

GaussianRational one() { return GaussianRational(mpq_class(1)); }

BiPoly mono(long a, long b) { return BiPoly::monomial(one(), a, b); }

// t = u^a11 v^a12, y = u^a21 v^a22 in the chart's own coordinates
void set_monomial_exprs(Chart& ch) {
  ch.t_expr = mono(ch.stage1.a11, ch.stage1.a12);
  ch.y_expr = mono(ch.stage1.a21, ch.stage1.a22);
}

Chart identity_chart() {
  Chart ch;
  ch.kind = ChartKind::Identity;
  ch.stage1 = {1, 0, 0, 1};
  ch.label = "id";
  ch.xname = "t";
  ch.yname = "y";
  set_monomial_exprs(ch);
  return ch;
}

Chart base_chart(long k) {
  Chart ch;
  ch.kind = ChartKind::Base;
  ch.index = k;
  ch.stage1 = {1, 1, k - 1, k};
  ch.label = std::to_string(k);
  set_monomial_exprs(ch);
  return ch;
}

Chart base_tilde_chart(long n) {
  Chart ch;
  ch.kind = ChartKind::BaseTilde;
  ch.index = n;
  ch.stage1 = {1, 0, n, 1};
  ch.label = "~" + std::to_string(n);
  set_monomial_exprs(ch);
  return ch;
}

// Chart of the second tower, blown up at the translated point of the host:
// stage-2 coordinates satisfy u = a^s11 b^s12, v' = a^s21 b^s22 and
// v = v' + c, so t and y become polynomials rather than monomials.
Chart stage2_chart(const Chart& host, const GaussianRational& c, ChartKind kind, long index,
                   ExpMat s2, std::string label) {
  Chart ch;
  ch.kind = kind;
  ch.index = index;
  ch.stage1 = host.stage1;
  ch.translation = c;
  ch.stage2 = s2;
  ch.label = std::move(label);
  BiPoly u_poly = mono(s2.a11, s2.a12);
  BiPoly v_poly = mono(s2.a21, s2.a22) + BiPoly::constant(c);
  ch.t_expr = u_poly.pow(host.stage1.a11) * v_poly.pow(host.stage1.a12);
  ch.y_expr = u_poly.pow(host.stage1.a21) * v_poly.pow(host.stage1.a22);
  return ch;
}

// (q, mu0) of the twist, with mu0 as an exact Gaussian rational
std::pair<long, GaussianRational> twist_data(const ExponentialFactor& psi) {
  if (psi.is_zero()) return {0, GaussianRational()};
  auto mu = gaussian_from_polar(psi.mu0());
  if (!mu)
    fail("BadInput", "coefficient argument " + psi.mu0().argument.str() +
                         " is not a multiple of π/2; the blow-up module needs "
                         "Gaussian-rational coefficients");
  return {psi.q(), *mu};
}

}  // namespace

LaurentExpression pullback(const ExponentialFactor& psi, const Chart& chart) {
  auto [q, mu] = twist_data(psi);
  LaurentExpression e;
  BiPoly num = chart.t_expr.pow(q) - BiPoly::constant(mu) * chart.y_expr;
  e.factors.emplace_back(num, 1);
  if (q > 0) e.factors.emplace_back(chart.t_expr, -q);
  e.factors.emplace_back(chart.y_expr, -1);
  return normalize(e);
}

GoodForm is_good(const LaurentExpression& expr, const GaussianRational& v0) {
  if (expr.coeff.is_zero()) return GoodForm::holomorphic();
  GaussianRational zero;
  for (const auto& [p, exp] : expr.factors)
    if (exp < 0 && p.eval(zero, v0).is_zero()) return GoodForm::bad();
  long m = std::max(0L, -expr.x_exp);
  long n = std::max(0L, -expr.y_exp);
  if (m == 0 && n == 0) return GoodForm::holomorphic();
  // beta = u^m v^n expr, evaluated at (0, v0)
  if (expr.x_exp + m > 0) return GoodForm::bad();
  GaussianRational beta = expr.coeff * v0.pow(expr.y_exp + n);
  for (const auto& [p, exp] : expr.factors) {
    GaussianRational val = p.eval(zero, v0);
    if (val.is_zero()) return GoodForm::bad();  // exp > 0 here
    beta = beta * val.pow(exp);
  }
  if (beta.is_zero()) return GoodForm::bad();
  return GoodForm::good(m, n, beta);
}

Resolution resolve(const ExponentialFactor& psi, const DivisorConfig& config) {
  validate(config);
  long n = max_pole_order(config);
  Resolution res;
  res.psi = psi;

  long q = 0;
  GaussianRational mu;
  if (!psi.is_zero()) {
    std::tie(q, mu) = twist_data(psi);
    if (q > n)
      fail("UnsupportedTwist", "twist pole order " + std::to_string(q) +
                                   " exceeds the divisor's maximal pole order " +
                                   std::to_string(n));
  }

  if (n == 0) {
    res.charts.push_back(identity_chart());
  } else {
    for (long k = 1; k <= n; ++k) res.charts.push_back(base_chart(k));
    res.charts.push_back(base_tilde_chart(n));
  }

  std::string matching_label;
  if (!psi.is_zero()) {
    // the pole of psi sits at (0, 1/mu0) of this chart
    const Chart host = (q < n) ? res.charts[q] : res.charts.back();
    GaussianRational c = mu.inverse();
    for (long s = 1; s <= q; ++s)
      res.charts.push_back(
          stage2_chart(host, c, ChartKind::Primed, s, {1, 1, s - 1, s}, std::to_string(s) + "'"));
    matching_label = "~" + std::to_string(q) + "'";
    res.charts.push_back(
        stage2_chart(host, c, ChartKind::PrimedTilde, q, {1, 0, q, 1}, matching_label));
  }

  for (const auto& ch : res.charts) {
    LaurentExpression g = pullback(psi, ch);
    GoodForm form = is_good(g, GaussianRational());
    if (form.kind == GoodForm::Kind::Bad)
      fail("Internal", "pullback not good at the origin of chart " + ch.label);
    res.chart_exprs.push_back(std::move(g));
    res.chart_forms.push_back(form);
  }

  for (std::size_t i = 0; i < config.components.size(); ++i) {
    const auto& comp = config.components[i];
    if (comp.kind != ComponentKind::AtInfinity) continue;
    if (!psi.is_zero() && comp.factor == psi) {
      res.intersections.push_back({i, matching_label, GaussianRational()});
      continue;
    }
    auto mu_i = gaussian_from_polar(comp.factor.mu0());
    if (!mu_i)
      fail("BadInput", "component " + comp.label +
                           " has a coefficient argument that is not a multiple of π/2");
    long qi = comp.factor.q();
    std::string label = (qi < n) ? std::to_string(qi + 1) : "~" + std::to_string(n);
    res.intersections.push_back({i, label, mu_i->inverse()});
  }
  return res;
}

}  // namespace stokes
