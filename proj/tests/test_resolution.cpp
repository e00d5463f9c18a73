#include <catch2/catch_amalgamated.hpp>

#include "errors.hpp"
#include "resolution.hpp"

using namespace stokes;

namespace {

GaussianRational g(long re, long im = 0) {
  return GaussianRational(mpq_class(re), mpq_class(im));
}
GaussianRational gq(long n, long d) { return GaussianRational(make_rat(n, d)); }

ExponentialFactor fac(long q, long mod_n, long mod_d, long arg_n, long arg_d) {
  return ExponentialFactor::polar(q, {make_rat(mod_n, mod_d), Angle(make_rat(arg_n, arg_d))});
}

DivisorConfig config_for(std::vector<ExponentialFactor> at_infinity, long rank = 2) {
  DivisorConfig cfg;
  cfg.rank = rank;
  int i = 0;
  for (auto& f : at_infinity)
    cfg.components.push_back({ComponentKind::AtInfinity, f, rank, "S" + std::to_string(++i)});
  return cfg;
}

LaurentExpression expr_mono(long coeff, long xe, long ye) {
  LaurentExpression e;
  e.coeff = GaussianRational(mpq_class(coeff));
  e.x_exp = xe;
  e.y_exp = ye;
  return e;
}

// substitution helpers used to rebuild charts from elementary blow-up steps
BiPoly subst(const BiPoly& p, const BiPoly& x, const BiPoly& y) {
  BiPoly acc;
  for (const auto& [e, c] : p.terms())
    acc = acc + BiPoly::constant(c) * x.pow(e.first) * y.pow(e.second);
  return acc;
}
void w_step(BiPoly& t, BiPoly& y) {
  BiPoly X = BiPoly::monomial(g(1), 1, 0), XY = BiPoly::monomial(g(1), 1, 1);
  t = subst(t, X, XY);
  y = subst(y, X, XY);
}
void z_step(BiPoly& t, BiPoly& y) {
  BiPoly XY = BiPoly::monomial(g(1), 1, 1), Y = BiPoly::monomial(g(1), 0, 1);
  t = subst(t, XY, Y);
  y = subst(y, XY, Y);
}
void translate_step(BiPoly& t, BiPoly& y, const GaussianRational& c) {
  BiPoly X = BiPoly::monomial(g(1), 1, 0);
  BiPoly Yc = BiPoly::monomial(g(1), 0, 1) + BiPoly::constant(c);
  t = subst(t, X, Yc);
  y = subst(y, X, Yc);
}

}  // namespace

TEST_CASE("polar to Gaussian conversion on the axes") {
  CHECK(*gaussian_from_polar({make_rat(1), Angle()}) == g(1));
  CHECK(*gaussian_from_polar({make_rat(2), Angle(make_rat(1, 2))}) == g(0, 2));
  CHECK(*gaussian_from_polar({make_rat(3, 2), Angle(make_rat(1))}) == GaussianRational(make_rat(-3, 2)));
  CHECK(*gaussian_from_polar({make_rat(1), Angle(make_rat(3, 2))}) == g(0, -1));
  CHECK(!gaussian_from_polar({make_rat(1), Angle(make_rat(1, 4))}).has_value());

  CHECK(polar_from_gaussian(g(-2))->modulus == 2);
  CHECK(polar_from_gaussian(g(-2))->argument == Angle(make_rat(1)));
  CHECK(polar_from_gaussian(g(0, 5))->argument == Angle(make_rat(1, 2)));
  CHECK(!polar_from_gaussian(g(1, 1)).has_value());
  CHECK(!polar_from_gaussian(g(0)).has_value());
}

TEST_CASE("exact argument of axis and diagonal values") {
  CHECK(*gaussian_arg(g(3)) == Angle());
  CHECK(*gaussian_arg(g(0, -1)) == Angle(make_rat(3, 2)));
  CHECK(*gaussian_arg(g(1, 1)) == Angle(make_rat(1, 4)));
  CHECK(*gaussian_arg(g(-2, 2)) == Angle(make_rat(3, 4)));
  CHECK(*gaussian_arg(g(-1, -1)) == Angle(make_rat(5, 4)));
  CHECK(*gaussian_arg(g(4, -4)) == Angle(make_rat(7, 4)));
  CHECK(!gaussian_arg(g(1, 2)).has_value());
}

TEST_CASE("goodness certificates for hand-built expressions") {
  LaurentExpression inv_uv = expr_mono(1, -1, -1);
  CHECK(is_good(inv_uv, g(2)) == GoodForm::good(1, 1, g(1)));

  LaurentExpression e = expr_mono(1, -1, -1);
  BiPoly one_minus_v = BiPoly::constant(g(1)) - BiPoly::monomial(g(1), 0, 1);
  e.factors.emplace_back(one_minus_v, 1);
  CHECK(is_good(e, g(1)).kind == GoodForm::Kind::Bad);
  CHECK(is_good(e, g(2)) == GoodForm::good(1, 1, g(-1)));

  LaurentExpression holo;
  holo.factors.emplace_back(one_minus_v, 1);
  CHECK(is_good(normalize(holo), g(1)).kind == GoodForm::Kind::Holomorphic);

  LaurentExpression pole;
  pole.factors.emplace_back(one_minus_v, -1);
  pole = normalize(pole);
  CHECK(is_good(pole, g(1)).kind == GoodForm::Kind::Bad);
  CHECK(is_good(pole, g(0)).kind == GoodForm::Kind::Holomorphic);
}

TEST_CASE("untwisted resolution of a single simple pole") {
  auto res = resolve(ExponentialFactor::zero(), config_for({fac(1, 1, 1, 0, 1)}));
  REQUIRE(res.charts.size() == 2);
  CHECK(res.charts[0].label == "1");
  CHECK(res.charts[1].label == "~1");

  // chart 1: t = uv, y = v, so 1/y = v^-1
  CHECK(laurent_equal(res.chart_exprs[0], expr_mono(1, 0, -1)));
  CHECK(res.chart_exprs[0].x_exp == 0);
  CHECK(res.chart_exprs[0].y_exp == -1);
  CHECK(res.chart_forms[0] == GoodForm::good(0, 1, g(1)));

  // tilde chart: t = u, y = uv, so 1/y = u^-1 v^-1
  CHECK(laurent_equal(res.chart_exprs[1], expr_mono(1, -1, -1)));
  CHECK(res.chart_forms[1] == GoodForm::good(1, 1, g(1)));

  REQUIRE(res.intersections.size() == 1);
  CHECK(res.intersections[0].chart_label == "~1");
  CHECK(res.intersections[0].v0 == g(1));
}

TEST_CASE("untwisted chart towers for depths 1 through 5") {
  for (long n = 1; n <= 5; ++n) {
    std::vector<ExponentialFactor> comps;
    for (long qi = 1; qi <= n; ++qi) comps.push_back(fac(qi, 1, 1, 0, 1));
    auto res = resolve(ExponentialFactor::zero(), config_for(comps));
    REQUIRE(res.charts.size() == static_cast<std::size_t>(n + 1));
    for (long k = 1; k <= n; ++k) {
      const auto& e = res.chart_exprs[k - 1];
      CHECK(e.factors.empty());
      CHECK(e.coeff == g(1));
      CHECK(e.x_exp == -(k - 1));
      CHECK(e.y_exp == -k);
      if (k == 1)
        CHECK(res.chart_forms[0] == GoodForm::good(0, 1, g(1)));
      else
        CHECK(res.chart_forms[k - 1] == GoodForm::good(k - 1, k, g(1)));
    }
    CHECK(res.chart_forms[n] == GoodForm::good(n, 1, g(1)));
    // every component meets the divisor once, at (0, 1/mu)
    REQUIRE(res.intersections.size() == comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
      long qi = comps[i].q();
      CHECK(res.intersections[i].chart_label ==
            (qi < n ? std::to_string(qi + 1) : "~" + std::to_string(n)));
      CHECK(res.intersections[i].v0 == g(1));
    }
  }
}

TEST_CASE("intersection point for coefficient 5") {
  auto res = resolve(ExponentialFactor::zero(), config_for({fac(1, 5, 1, 0, 1)}));
  REQUIRE(res.intersections.size() == 1);
  CHECK(res.intersections[0].v0 == gq(1, 5));
}

TEST_CASE("empty configuration yields the identity chart") {
  DivisorConfig cfg;
  cfg.rank = 1;
  auto res = resolve(ExponentialFactor::zero(), cfg);
  REQUIRE(res.charts.size() == 1);
  CHECK(res.charts[0].kind == ChartKind::Identity);
  CHECK(res.chart_exprs[0].str("t", "y") == "1/y");
  CHECK(res.chart_forms[0] == GoodForm::good(0, 1, g(1)));
}

TEST_CASE("twisted resolution of the simple-pole example") {
  auto psi = fac(1, 1, 1, 0, 1);
  auto res = resolve(psi, config_for({psi}));
  REQUIRE(res.charts.size() == 4);
  CHECK(res.charts[0].label == "1");
  CHECK(res.charts[1].label == "~1");
  CHECK(res.charts[2].label == "1'");
  CHECK(res.charts[3].label == "~1'");

  // chart 1: (u - 1)/(uv)
  CHECK(res.chart_forms[0] == GoodForm::good(1, 1, g(-1)));
  // tilde chart hosts the pole of psi: (1 - v)/(uv), good at the origin
  CHECK(res.chart_exprs[1].str() == "(-v + 1)/(u·v)");
  CHECK(res.chart_forms[1] == GoodForm::good(1, 1, g(1)));
  // and bad exactly at the translated point (0, 1)
  CHECK(is_good(res.chart_exprs[1], g(1)).kind == GoodForm::Kind::Bad);

  // primed chart: -1/(a(b + 1))
  CHECK(res.charts[2].translation.has_value());
  CHECK(*res.charts[2].translation == g(1));
  CHECK(res.chart_forms[2] == GoodForm::good(1, 0, g(-1)));
  BiPoly b_plus_1 = BiPoly::monomial(g(1), 0, 1) + BiPoly::constant(g(1));
  LaurentExpression expected = expr_mono(-1, -1, 0);
  expected.factors.emplace_back(b_plus_1, -1);
  CHECK(laurent_equal(res.chart_exprs[2], expected));

  // tilde-primed chart: -b/(ab + 1), holomorphic
  CHECK(res.chart_forms[3].kind == GoodForm::Kind::Holomorphic);
  BiPoly ab_plus_1 = BiPoly::monomial(g(1), 1, 1) + BiPoly::constant(g(1));
  LaurentExpression expected_t = expr_mono(-1, 0, 1);
  expected_t.factors.emplace_back(ab_plus_1, -1);
  CHECK(laurent_equal(res.chart_exprs[3], expected_t));

  // the matching component moves to the origin of the tilde-primed chart
  REQUIRE(res.intersections.size() == 1);
  CHECK(res.intersections[0].chart_label == "~1'");
  CHECK(res.intersections[0].v0 == g(0));
}

TEST_CASE("twisted resolution below the maximal depth") {
  auto psi = fac(1, 1, 1, 0, 1);  // q = 1 inside an n = 2 tower
  auto other = fac(2, 1, 1, 0, 1);
  auto res = resolve(psi, config_for({psi, other}));
  REQUIRE(res.charts.size() == 5);  // 1, 2, ~2, 1', ~1'
  CHECK(res.charts[1].label == "2");
  CHECK(res.charts[4].label == "~1'");

  CHECK(res.chart_forms[0] == GoodForm::good(1, 1, g(-1)));   // k = 1 <= q
  CHECK(res.chart_forms[1] == GoodForm::good(1, 2, g(1)));    // pole chart q + 1
  CHECK(res.chart_forms[2] == GoodForm::good(2, 1, g(1)));    // tilde
  CHECK(res.chart_forms[3] == GoodForm::good(1, 0, g(-1)));   // primed, -mu^(q+2)
  CHECK(res.chart_forms[4].kind == GoodForm::Kind::Holomorphic);

  // pole chart is bad exactly at (0, 1/mu)
  CHECK(is_good(res.chart_exprs[1], g(1)).kind == GoodForm::Kind::Bad);
  CHECK(is_good(res.chart_exprs[1], g(2)).kind != GoodForm::Kind::Bad);

  REQUIRE(res.intersections.size() == 2);
  CHECK(res.intersections[0].chart_label == "~1'");
  CHECK(res.intersections[0].v0 == g(0));
  CHECK(res.intersections[1].chart_label == "~2");
  CHECK(res.intersections[1].v0 == g(1));
}

TEST_CASE("imaginary coefficient stays exact") {
  auto psi = fac(1, 1, 1, 1, 2);  // i/t inside an n = 2 tower
  auto res = resolve(psi, config_for({psi, fac(2, 1, 1, 0, 1)}));
  // primed chart carries beta0 = -mu^3 = i
  CHECK(res.chart_forms[3] == GoodForm::good(1, 0, g(0, 1)));
  CHECK(res.intersections[0].chart_label == "~1'");
  // non-matching component q = 2 keeps its point
  CHECK(res.intersections[1].v0 == g(1));
}

TEST_CASE("twist deeper than the tower is rejected") {
  try {
    resolve(fac(2, 1, 1, 0, 1), config_for({fac(1, 1, 1, 0, 1)}));
    FAIL("expected UnsupportedTwist");
  } catch (const StokesError& e) {
    CHECK(e.kind() == "UnsupportedTwist");
  }
}

TEST_CASE("non-Gaussian coefficients are rejected by this module") {
  auto diag = fac(1, 1, 1, 1, 4);  // argument pi/4
  try {
    resolve(diag, config_for({diag}));
    FAIL("expected BadInput");
  } catch (const StokesError& e) {
    CHECK(e.kind() == "BadInput");
  }
}

TEST_CASE("charts compose from elementary blow-up steps") {
  auto psi = fac(2, 3, 1, 1, 1);  // -3/t^2 inside an n = 3 tower
  auto cfg = config_for({fac(1, 1, 1, 0, 1), psi, fac(3, 2, 1, 1, 2)});
  for (const auto& twist : {ExponentialFactor::zero(), psi}) {
    auto res = resolve(twist, cfg);
    for (const auto& ch : res.charts) {
      BiPoly t = BiPoly::monomial(g(1), 1, 0), y = BiPoly::monomial(g(1), 0, 1);
      switch (ch.kind) {
        case ChartKind::Identity:
          break;
        case ChartKind::Base:
          for (long i = 1; i < ch.index; ++i) w_step(t, y);
          z_step(t, y);
          break;
        case ChartKind::BaseTilde:
          for (long i = 0; i < ch.index; ++i) w_step(t, y);
          break;
        case ChartKind::Primed:
        case ChartKind::PrimedTilde: {
          long host_depth = res.psi.q() < max_pole_order(cfg) ? res.psi.q() + 1 : res.psi.q();
          bool host_is_tilde = res.psi.q() == max_pole_order(cfg);
          if (host_is_tilde) {
            for (long i = 0; i < host_depth; ++i) w_step(t, y);
          } else {
            for (long i = 1; i < host_depth; ++i) w_step(t, y);
            z_step(t, y);
          }
          translate_step(t, y, *ch.translation);
          if (ch.kind == ChartKind::Primed) {
            for (long i = 1; i < ch.index; ++i) w_step(t, y);
            z_step(t, y);
          } else {
            for (long i = 0; i < ch.index; ++i) w_step(t, y);
          }
          break;
        }
      }
      CHECK(t == ch.t_expr);
      CHECK(y == ch.y_expr);
    }
    // no bad certificates, one intersection per component, all distinct
    for (const auto& f : res.chart_forms) CHECK(f.kind != GoodForm::Kind::Bad);
    REQUIRE(res.intersections.size() == 3);
    for (std::size_t i = 0; i < res.intersections.size(); ++i)
      for (std::size_t j = i + 1; j < res.intersections.size(); ++j) {
        bool same = res.intersections[i].chart_label == res.intersections[j].chart_label &&
                    res.intersections[i].v0 == res.intersections[j].v0;
        CHECK(!same);
      }
  }
}
