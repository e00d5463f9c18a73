#include "json_io.hpp"

#include "errors.hpp"

namespace stokes {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { fail("ParseError", msg); }

mpq_class rat_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (j.is_string()) {
    auto r = parse_rat(j.get<std::string>());
    if (r) return *r;
  }
  parse_fail(std::string(what) + " must be an integer or a 'p/q' string");
}

std::string require_string(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    parse_fail(std::string("missing string field '") + key + "'");
  return j[key].get<std::string>();
}

}  // namespace

Angle angle_from_json(const json& j) {
  if (j.is_number_integer()) return Angle(mpq_class(j.get<long>()));
  if (j.is_string()) {
    auto a = Angle::parse(j.get<std::string>());
    if (a) return *a;
  }
  parse_fail("angle must be a rational multiple of pi, e.g. \"1/2\" or \"1/2·π\"");
}

ExponentialFactor factor_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "0") return ExponentialFactor::zero();
  if (j.is_null()) return ExponentialFactor::zero();
  if (!j.is_object()) parse_fail("factor must be \"0\" or an object {q, mu0}");
  if (!j.contains("q") || !j["q"].is_number_integer())
    parse_fail("factor needs an integer pole order 'q'");
  const long q = j["q"].get<long>();
  if (!j.contains("mu0") || !j["mu0"].is_object())
    parse_fail("factor needs a leading coefficient 'mu0'");
  const json& mu = j["mu0"];
  PolarCoefficient c{rat_from_json(mu.contains("modulus") ? mu["modulus"] : json(),
                                   "mu0.modulus"),
                     mu.contains("argument_pi") ? angle_from_json(mu["argument_pi"])
                                                : Angle()};
  return ExponentialFactor::polar(q, c);
}

DivisorConfig config_from_json(const json& j) {
  if (!j.is_object()) parse_fail("configuration must be an object");
  DivisorConfig cfg;
  if (j.contains("rank")) {
    if (!j["rank"].is_number_integer()) parse_fail("rank must be an integer");
    cfg.rank = j["rank"].get<long>();
  }
  if (!j.contains("components") || !j["components"].is_array())
    parse_fail("configuration needs a 'components' array");
  std::size_t idx = 0;
  for (const auto& cj : j["components"]) {
    ++idx;
    if (!cj.is_object()) parse_fail("component must be an object");
    DivisorComponent c;
    const std::string kind = require_string(cj, "kind");
    if (kind == "at_infinity")
      c.kind = ComponentKind::AtInfinity;
    else if (kind == "elsewhere")
      c.kind = ComponentKind::Elsewhere;
    else
      parse_fail("component kind must be 'at_infinity' or 'elsewhere'");
    c.factor = factor_from_json(cj);
    if (c.factor.is_zero())
      parse_fail("component " + std::to_string(idx) + " needs a nonzero factor");
    c.phi_dim = cj.contains("phi_dim")
                    ? (cj["phi_dim"].is_number_integer()
                           ? cj["phi_dim"].get<long>()
                           : (parse_fail("phi_dim must be an integer"), 0))
                    : 1;
    c.label = cj.contains("label") ? require_string(cj, "label")
                                   : "C" + std::to_string(idx);
    cfg.components.push_back(std::move(c));
  }
  return cfg;
}

MonodromyRep rep_from_json(const json& j) {
  if (j.is_null()) return MonodromyRep::symbolic();
  if (!j.is_object()) parse_fail("representation must be an object");
  const std::string backend =
      j.contains("backend") ? require_string(j, "backend") : "symbolic";
  if (backend == "symbolic") return MonodromyRep::symbolic();
  if (backend == "random") {
    if (!j.contains("rank") || !j["rank"].is_number_integer())
      parse_fail("random representation needs an integer 'rank'");
    const unsigned long seed =
        j.contains("seed") ? j["seed"].get<unsigned long>() : 0;
    return MonodromyRep::random(j["rank"].get<std::size_t>(), seed);
  }
  if (backend != "matrix")
    parse_fail("backend must be 'symbolic', 'matrix' or 'random'");
  auto mat = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_array())
      parse_fail(std::string("matrix representation needs '") + key + "'");
    const json& rows = j[key];
    const std::size_t n = rows.size();
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!rows[i].is_array() || rows[i].size() != n)
        parse_fail(std::string(key) + " must be a square array of rows");
      for (std::size_t k = 0; k < n; ++k)
        m.at(i, k) = rat_from_json(rows[i][k], key);
    }
    return m;
  };
  return MonodromyRep::matrices(mat("S"), mat("T"), mat("U"));
}

json angle_to_json(const Angle& a) { return a.str(); }

json factor_to_json(const ExponentialFactor& f) { return f.str(); }

json config_to_json(const DivisorConfig& config) {
  json comps = json::array();
  for (const auto& c : config.components) {
    json cj{{"kind", c.kind == ComponentKind::AtInfinity ? "at_infinity"
                                                         : "elsewhere"},
            {"factor", c.factor.str()},
            {"phi_dim", c.phi_dim},
            {"label", c.label}};
    comps.push_back(std::move(cj));
  }
  return json{{"rank", config.rank}, {"components", std::move(comps)}};
}

json decomposition_to_json(
    const std::vector<std::pair<ExponentialFactor, long>>& dec) {
  json out = json::array();
  for (const auto& [factor, rank] : dec)
    out.push_back(json{{"factor", factor.str()}, {"rank", rank}});
  return out;
}

json goodform_to_json(const GoodForm& g) {
  switch (g.kind) {
    case GoodForm::Kind::Holomorphic:
      return json{{"kind", "holomorphic"}};
    case GoodForm::Kind::Bad:
      return json{{"kind", "bad"}};
    case GoodForm::Kind::Good:
      break;
  }
  return json{{"kind", "good"}, {"m", g.m}, {"n", g.n}, {"beta0", g.beta0.str()}};
}

json resolution_to_json(const Resolution& res) {
  json charts = json::array();
  for (std::size_t i = 0; i < res.charts.size(); ++i) {
    const Chart& c = res.charts[i];
    charts.push_back(json{
        {"label", c.label},
        {"t", c.t_expr.str(c.xname, c.yname)},
        {"y", c.y_expr.str(c.xname, c.yname)},
        {"pullback", res.chart_exprs[i].str(c.xname, c.yname)},
        {"form", goodform_to_json(res.chart_forms[i])}});
  }
  json inters = json::array();
  for (const auto& p : res.intersections)
    inters.push_back(json{{"component", p.component},
                          {"chart", p.chart_label},
                          {"v0", p.v0.str()}});
  return json{{"psi", res.psi.str()},
              {"charts", std::move(charts)},
              {"intersections", std::move(inters)}};
}

json bset_to_json(const BSet& b) {
  json punct = json::array();
  for (const auto& p : b.punctures)
    punct.push_back(json{{"label", p.label},
                         {"component", p.component},
                         {"phi_dim", p.phi_dim}});
  return json{{"psi", b.psi.str()},
              {"theta", b.theta.str()},
              {"arc", json{{"from", b.arc.lo.str()}, {"to", b.arc.hi.str()}}},
              {"punctures", std::move(punct)},
              {"h1c_dim", h1c_dimension(b)}};
}

json ratmat_to_json(const RatMat& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json ringmat_to_json(const RingMat& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).str());
    out.push_back(std::move(row));
  }
  return out;
}

json stokes_datum_to_json(const StokesDatum& sd) {
  json factors = json::array();
  for (const auto& f : sd.factors) factors.push_back(f.str());
  json out{{"factors", std::move(factors)},
           {"n_pi", ringmat_to_json(sd.n_pi)},
           {"n_zero", ringmat_to_json(sd.n_zero)},
           {"s01", ringmat_to_json(sd.s01)},
           {"s10", ringmat_to_json(sd.s10)},
           {"total", ringmat_to_json(total_monodromy(sd))}};
  if (sd.backend == Backend::Matrix) {
    out["rank"] = sd.r;
    out["s01_matrix"] = ratmat_to_json(sd.s01_mat);
    out["s10_matrix"] = ratmat_to_json(sd.s10_mat);
    out["total_matrix"] = ratmat_to_json(total_monodromy_matrix(sd));
  }
  return out;
}

json checks_to_json(const std::vector<CheckResult>& checks) {
  json out = json::array();
  for (const auto& c : checks) {
    json cj{{"name", c.name}, {"ok", c.ok}};
    if (!c.ok) cj["detail"] = c.detail;
    out.push_back(std::move(cj));
  }
  return out;
}

DivisorConfig default_config(long rank) {
  DivisorConfig cfg;
  cfg.rank = rank;
  const auto one_over_t = ExponentialFactor::polar(1, {mpq_class(1), Angle()});
  cfg.components.push_back(
      {ComponentKind::AtInfinity, one_over_t, rank, "S1"});
  cfg.components.push_back(
      {ComponentKind::Elsewhere, one_over_t, rank, "St1"});
  return cfg;
}

}  // namespace stokes
