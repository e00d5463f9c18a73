#include "fiber.hpp"

namespace stokes {

namespace {

BoundaryArc arc_for(long n, const Angle& theta) {
  Angle shift = theta.scaled(n);
  return {quarter_pi(1) - shift, quarter_pi(3) - shift};
}

}  // namespace

BoundaryArc boundary_arc(long n, const Angle& theta) {
  if (n < 1) fail("BadInput", "boundary_arc needs a positive pole order");
  return arc_for(n, theta);
}

bool moderate_point(long m, long n, const Angle& beta0_arg, const Angle& theta_u,
                    const Angle& theta_v) {
  Angle x = beta0_arg - theta_u.scaled(m) - theta_v.scaled(n);
  mpq_class u = x.pi_units();  // in [0, 2)
  return u > make_rat(1, 2) && u < make_rat(3, 2);
}

bool moderate_point(const GoodForm& form, const Angle& theta_u, const Angle& theta_v) {
  if (form.kind == GoodForm::Kind::Holomorphic) return true;
  if (form.kind == GoodForm::Kind::Bad)
    fail("BadInput", "moderate growth is undefined for a Bad certificate");
  auto arg = gaussian_arg(form.beta0);
  if (!arg)
    fail("UnrepresentableAngle",
         "argument of " + form.beta0.str() + " is not an exact multiple of π/4");
  return moderate_point(form.m, form.n, *arg, theta_u, theta_v);
}

BSet b_set(const DivisorConfig& config, const ExponentialFactor& psi, const Angle& theta) {
  validate(config);
  BSet out;
  out.psi = psi;
  out.theta = theta;
  out.arc = arc_for(max_pole_order(config), theta);

  auto check = [&](const ExponentialFactor& other, const std::string& name) {
    ComparisonResult r = compare_at(other, psi, theta);
    if (r == ComparisonResult::Stokes)
      fail("StokesDirectionHit", "direction " + theta.str() + " is a Stokes direction for " +
                                     name + " against " + psi.str());
    return is_less_eq(r);
  };

  bool include_tilde = check(ExponentialFactor::zero(), "0");
  long pole_idx = 0, other_idx = 0;
  for (std::size_t i = 0; i < config.components.size(); ++i) {
    const auto& comp = config.components[i];
    if (comp.kind == ComponentKind::AtInfinity) {
      ++pole_idx;
      if (check(comp.factor, comp.factor.str()))
        out.punctures.push_back(
            {comp.kind, i, comp.phi_dim, "P" + std::to_string(pole_idx)});
    } else {
      ++other_idx;
      if (include_tilde)
        out.punctures.push_back(
            {comp.kind, i, comp.phi_dim, "P~" + std::to_string(other_idx)});
    }
  }
  return out;
}

long h1c_dimension(const BSet& bset) {
  long d = 0;
  for (const auto& p : bset.punctures) d += p.phi_dim;
  return d;
}

}  // namespace stokes
