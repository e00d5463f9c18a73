#include "divisor.hpp"

#include "errors.hpp"

namespace stokes {

void validate(const DivisorConfig& config) {
  if (config.rank < 1) fail("AssumptionViolation", "rank must be a positive integer");
  for (std::size_t i = 0; i < config.components.size(); ++i) {
    const auto& c = config.components[i];
    if (c.factor.is_zero())
      fail("AssumptionViolation",
           "component " + std::to_string(i) + " carries a zero exponential factor");
    if (c.phi_dim < 0)
      fail("AssumptionViolation", "component " + std::to_string(i) + " has negative phi_dim");
  }
  for (std::size_t i = 0; i < config.components.size(); ++i) {
    for (std::size_t j = i + 1; j < config.components.size(); ++j) {
      const auto& a = config.components[i];
      const auto& b = config.components[j];
      if (a.kind == ComponentKind::AtInfinity && b.kind == ComponentKind::AtInfinity &&
          a.factor == b.factor)
        fail("AssumptionViolation", "components " + std::to_string(i) + " and " +
                                        std::to_string(j) + " share (q, mu0)");
      if (a.kind == ComponentKind::Elsewhere && b.kind == ComponentKind::Elsewhere &&
          a.label == b.label)
        fail("AssumptionViolation", "components " + std::to_string(i) + " and " +
                                        std::to_string(j) + " share the label '" + a.label + "'");
    }
  }
}

std::vector<std::pair<ExponentialFactor, long>> formal_decomposition(const DivisorConfig& config) {
  validate(config);
  long elsewhere = 0;
  for (const auto& c : config.components)
    if (c.kind == ComponentKind::Elsewhere) elsewhere += c.phi_dim;
  std::vector<std::pair<ExponentialFactor, long>> out;
  out.emplace_back(ExponentialFactor::zero(), elsewhere);
  for (const auto& c : config.components)
    if (c.kind == ComponentKind::AtInfinity) out.emplace_back(c.factor, c.phi_dim);
  return out;
}

long stalk_dim(const DivisorConfig& config, const ExponentialFactor& psi, const Angle& theta) {
  validate(config);
  long dim = 0;
  for (const auto& c : config.components) {
    if (c.kind != ComponentKind::AtInfinity) continue;
    ComparisonResult r = compare_at(c.factor, psi, theta);
    if (r == ComparisonResult::Stokes)
      fail("StokesDirectionHit", "theta is a Stokes direction of (" + c.factor.str() + ", " +
                                     psi.str() + ")");
    if (is_less_eq(r)) dim += c.phi_dim;
  }
  ComparisonResult zero_cmp = compare_at(ExponentialFactor::zero(), psi, theta);
  if (zero_cmp == ComparisonResult::Stokes)
    fail("StokesDirectionHit", "theta is a Stokes direction of (0, " + psi.str() + ")");
  if (is_less_eq(zero_cmp)) {
    for (const auto& c : config.components)
      if (c.kind == ComponentKind::Elsewhere) dim += c.phi_dim;
  }
  return dim;
}

long total_dim(const DivisorConfig& config) {
  validate(config);
  long dim = 0;
  for (const auto& c : config.components) dim += c.phi_dim;
  return dim;
}

long max_pole_order(const DivisorConfig& config) {
  long n = 0;
  for (const auto& c : config.components)
    if (c.kind == ComponentKind::AtInfinity && c.factor.q() > n) n = c.factor.q();
  return n;
}

std::vector<ExponentialFactor> factor_set(const DivisorConfig& config) {
  std::vector<ExponentialFactor> out{ExponentialFactor::zero()};
  for (const auto& c : config.components) {
    if (c.kind != ComponentKind::AtInfinity) continue;
    bool seen = false;
    for (const auto& f : out)
      if (f == c.factor) seen = true;
    if (!seen) out.push_back(c.factor);
  }
  return out;
}

}  // namespace stokes
