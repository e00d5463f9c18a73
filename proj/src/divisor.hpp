#pragma once

#include <string>
#include <utility>
#include <vector>

#include "factor.hpp"

namespace stokes {

enum class ComponentKind { AtInfinity, Elsewhere };

// One irreducible divisor component together with its vanishing-cycle
// dimension. AtInfinity components cluster at the pole of 1/y and drive the
// exponential factors; Elsewhere components meet the divisor at their own
// points and only feed the untwisted summand.
struct DivisorComponent {
  ComponentKind kind;
  ExponentialFactor factor = ExponentialFactor::zero();  // must be made nonzero
  long phi_dim = 0;          // >= 0
  std::string label;
};

struct DivisorConfig {
  long rank = 1;
  std::vector<DivisorComponent> components;
};

// Throws AssumptionViolation naming the offending component pair (duplicate
// (q, mu0) among AtInfinity, duplicate Elsewhere labels) or field.
void validate(const DivisorConfig& config);

// One (0, sum of Elsewhere dims) entry followed by one (psi_i, phi_dim_i)
// entry per AtInfinity component, in input order. Rank-0 entries retained.
std::vector<std::pair<ExponentialFactor, long>> formal_decomposition(const DivisorConfig& config);

// Stalk dimension of the filtration at test exponent psi and direction theta.
// Throws StokesDirectionHit if theta is a Stokes direction of a relevant pair.
long stalk_dim(const DivisorConfig& config, const ExponentialFactor& psi, const Angle& theta);

long total_dim(const DivisorConfig& config);

// n = max q_i over AtInfinity components, 0 when there are none
long max_pole_order(const DivisorConfig& config);

// All distinct exponential factors in play: 0 followed by the psi_i.
std::vector<ExponentialFactor> factor_set(const DivisorConfig& config);

}  // namespace stokes
