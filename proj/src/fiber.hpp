#pragma once

#include <string>
#include <vector>

#include "divisor.hpp"
#include "resolution.hpp"

namespace stokes {

// Open arc (lo, hi) on the boundary circle; always of length pi here.
struct BoundaryArc {
  Angle lo, hi;
  bool operator==(const BoundaryArc& o) const { return lo == o.lo && hi == o.hi; }
  std::string str() const { return "(" + lo.str() + ", " + hi.str() + ")"; }
};

// Boundary point of a puncture of the fiber disc: P_i for the i-th pole
// component, P~j for the j-th component elsewhere (1-based per kind).
struct Puncture {
  ComponentKind kind;
  std::size_t component;  // index into config.components
  long phi_dim;
  std::string label;
};

// Support of the twisted homology sheaf on the fiber over direction theta.
struct BSet {
  ExponentialFactor psi = ExponentialFactor::zero();
  Angle theta;
  std::vector<Puncture> punctures;
  BoundaryArc arc;
};

// The open interval (pi/2 - n*theta, 3pi/2 - n*theta) reduced mod 2pi.
BoundaryArc boundary_arc(long n, const Angle& theta);

// Moderate-growth test at a Good(m, n, beta0) point approached along sector
// directions (theta_u, theta_v): arg(beta0) - m*theta_u - n*theta_v must lie
// in the open interval (pi/2, 3pi/2) mod 2pi.
bool moderate_point(long m, long n, const Angle& beta0_arg, const Angle& theta_u,
                    const Angle& theta_v);
// Holomorphic points are moderate everywhere; Bad certificates are rejected.
bool moderate_point(const GoodForm& form, const Angle& theta_u, const Angle& theta_v);

// Punctures whose local system contributes at direction theta:
// P_i enters iff psi_i <=_theta psi, and the P~j enter iff 0 <=_theta psi.
// theta must stay clear of the Stokes directions of every pair involved.
BSet b_set(const DivisorConfig& config, const ExponentialFactor& psi, const Angle& theta);

// Compactly supported H^1 of the fiber with coefficients in the local
// system: the sum of vanishing-cycle dimensions over included punctures.
long h1c_dimension(const BSet& bset);

}  // namespace stokes
