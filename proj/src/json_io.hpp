#pragma once

#include <json.hpp>
#include <string>

#include "cech.hpp"
#include "divisor.hpp"
#include "example.hpp"
#include "fiber.hpp"
#include "rep.hpp"
#include "resolution.hpp"
#include "verify.hpp"

namespace stokes {

using nlohmann::json;

// Parsers throw StokesError("ParseError", ...) on shape problems; value
// problems (bad rationals, negative orders) surface as BadInput from the
// constructors downstream.
Angle angle_from_json(const json& j);              // "1/2" or "1/2·π"
ExponentialFactor factor_from_json(const json& j);  // "0" | {q, mu0}
DivisorConfig config_from_json(const json& j);
MonodromyRep rep_from_json(const json& j);

json angle_to_json(const Angle& a);
json factor_to_json(const ExponentialFactor& f);
json config_to_json(const DivisorConfig& config);
json decomposition_to_json(const std::vector<std::pair<ExponentialFactor, long>>& dec);
json goodform_to_json(const GoodForm& g);
json resolution_to_json(const Resolution& res);
json bset_to_json(const BSet& b);
json ratmat_to_json(const RatMat& m);
json ringmat_to_json(const RingMat& m);
json stokes_datum_to_json(const StokesDatum& sd);
json checks_to_json(const std::vector<CheckResult>& checks);

// The standard demonstration configuration: one simple pole component at
// infinity and one component elsewhere, both with vanishing cycles of the
// given dimension.
DivisorConfig default_config(long rank);

}  // namespace stokes
