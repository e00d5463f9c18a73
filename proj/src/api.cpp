#include "stokes/stokes_c.h"

#include <string>

#include "errors.hpp"
#include "json_io.hpp"
#include "verify.hpp"

struct stk_result {
  std::string text;
  int code = 0;
};

namespace stokes {
namespace {

DivisorConfig config_arg(const json& req) {
  if (req.contains("config")) return config_from_json(req["config"]);
  long rank = 2;
  if (req.contains("rank")) {
    if (!req["rank"].is_number_integer())
      fail("ParseError", "rank must be an integer");
    rank = req["rank"].get<long>();
  }
  return default_config(rank);
}

Angle theta_arg(const json& req) {
  if (!req.contains("theta"))
    fail("ParseError", "this command needs a direction 'theta'");
  return angle_from_json(req["theta"]);
}

// Factor arguments accept an index into the configuration's factor set so
// callers never have to restate exact coefficients.
ExponentialFactor factor_arg(const json& req, const char* key,
                             const DivisorConfig& config, long default_index) {
  const auto fs = factor_set(config);
  if (!req.contains(key)) {
    if (default_index < 0 || default_index >= (long)fs.size())
      fail("BadInput", std::string("no default for '") + key +
                           "': the factor set has " +
                           std::to_string(fs.size()) + " entries");
    return fs[default_index];
  }
  const json& j = req[key];
  if (j.is_number_integer()) {
    const long i = j.get<long>();
    if (i < 0 || i >= (long)fs.size())
      fail("BadInput", std::string(key) + " index " + std::to_string(i) +
                           " is out of range; the factor set has " +
                           std::to_string(fs.size()) + " entries");
    return fs[i];
  }
  return factor_from_json(j);
}

json cmd_directions(const json& req) {
  const DivisorConfig config = config_arg(req);
  const auto phi = factor_arg(req, "phi", config, 0);
  const auto psi = factor_arg(req, "psi", config, 1);
  json dirs = json::array();
  for (const auto& d : stokes_directions(phi, psi)) dirs.push_back(d.str());
  return json{{"phi", phi.str()}, {"psi", psi.str()}, {"directions", dirs}};
}

json cmd_order(const json& req) {
  const DivisorConfig config = config_arg(req);
  const Angle theta = theta_arg(req);
  json out = json::array();
  for (const auto& f : total_order(factor_set(config), theta))
    out.push_back(f.str());
  return json{{"theta", theta.str()}, {"order", out}};
}

json cmd_decompose(const json& req) {
  const DivisorConfig config = config_arg(req);
  return json{{"decomposition",
               decomposition_to_json(formal_decomposition(config))}};
}

json dims_at(const DivisorConfig& config, const Angle& theta) {
  json dims = json::array();
  for (const auto& f : factor_set(config))
    dims.push_back(json{{"factor", f.str()},
                        {"dim", stalk_dim(config, f, theta)}});
  return json{{"theta", theta.str()}, {"dims", dims}};
}

json cmd_dims(const json& req) {
  const DivisorConfig config = config_arg(req);
  if (req.contains("grid")) {
    if (!req["grid"].is_number_integer() || req["grid"].get<long>() < 1)
      fail("ParseError", "grid must be a positive integer");
    const long n = req["grid"].get<long>();
    json rows = json::array();
    for (long j = 0; j < n; ++j) {
      const Angle theta(make_rat(2 * j + 1, n));  // midpoints, in pi units
      try {
        rows.push_back(dims_at(config, theta));
      } catch (const StokesError& e) {
        if (e.kind() != "StokesDirectionHit") throw;
        rows.push_back(json{{"theta", theta.str()}, {"stokes_direction", true}});
      }
    }
    return json{{"grid", rows}, {"total", total_dim(config)}};
  }
  json out = dims_at(config, theta_arg(req));
  out["total"] = total_dim(config);
  return out;
}

json cmd_resolve(const json& req) {
  const DivisorConfig config = config_arg(req);
  const auto psi = factor_arg(req, "psi", config, 0);
  return resolution_to_json(resolve(psi, config));
}

json cmd_fiber(const json& req) {
  const DivisorConfig config = config_arg(req);
  const auto psi = factor_arg(req, "psi", config, 0);
  return bset_to_json(b_set(config, psi, theta_arg(req)));
}

json cmd_stokes(const json& req) {
  const MonodromyRep rep =
      req.contains("rep") ? rep_from_json(req["rep"]) : MonodromyRep::symbolic();
  const StokesDatum sd = stokes_data(rep);
  json out = stokes_datum_to_json(sd);
  json violations = json::array();
  for (const auto& v : validate_stokes_datum(sd, rep)) violations.push_back(v);
  out["violations"] = violations;
  out["valid"] = violations.empty();
  return out;
}

json cmd_verify(const json& req) {
  unsigned long seed = 20260814;
  int trials = 5;
  if (req.contains("seed")) seed = req["seed"].get<unsigned long>();
  if (req.contains("trials")) trials = req["trials"].get<int>();
  const auto checks = run_checks(seed, trials);
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.ok;
  return json{{"seed", seed}, {"trials", trials},
              {"checks", checks_to_json(checks)}, {"ok", ok}};
}

json dispatch(const std::string& command, const json& req) {
  if (command == "directions") return cmd_directions(req);
  if (command == "order") return cmd_order(req);
  if (command == "decompose") return cmd_decompose(req);
  if (command == "dims") return cmd_dims(req);
  if (command == "resolve") return cmd_resolve(req);
  if (command == "fiber") return cmd_fiber(req);
  if (command == "stokes") return cmd_stokes(req);
  if (command == "verify") return cmd_verify(req);
  fail("UnknownCommand", "unknown command '" + command + "'");
}

int error_code(const std::string& kind) {
  if (kind == "ParseError" || kind == "UnknownCommand") return 2;
  if (kind == "Internal") return 3;
  return 1;  // domain and validation errors
}

}  // namespace
}  // namespace stokes

extern "C" {

int stk_run(const char* command, const char* request_json, stk_result** out) {
  if (!out) return 3;
  auto* res = new stk_result;
  *out = res;
  using stokes::json;
  std::string kind, message;
  try {
    if (!command) stokes::fail("ParseError", "command is null");
    json req = json::object();
    if (request_json && *request_json) {
      req = json::parse(request_json, nullptr, false);
      if (req.is_discarded())
        stokes::fail("ParseError", "request is not valid JSON");
      if (!req.is_object())
        stokes::fail("ParseError", "request must be a JSON object");
    }
    json payload = stokes::dispatch(command, req);
    payload["ok"] = true;
    res->text = payload.dump();
    res->code = 0;
    return 0;
  } catch (const stokes::StokesError& e) {
    kind = e.kind();
    message = e.what();
  } catch (const json::exception& e) {
    kind = "ParseError";
    message = e.what();
  } catch (const std::exception& e) {
    kind = "Internal";
    message = e.what();
  } catch (...) {
    kind = "Internal";
    message = "unknown failure";
  }
  res->code = stokes::error_code(kind);
  res->text = stokes::json{
      {"ok", false},
      {"error", {{"kind", kind}, {"message", message}}}}.dump();
  return res->code;
}

const char* stk_result_json(const stk_result* result) {
  return result ? result->text.c_str() : "";
}

void stk_result_free(stk_result* result) { delete result; }

const char* stk_version(void) { return "0.1.0"; }

}  // extern "C"
