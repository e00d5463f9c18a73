#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>

#include "stokes/stokes_c.h"

using nlohmann::json;

namespace {

int emit(const std::string& command, const json& request, bool compact) {
  stk_result* res = nullptr;
  const std::string body = request.dump();
  const int code = stk_run(command.c_str(), body.c_str(), &res);
  std::cout << (compact ? json::parse(stk_result_json(res)).dump()
                        : json::parse(stk_result_json(res)).dump(2))
            << "\n";
  stk_result_free(res);
  if (code == 0) return 0;
  return code == 1 ? 1 : 2;  // parse and internal failures both exit 2
}

int fail_early(const std::string& message) {
  std::cout << json{{"ok", false},
                    {"error", {{"kind", "ParseError"}, {"message", message}}}}
                   .dump(2)
            << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Stokes-structure computations"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --compact appear after the subcommand
  app.set_version_flag("--version", stk_version());

  bool compact = false;
  app.add_flag("--compact", compact, "one-line JSON output");

  std::string config_file;
  long rank = 2;
  std::string theta;
  long grid = 0;
  long phi_index = -1, psi_index = -1;
  std::string rep_file;
  long numeric_rank = 0;
  unsigned long seed = 20260814;
  int trials = 5;

  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", config_file,
                    "configuration JSON file (default: built-in example)");
    sub->add_option("--rank", rank,
                    "rank of the built-in example configuration");
  };

  auto* c_directions = app.add_subcommand(
      "directions", "Stokes directions of a pair of exponential factors");
  add_config(c_directions);
  c_directions->add_option("--phi", phi_index, "factor-set index (default 0)");
  c_directions->add_option("--psi", psi_index, "factor-set index (default 1)");

  auto* c_order = app.add_subcommand("order", "factors sorted at a direction");
  add_config(c_order);
  auto* order_theta = c_order->add_option("--theta", theta, "direction, in units of pi");

  auto* c_decompose =
      app.add_subcommand("decompose", "formal decomposition of the configuration");
  add_config(c_decompose);

  auto* c_dims = app.add_subcommand("dims", "stalk dimensions of the filtration");
  add_config(c_dims);
  auto* dims_theta = c_dims->add_option("--theta", theta, "direction, in units of pi");
  auto* dims_grid = c_dims->add_option("--grid", grid, "sample N midpoint directions");

  auto* c_resolve =
      app.add_subcommand("resolve", "blow-up tower with good-form certificates");
  add_config(c_resolve);
  auto* resolve_psi =
      c_resolve->add_option("--psi", psi_index, "twist: factor-set index (default 0)");

  auto* c_fiber = app.add_subcommand("fiber", "boundary support set of the fiber");
  add_config(c_fiber);
  auto* fiber_psi =
      c_fiber->add_option("--psi", psi_index, "twist: factor-set index (default 0)");
  auto* fiber_theta = c_fiber->add_option("--theta", theta, "direction, in units of pi");

  auto* c_stokes =
      app.add_subcommand("stokes", "Stokes matrices of the worked example");
  auto* stokes_numeric = c_stokes->add_option(
      "--numeric", numeric_rank, "evaluate in a random representation of this rank");
  c_stokes->add_option("--seed", seed, "seed for --numeric");
  auto* stokes_rep =
      c_stokes->add_option("--rep", rep_file, "representation JSON file");

  auto* c_verify = app.add_subcommand("verify", "randomized invariant checks");
  c_verify->add_option("--seed", seed, "base seed");
  c_verify->add_option("--trials", trials, "trials per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);  // prints usage; 0 for --help/--version
    return rc == 0 ? 0 : 2;
  }

  json req = json::object();
  auto* sub = app.get_subcommands().front();

  if (!config_file.empty()) {
    std::ifstream in(config_file);
    if (!in) return fail_early("cannot open config file '" + config_file + "'");
    json cfg = json::parse(in, nullptr, false);
    if (cfg.is_discarded())
      return fail_early("config file '" + config_file + "' is not valid JSON");
    req["config"] = cfg;
  } else if (rank != 2) {
    req["rank"] = rank;
  }

  if (sub == c_directions) {
    if (phi_index >= 0) req["phi"] = phi_index;
    if (psi_index >= 0) req["psi"] = psi_index;
    return emit("directions", req, compact);
  }
  if (sub == c_order) {
    if (order_theta->count()) req["theta"] = theta;
    return emit("order", req, compact);
  }
  if (sub == c_decompose) return emit("decompose", req, compact);
  if (sub == c_dims) {
    if (dims_theta->count()) req["theta"] = theta;
    if (dims_grid->count()) req["grid"] = grid;
    return emit("dims", req, compact);
  }
  if (sub == c_resolve) {
    if (resolve_psi->count()) req["psi"] = psi_index;
    return emit("resolve", req, compact);
  }
  if (sub == c_fiber) {
    if (fiber_psi->count()) req["psi"] = psi_index;
    if (fiber_theta->count()) req["theta"] = theta;
    return emit("fiber", req, compact);
  }
  if (sub == c_stokes) {
    if (stokes_rep->count()) {
      std::ifstream in(rep_file);
      if (!in) return fail_early("cannot open rep file '" + rep_file + "'");
      json rep = json::parse(in, nullptr, false);
      if (rep.is_discarded())
        return fail_early("rep file '" + rep_file + "' is not valid JSON");
      req["rep"] = rep;
    } else if (stokes_numeric->count()) {
      req["rep"] = json{{"backend", "random"},
                        {"rank", numeric_rank},
                        {"seed", seed}};
    }
    return emit("stokes", req, compact);
  }
  if (sub == c_verify) {
    req["seed"] = seed;
    req["trials"] = trials;
    return emit("verify", req, compact);
  }
  return fail_early("no subcommand selected");
}
