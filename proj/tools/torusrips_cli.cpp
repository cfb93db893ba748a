// Command-line front end; talks to the library only through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "torusrips/torusrips.h"

namespace {

using Json = nlohmann::json;

struct Options {
  std::string space = "torus";
  std::optional<int> n;
  std::optional<std::string> window;
  int k = 0;
  std::optional<std::string> coefficients;
  std::optional<int> max_dim;
  std::optional<std::string> format;
  unsigned threads = 1;
  std::optional<std::uint64_t> simplex_budget;
  std::optional<double> time_budget_secs;
  bool no_timing = false;
  std::string mode = "closed-form";
  std::string goldens = TORUSRIPS_DEFAULT_GOLDENS;
  bool include_heavy = false;
};

int exit_code(tr_status status) {
  switch (status) {
    case TR_OK: return 0;
    case TR_MISMATCH: return 1;
    case TR_ERR_BUDGET: return 3;
    default: return 2;
  }
}

void print_error(const char* kind, const std::string& message) {
  std::cerr << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
}

// Flags win over environment variables, which win over library defaults.
void apply_environment(Options& o) {
  if (!o.simplex_budget)
    if (const char* v = std::getenv("SIMPLEX_BUDGET")) o.simplex_budget = std::stoull(v);
  if (!o.time_budget_secs)
    if (const char* v = std::getenv("TIME_BUDGET_SECS")) o.time_budget_secs = std::stod(v);
}

Json config_json(const Options& o, const char* default_format) {
  Json c;
  c["space"] = o.space;
  if (o.n) c["n"] = *o.n;
  if (o.window) {
    std::vector<long> bounds;
    std::string rest = *o.window;
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const auto comma = rest.find(',', pos);
      bounds.push_back(std::stol(rest.substr(pos, comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    c["window"] = bounds;
  }
  c["k"] = o.k;
  if (o.coefficients) c["coefficients"] = *o.coefficients;
  if (o.max_dim) c["max_dim"] = *o.max_dim;
  c["format"] = o.format.value_or(default_format);
  c["threads"] = o.threads;
  if (o.simplex_budget) c["simplex_budget"] = *o.simplex_budget;
  if (o.time_budget_secs) c["time_budget_secs"] = *o.time_budget_secs;
  c["timing"] = !o.no_timing;
  c["mode"] = o.mode;
  return c;
}

int run(const char* command, const Json& request) {
  tr_context* ctx = tr_context_new();
  if (!ctx) {
    print_error("internal", "cannot allocate a context");
    return 2;
  }
  char* output = nullptr;
  const tr_status status = tr_run(ctx, command, request.dump().c_str(), &output);
  if (output) {
    std::cout << output;
    tr_string_free(output);
  }
  if (status != TR_OK && status != TR_MISMATCH) std::cerr << tr_last_error(ctx) << '\n';
  tr_context_free(ctx);
  return exit_code(status);
}

void add_space_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--space", o.space, "torus, cycle or window")
      ->check(CLI::IsMember({"torus", "cycle", "window"}));
  cmd->add_option("--n", o.n, "cycle or torus size");
  cmd->add_option("--window", o.window, "window bounds x_min,x_max,y_min,y_max");
  cmd->add_option("--k", o.k, "scale")->required();
}

void add_run_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--threads", o.threads, "worker threads");
  cmd->add_option("--simplex-budget", o.simplex_budget, "maximum number of simplices");
  cmd->add_option("--time-budget-secs", o.time_budget_secs, "wall-clock budget");
  cmd->add_flag("--no-timing", o.no_timing, "write wall_time_ms as null");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vietoris-Rips complexes of torus grids, cycles and Z^2 windows"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tr_version()));
  Options o;

  auto* betti = app.add_subcommand("betti", "Betti numbers of VR(space, k)");
  add_space_options(betti, o);
  add_run_options(betti, o);
  betti->add_option("--coefficients", o.coefficients, "gf2 or integer");
  betti->add_option("--max-dim", o.max_dim, "highest homology dimension (default: all)");

  auto* facets = app.add_subcommand("facets", "closed-form facets, brute force, or both compared");
  add_space_options(facets, o);
  add_run_options(facets, o);
  facets->add_option("--mode", o.mode, "closed-form, brute or compare")
      ->check(CLI::IsMember({"closed-form", "brute", "compare"}));

  auto* certify = app.add_subcommand("certify", "antipode, connectivity and homotopy-type checks");
  add_space_options(certify, o);
  add_run_options(certify, o);
  certify->add_option("--coefficients", o.coefficients, "gf2 or integer");
  certify->add_option("--max-dim", o.max_dim, "requested homology dimension");

  auto* verify = app.add_subcommand("verify-table", "recompute the golden Betti table");
  add_run_options(verify, o);
  verify->add_option("--goldens", o.goldens, "golden table file");
  verify->add_option("--n", o.n, "only rows with this n");
  verify->add_option("--k", o.k, "only rows with this k");
  verify->add_option("--coefficients", o.coefficients, "only rows with these coefficients");
  verify->add_flag("--include-heavy", o.include_heavy, "also run rows marked heavy");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("validation", e.what());
    return 2;
  }

  try {
    apply_environment(o);
    if (betti->parsed()) return run("betti", config_json(o, "json"));
    if (facets->parsed()) return run("facets", config_json(o, "text"));
    if (certify->parsed()) return run("certify", config_json(o, "json"));

    Json config;
    config["format"] = o.format.value_or("text");
    config["threads"] = o.threads;
    config["timing"] = !o.no_timing;
    if (o.simplex_budget) config["simplex_budget"] = *o.simplex_budget;
    if (o.time_budget_secs) config["time_budget_secs"] = *o.time_budget_secs;
    Json filter{{"include_heavy", o.include_heavy}};
    if (o.n) filter["n"] = *o.n;
    if (verify->count("--k") > 0) filter["k"] = o.k;
    if (o.coefficients) filter["coefficients"] = *o.coefficients;
    return run("verify-table", {{"config", config}, {"goldens", o.goldens}, {"filter", filter}});
  } catch (const std::exception& e) {
    print_error("validation", e.what());
    return 2;
  }
}
