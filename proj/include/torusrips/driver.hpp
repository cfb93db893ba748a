#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "torusrips/facets.hpp"
#include "torusrips/homology.hpp"
#include "torusrips/metric.hpp"
#include "torusrips/topology.hpp"

namespace torusrips {

using Json = nlohmann::json;

struct SpaceSpec {
  SpaceKind kind = SpaceKind::torus;
  int n = 0;
  Window window;

  FiniteMetricSpace build() const;
};

enum class OutputFormat { json, csv, text };
enum class FacetMode { closed_form, brute, compare };

const char* to_string(OutputFormat format);
const char* to_string(FacetMode mode);
OutputFormat parse_format(const std::string& text);
FacetMode parse_facet_mode(const std::string& text);
SpaceKind parse_space_kind(const std::string& text);

/// Everything a command needs; echoed verbatim into every result.
struct RunConfig {
  SpaceSpec space;
  int k = 0;
  Coefficients coefficients = Coefficients::gf2;
  // Highest homology dimension; unset means the whole complex.
  std::optional<int> max_dim;
  std::uint64_t simplex_budget = Limits{}.simplex_budget;
  std::optional<double> time_budget_secs;
  OutputFormat format = OutputFormat::json;
  unsigned threads = 1;
  // When false, wall_time_ms is written as null so output is reproducible.
  bool timing = true;
  FacetMode facet_mode = FacetMode::compare;

  Limits limits() const;
  // needs_space is false for commands that take their spaces elsewhere.
  void validate(bool needs_space = true) const;
};

Json to_json(const RunConfig& config);
/// Missing keys keep their defaults; unknown keys are rejected.
RunConfig config_from_json(const Json& j, bool needs_space = true);

Json to_json(const BettiProfile& profile);
Json to_json(const AntipodeReport& report);
Json to_json(const ConnectivityCertificate& cert);
Json to_json(const Fingerprint& f);

/// A finished command: structured result, rendered text, and whether the
/// outcome was a mismatch (facet difference, failed row, inconsistency).
struct CommandResult {
  Json result;
  std::string output;
  bool mismatch = false;
};

CommandResult run_betti(const RunConfig& config);
CommandResult run_facets(const RunConfig& config);
CommandResult run_certify(const RunConfig& config);

struct GoldenRow {
  std::string id;
  SpaceSpec space;
  int k = 0;
  Coefficients coefficients = Coefficients::gf2;
  int max_dim = 0;
  std::vector<std::uint64_t> betti;
  bool torsion_free = false;
  // Rows that need more than a desk machine; skipped unless asked for.
  bool heavy = false;
  std::string source;
};

std::vector<GoldenRow> load_goldens(const std::string& path);
std::vector<GoldenRow> parse_goldens(const Json& j);

struct TableFilter {
  std::optional<int> n;
  std::optional<int> k;
  std::optional<Coefficients> coefficients;
  bool include_heavy = false;
};

/// Runs each matching row under the config's budgets (the time budget is
/// per row, 30 minutes unless set). Rows that hit a budget are SKIPPED.
CommandResult run_verify_table(const std::vector<GoldenRow>& rows, const TableFilter& filter,
                               const RunConfig& config);

}  // namespace torusrips
