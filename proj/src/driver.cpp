#include "torusrips/driver.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace torusrips {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kDefaultRowSeconds = 30 * 60;
constexpr std::size_t kDifferenceSample = 10;

Json wall_time(const RunConfig& config, Clock::time_point start) {
  if (!config.timing) return nullptr;
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Json integer_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

std::string join(const std::vector<std::uint64_t>& values, const char* sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? sep : "") << values[i];
  return out.str();
}

std::string bracketed(const std::vector<std::uint64_t>& values) {
  return "[" + join(values, ",") + "]";
}

Json space_fields(const SpaceSpec& space) {
  Json j;
  j["space"] = to_string(space.kind);
  if (space.kind == SpaceKind::window) {
    j["n"] = nullptr;
    const auto& w = space.window;
    j["window"] = {w.x_min, w.x_max, w.y_min, w.y_max};
  } else {
    // n stays 0 when the command takes its spaces elsewhere.
    j["n"] = space.n > 0 ? Json(space.n) : Json(nullptr);
    j["window"] = nullptr;
  }
  return j;
}

Json envelope(const char* command, const RunConfig& config) {
  Json j = space_fields(config.space);
  j["command"] = command;
  j["version"] = TORUSRIPS_VERSION;
  j["config"] = to_json(config);
  j["k"] = config.k;
  return j;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_n(const SpaceSpec& space) {
  return space.kind == SpaceKind::window ? "" : std::to_string(space.n);
}

std::string space_label(const SpaceSpec& space) { return space.build().label(); }

template <class Enum>
Enum parse_enum(const std::string& text, std::initializer_list<std::pair<const char*, Enum>> table,
                const char* what) {
  for (const auto& [name, value] : table)
    if (text == name) return value;
  fail(ErrorKind::validation, std::string("unknown ") + what + " '" + text + "'");
}

struct Computation {
  FlagComplex complex;
  BettiProfile profile;
};

// Enumerates one dimension past max_dim, or the whole complex when unset.
Computation compute(const SpaceSpec& spec, int k, Coefficients coefficients,
                    std::optional<int> max_dim, const Limits& limits) {
  const auto space = spec.build();
  auto graph = vr_graph(space, k);
  auto complex = max_dim ? enumerate_simplices(graph, *max_dim + 1, limits)
                         : enumerate_all_simplices(graph, limits);
  const int dim = max_dim ? *max_dim : complex.max_dim();
  auto profile = coefficients == Coefficients::gf2 ? betti_gf2(complex, dim, limits)
                                                   : homology_integer(complex, dim, limits);
  return {std::move(complex), std::move(profile)};
}

}  // namespace

FiniteMetricSpace SpaceSpec::build() const {
  switch (kind) {
    case SpaceKind::cycle: return FiniteMetricSpace::cycle(n);
    case SpaceKind::torus: return FiniteMetricSpace::torus(n);
    case SpaceKind::window: return FiniteMetricSpace::window(window);
  }
  fail(ErrorKind::internal, "unknown space kind");
}

const char* to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::text: return "text";
  }
  return "?";
}

const char* to_string(FacetMode mode) {
  switch (mode) {
    case FacetMode::closed_form: return "closed-form";
    case FacetMode::brute: return "brute";
    case FacetMode::compare: return "compare";
  }
  return "?";
}

OutputFormat parse_format(const std::string& text) {
  return parse_enum<OutputFormat>(
      text, {{"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"text", OutputFormat::text}},
      "output format");
}

FacetMode parse_facet_mode(const std::string& text) {
  return parse_enum<FacetMode>(text,
                               {{"closed-form", FacetMode::closed_form},
                                {"brute", FacetMode::brute},
                                {"compare", FacetMode::compare}},
                               "facet mode");
}

SpaceKind parse_space_kind(const std::string& text) {
  return parse_enum<SpaceKind>(
      text, {{"torus", SpaceKind::torus}, {"cycle", SpaceKind::cycle}, {"window", SpaceKind::window}},
      "space");
}

Limits RunConfig::limits() const {
  Limits limits;
  limits.simplex_budget = simplex_budget;
  limits.threads = threads;
  if (time_budget_secs)
    limits.set_time_budget(std::chrono::milliseconds(
        static_cast<std::int64_t>(*time_budget_secs * 1000.0)));
  return limits;
}

void RunConfig::validate(bool needs_space) const {
  require(k >= 0, "scale k must be nonnegative");
  require(!max_dim || *max_dim >= 0, "max_dim must be nonnegative");
  require(simplex_budget > 0, "simplex budget must be positive");
  require(!time_budget_secs || *time_budget_secs > 0, "time budget must be positive");
  require(threads >= 1 && threads <= 256, "thread count must be in [1, 256]");
  if (needs_space && space.kind != SpaceKind::window)
    require(space.n >= 3, "n must be at least 3");
}

Json to_json(const RunConfig& c) {
  Json j = space_fields(c.space);
  j["k"] = c.k;
  j["coefficients"] = to_string(c.coefficients);
  j["max_dim"] = c.max_dim ? Json(*c.max_dim) : Json(nullptr);
  j["simplex_budget"] = c.simplex_budget;
  j["time_budget_secs"] = c.time_budget_secs ? Json(*c.time_budget_secs) : Json(nullptr);
  j["format"] = to_string(c.format);
  j["threads"] = c.threads;
  j["timing"] = c.timing;
  j["mode"] = to_string(c.facet_mode);
  return j;
}

RunConfig config_from_json(const Json& j, bool needs_space) {
  require(j.is_object(), "config must be a JSON object");
  static const std::vector<std::string> known{
      "space", "n", "window", "k", "coefficients", "max_dim", "simplex_budget",
      "time_budget_secs", "format", "threads", "timing", "mode"};
  for (const auto& [key, value] : j.items())
    require(std::find(known.begin(), known.end(), key) != known.end(),
            "unknown config key '" + key + "'");
  RunConfig c;
  try {
    if (j.contains("space")) c.space.kind = parse_space_kind(j.at("space").get<std::string>());
    if (j.contains("n") && !j.at("n").is_null()) c.space.n = j.at("n").get<int>();
    if (j.contains("window") && !j.at("window").is_null()) {
      const auto w = j.at("window").get<std::vector<long>>();
      require(w.size() == 4, "window needs [x_min, x_max, y_min, y_max]");
      c.space.window = {w[0], w[1], w[2], w[3]};
    }
    if (needs_space && c.space.kind == SpaceKind::window)
      require(j.contains("window") && !j.at("window").is_null(), "window space needs bounds");
    if (j.contains("k")) c.k = j.at("k").get<int>();
    if (j.contains("coefficients"))
      c.coefficients = parse_coefficients(j.at("coefficients").get<std::string>());
    if (j.contains("max_dim") && !j.at("max_dim").is_null()) c.max_dim = j.at("max_dim").get<int>();
    if (j.contains("simplex_budget")) c.simplex_budget = j.at("simplex_budget").get<std::uint64_t>();
    if (j.contains("time_budget_secs") && !j.at("time_budget_secs").is_null())
      c.time_budget_secs = j.at("time_budget_secs").get<double>();
    if (j.contains("format")) c.format = parse_format(j.at("format").get<std::string>());
    if (j.contains("threads")) c.threads = j.at("threads").get<unsigned>();
    if (j.contains("timing")) c.timing = j.at("timing").get<bool>();
    if (j.contains("mode")) c.facet_mode = parse_facet_mode(j.at("mode").get<std::string>());
  } catch (const Json::exception& e) {
    fail(ErrorKind::validation, std::string("bad config value: ") + e.what());
  }
  c.validate(needs_space);
  return c;
}

Json to_json(const BettiProfile& p) {
  Json torsion = Json::array();
  for (const auto& factors : p.torsion) {
    Json row = Json::array();
    for (const auto& f : factors) row.push_back(integer_json(f));
    torsion.push_back(row);
  }
  Json j;
  j["coefficients"] = to_string(p.coefficients);
  j["betti"] = p.betti;
  j["torsion"] = torsion;
  j["euler"] = p.euler ? Json(*p.euler) : Json(nullptr);
  j["truncated_at"] = p.truncated_at ? Json(*p.truncated_at) : Json(nullptr);
  return j;
}

Json to_json(const AntipodeReport& r) {
  Json pairs = Json::array();
  for (auto [a, b] : r.pairs) pairs.push_back({a, b});
  return {{"is_antipode", r.is_antipode},
          {"pairs", pairs},
          {"cross_polytope_dim",
           r.cross_polytope_dim ? Json(*r.cross_polytope_dim) : Json(nullptr)}};
}

Json to_json(const ConnectivityCertificate& c) {
  return {{"scale", c.scale},
          {"method", to_string(c.method)},
          {"certified_k", c.certified_k},
          {"point_count", c.point_count},
          {"min_ball_size", c.min_ball_size}};
}

namespace {

const char* claim_kind_name(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::torus: return "torus";
    case ClaimKind::wedge_S2: return "wedge_S2";
    case ClaimKind::wedge_S2_S3: return "wedge_S2_S3";
    case ClaimKind::sphere: return "sphere";
    case ClaimKind::wedge_Sd: return "wedge_Sd";
    case ClaimKind::contractible: return "contractible";
    case ClaimKind::unknown: return "unknown";
  }
  return "?";
}

}  // namespace

Json to_json(const Fingerprint& f) {
  Json claim{{"kind", claim_kind_name(f.claim.kind)},
             {"label", f.claim.label()},
             {"dim", f.claim.dim},
             {"counts", f.claim.counts},
             {"betti", f.claim.betti()}};
  return {{"claim", claim},
          {"verdict", to_string(f.verdict)},
          {"consistent", f.consistent()},
          {"basis", f.basis},
          {"certificate", f.certificate.empty() ? Json(nullptr) : Json(f.certificate)},
          {"notes", f.notes},
          {"evidence", f.evidence ? to_json(*f.evidence) : Json(nullptr)}};
}

CommandResult run_betti(const RunConfig& config) {
  config.validate();
  const auto start = Clock::now();
  const auto run = compute(config.space, config.k, config.coefficients, config.max_dim,
                           config.limits());
  const auto& p = run.profile;
  Json j = envelope("betti", config);
  j.update(to_json(p));
  j["max_dim"] = static_cast<int>(p.betti.size()) - 1;
  j["simplex_counts"] = run.complex.counts();
  j["wall_time_ms"] = wall_time(config, start);

  CommandResult out{j, {}, false};
  switch (config.format) {
    case OutputFormat::json: out.output = render_json(j); break;
    case OutputFormat::csv: {
      std::ostringstream s;
      s << "n,k,dim,betti,coefficients,source\n";
      for (std::size_t d = 0; d < p.betti.size(); ++d)
        s << csv_n(config.space) << ',' << config.k << ',' << d << ',' << p.betti[d] << ','
          << to_string(p.coefficients) << ",computed\n";
      out.output = s.str();
      break;
    }
    case OutputFormat::text: {
      std::ostringstream s;
      s << space_label(config.space) << ", k=" << config.k << ", " << to_string(p.coefficients)
        << "\nbetti: " << join(p.betti, " ") << '\n';
      for (std::size_t d = 0; d < p.torsion.size(); ++d)
        if (!p.torsion[d].empty()) {
          s << "torsion H_" << d << ":";
          for (const auto& f : p.torsion[d]) s << " Z/" << f.get_str();
          s << '\n';
        }
      if (p.euler) s << "euler: " << *p.euler << '\n';
      if (p.truncated_at) s << "truncated above dimension " << *p.truncated_at << '\n';
      out.output = s.str();
      break;
    }
  }
  return out;
}

namespace {

FacetSet closed_form_facets(const SpaceSpec& spec, const FiniteMetricSpace& space, int k) {
  switch (spec.kind) {
    case SpaceKind::torus: return torus_facets(spec.n, k);
    case SpaceKind::cycle: return cycle_facets(spec.n, k);
    case SpaceKind::window: return z2_facets_in_window(space, k);
  }
  fail(ErrorKind::internal, "unknown space kind");
}

Json simplices_json(const std::vector<Simplex>& list, std::size_t limit) {
  Json out = Json::array();
  for (std::size_t i = 0; i < list.size() && i < limit; ++i)
    out.push_back(std::vector<Vertex>(list[i].vertices().begin(), list[i].vertices().end()));
  return out;
}

std::string dim_tag(const FacetSet& set) {
  if (set.facets.empty()) return "*";
  const int d = set.facets.front().dimension();
  for (const auto& f : set.facets)
    if (f.dimension() != d) return "*";
  return std::to_string(d);
}

std::string vertex_string(const Simplex& s) {
  std::ostringstream out;
  out << s;
  return out.str();
}

}  // namespace

CommandResult run_facets(const RunConfig& config) {
  config.validate();
  require(config.k >= 1, "facet catalogs need k >= 1");
  const auto start = Clock::now();
  const auto limits = config.limits();
  const auto space = config.space.build();
  const auto graph = vr_graph(space, config.k);

  Json j = envelope("facets", config);
  j["mode"] = to_string(config.facet_mode);
  CommandResult out;

  if (config.facet_mode == FacetMode::compare) {
    const auto closed = closed_form_facets(config.space, space, config.k);
    auto brute = brute_force_facets(graph, limits);
    if (config.space.kind == SpaceKind::window)
      brute = interior_only(brute, space, interior_margin(config.k));
    const auto diff = difference(closed, brute);
    j["identical"] = diff.empty();
    j["closed_form_source"] = to_string(closed.source);
    j["closed_form_count"] = closed.size();
    j["brute_force_count"] = brute.size();
    j["only_closed_form_count"] = diff.only_left.size();
    j["only_brute_force_count"] = diff.only_right.size();
    j["only_closed_form"] = simplices_json(diff.only_left, kDifferenceSample);
    j["only_brute_force"] = simplices_json(diff.only_right, kDifferenceSample);
    j["wall_time_ms"] = wall_time(config, start);
    out.mismatch = !diff.empty();

    std::ostringstream s;
    switch (config.format) {
      case OutputFormat::json: s << render_json(j); break;
      case OutputFormat::csv:
        s << "side,dim,vertices\n";
        for (const auto& f : diff.only_left) s << "closed-form," << f.dimension() << ',' << f << '\n';
        for (const auto& f : diff.only_right) s << "brute-force," << f.dimension() << ',' << f << '\n';
        break;
      case OutputFormat::text:
        if (diff.empty()) {
          s << "identical, " << closed.size() << " facets (" << to_string(closed.source)
            << " vs brute-force)\n";
        } else {
          s << "different: " << diff.only_left.size() << " only in closed form, "
            << diff.only_right.size() << " only in brute force\n";
          for (std::size_t i = 0; i < diff.only_left.size() && i < kDifferenceSample; ++i)
            s << "- " << diff.only_left[i] << '\n';
          for (std::size_t i = 0; i < diff.only_right.size() && i < kDifferenceSample; ++i)
            s << "+ " << diff.only_right[i] << '\n';
        }
        break;
    }
    out.output = s.str();
    out.result = j;
    return out;
  }

  FacetSet set;
  bool closed_form = false;
  std::string note;
  if (config.facet_mode == FacetMode::closed_form) {
    try {
      set = closed_form_facets(config.space, space, config.k);
      closed_form = true;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::unsupported_regime) throw;
      set = brute_force_facets(graph, limits);
      note = "no closed form; listing comes from the brute-force search";
    }
  } else {
    set = brute_force_facets(graph, limits);
  }
  j["source"] = to_string(set.source);
  j["closed_form"] = closed_form;
  j["note"] = note.empty() ? Json(nullptr) : Json(note);
  j["count"] = set.size();
  j["facets"] = simplices_json(set.facets, set.facets.size());
  j["wall_time_ms"] = wall_time(config, start);

  std::ostringstream s;
  switch (config.format) {
    case OutputFormat::json: s << render_json(j); break;
    case OutputFormat::csv:
      s << "dim,vertices\n";
      for (const auto& f : set.facets) s << f.dimension() << ',' << vertex_string(f) << '\n';
      break;
    case OutputFormat::text: {
      SimplexListHeader header{to_string(config.space.kind), config.space.n, config.k,
                               dim_tag(set), {{"source", to_string(set.source)}}};
      if (config.space.kind == SpaceKind::window) header.extra.emplace_back("label", space.label());
      if (!note.empty()) header.extra.emplace_back("note", note);
      write_simplex_list(s, header, set.facets);
      break;
    }
  }
  out.output = s.str();
  out.result = j;
  return out;
}

namespace {

std::uint64_t cross_polytope_faces(int pairs) {
  std::uint64_t total = 1;
  for (int i = 0; i < pairs; ++i) {
    if (total > (std::uint64_t{1} << 60)) return total;
    total *= 3;
  }
  return total - 1;
}

std::optional<Claim> expected_claim(const RunConfig& config) {
  switch (config.space.kind) {
    case SpaceKind::torus: return torus_regime_claim(config.space.n, config.k);
    case SpaceKind::cycle: return claim_from_profile(expected_cycle_profile(config.space.n, config.k));
    case SpaceKind::window: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

CommandResult run_certify(const RunConfig& config) {
  config.validate();
  const auto start = Clock::now();
  const auto limits = config.limits();
  const auto space = config.space.build();
  const auto graph = vr_graph(space, config.k);
  Json j = envelope("certify", config);
  std::vector<std::string> notes;

  const auto antipode = antipode_check(graph);
  std::optional<BettiProfile> profile;
  std::optional<int> homology_dim;
  if (antipode.is_antipode &&
      cross_polytope_faces(*antipode.cross_polytope_dim) > limits.simplex_budget) {
    notes.push_back("homology skipped: the boundary of the " +
                    std::to_string(*antipode.cross_polytope_dim) +
                    "-dimensional cross-polytope exceeds the simplex budget");
  } else {
    auto run = compute(config.space, config.k, config.coefficients, std::nullopt, limits);
    homology_dim = run.complex.max_dim();
    if (config.max_dim && *config.max_dim < *homology_dim)
      notes.push_back("homology extended from max_dim " + std::to_string(*config.max_dim) +
                      " to the full dimension " + std::to_string(*homology_dim));
    profile = std::move(run.profile);
  }

  std::vector<ConnectivityCertificate> certs;
  certs.push_back(connectivity_bound(space, config.k, 1, ConnectivityMethod::counting, limits));
  if (certs.back().certified_k < 1 && space.size() <= limits.exhaustive_vertex_budget)
    certs.push_back(connectivity_bound(space, config.k, 1, ConnectivityMethod::exhaustive, limits));
  const auto best = *std::max_element(certs.begin(), certs.end(), [](const auto& a, const auto& b) {
    return a.certified_k < b.certified_k;
  });

  auto f = fingerprint_against(profile, antipode, best, expected_claim(config));
  f.notes.insert(f.notes.begin(), notes.begin(), notes.end());

  j["homology_max_dim"] = homology_dim ? Json(*homology_dim) : Json(nullptr);
  j["antipode"] = to_json(antipode);
  Json conn = Json::array();
  for (const auto& c : certs) conn.push_back(to_json(c));
  j["connectivity"] = conn;
  j["fingerprint"] = to_json(f);
  j["wall_time_ms"] = wall_time(config, start);

  CommandResult out{j, {}, f.verdict == Verdict::inconsistent};
  std::ostringstream s;
  switch (config.format) {
    case OutputFormat::json: s << render_json(j); break;
    case OutputFormat::csv:
      s << "n,k,claim,verdict,basis\n"
        << csv_n(config.space) << ',' << config.k << ',' << f.claim.label() << ','
        << to_string(f.verdict) << ',' << f.basis << '\n';
      break;
    case OutputFormat::text:
      s << space_label(config.space) << ", k=" << config.k << '\n';
      s << "antipode: " << (antipode.is_antipode ? "yes" : "no");
      if (antipode.cross_polytope_dim) s << ", cross-polytope dimension " << *antipode.cross_polytope_dim;
      s << '\n';
      for (const auto& c : certs)
        s << "connectivity (" << to_string(c.method) << ", r=" << c.scale
          << "): certified k = " << c.certified_k << '\n';
      if (profile) s << "betti (" << to_string(profile->coefficients) << "): " << join(profile->betti, " ") << '\n';
      s << "claim " << f.claim.label() << ": " << to_string(f.verdict);
      if (!f.certificate.empty()) s << " (" << f.certificate << ")";
      s << '\n';
      for (const auto& n : f.notes) s << "note: " << n << '\n';
      break;
  }
  out.output = s.str();
  return out;
}

std::vector<GoldenRow> parse_goldens(const Json& j) {
  require(j.is_object() && j.contains("rows") && j.at("rows").is_array(),
          "golden file needs a rows array");
  std::vector<GoldenRow> rows;
  try {
    for (const auto& r : j.at("rows")) {
      GoldenRow row;
      row.id = r.at("id").get<std::string>();
      row.space.kind = parse_space_kind(r.value("space", std::string("torus")));
      if (row.space.kind == SpaceKind::window) {
        const auto w = r.at("window").get<std::vector<long>>();
        require(w.size() == 4, "golden window needs four bounds");
        row.space.window = {w[0], w[1], w[2], w[3]};
      } else {
        row.space.n = r.at("n").get<int>();
      }
      row.k = r.at("k").get<int>();
      row.coefficients = parse_coefficients(r.at("coefficients").get<std::string>());
      row.max_dim = r.at("max_dim").get<int>();
      row.betti = r.at("betti").get<std::vector<std::uint64_t>>();
      row.torsion_free = r.value("torsion_free", false);
      row.heavy = r.value("heavy", false);
      row.source = r.at("source").get<std::string>();
      require(row.betti.size() == static_cast<std::size_t>(row.max_dim) + 1,
              "golden row " + row.id + " must list betti for dimensions 0..max_dim");
      rows.push_back(std::move(row));
    }
  } catch (const Json::exception& e) {
    fail(ErrorKind::validation, std::string("malformed golden file: ") + e.what());
  }
  return rows;
}

std::vector<GoldenRow> load_goldens(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::io, "cannot open golden file " + path);
  try {
    return parse_goldens(Json::parse(in));
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::validation, "golden file " + path + " is not valid JSON: " + e.what());
  }
}

CommandResult run_verify_table(const std::vector<GoldenRow>& rows, const TableFilter& filter,
                               const RunConfig& config) {
  const auto start = Clock::now();
  Json report = Json::array();
  std::ostringstream text;
  std::ostringstream csv;
  csv << "n,k,dim,betti,coefficients,source\n";
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;

  for (const auto& row : rows) {
    if (filter.n && (row.space.kind == SpaceKind::window || row.space.n != *filter.n)) continue;
    if (filter.k && row.k != *filter.k) continue;
    if (filter.coefficients && row.coefficients != *filter.coefficients) continue;

    Json entry = space_fields(row.space);
    entry["id"] = row.id;
    entry["k"] = row.k;
    entry["coefficients"] = to_string(row.coefficients);
    entry["max_dim"] = row.max_dim;
    entry["expected"] = row.betti;
    entry["source"] = row.source;
    entry["computed"] = nullptr;
    entry["reason"] = nullptr;
    entry["wall_time_ms"] = nullptr;

    std::string status;
    std::string detail;
    if (row.heavy && !filter.include_heavy) {
      status = "SKIPPED";
      detail = "heavy row, not run by default";
    } else {
      Limits limits = config.limits();
      limits.set_time_budget(std::chrono::milliseconds(static_cast<std::int64_t>(
          config.time_budget_secs.value_or(kDefaultRowSeconds) * 1000.0)));
      const auto row_start = Clock::now();
      try {
        const auto run = compute(row.space, row.k, row.coefficients, row.max_dim, limits);
        const auto& p = run.profile;
        entry["computed"] = p.betti;
        entry["torsion"] = to_json(p)["torsion"];
        const bool betti_ok = p.betti == row.betti;
        const bool torsion_ok = !row.torsion_free || p.torsion_free();
        status = betti_ok && torsion_ok ? "PASS" : "FAIL";
        detail = "expected " + bracketed(row.betti) + " computed " + bracketed(p.betti);
        if (!torsion_ok) detail += ", torsion present";
        for (std::size_t d = 0; d < p.betti.size(); ++d)
          csv << csv_n(row.space) << ',' << row.k << ',' << d << ',' << p.betti[d] << ','
              << to_string(row.coefficients) << ",\"" << row.source << "\"\n";
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::budget) {
          status = "FAIL";
          detail = std::string(to_string(e.kind())) + " error: " + e.what();
        } else {
          status = "SKIPPED";
          detail = std::string("budget: ") + e.what();
        }
      }
      entry["wall_time_ms"] = wall_time(config, row_start);
    }
    entry["status"] = status;
    if (status != "PASS") entry["reason"] = detail;
    (status == "PASS" ? passed : status == "FAIL" ? failed : skipped) += 1;

    text << std::left << std::setw(8) << status << space_label(row.space) << " k=" << row.k << ' '
         << to_string(row.coefficients) << " dims<=" << row.max_dim << ": " << detail;
    if (config.timing && entry["wall_time_ms"].is_number())
      text << " (" << entry["wall_time_ms"].get<std::int64_t>() << " ms)";
    text << "  [" << row.source << "]\n";
    report.push_back(entry);
  }

  const std::size_t total = passed + failed + skipped;
  if (total == 0) text << "0 rows matched the filter\n";
  text << total << " rows: " << passed << " passed, " << failed << " failed, " << skipped
       << " skipped\n";

  Json j;
  j["command"] = "verify-table";
  j["version"] = TORUSRIPS_VERSION;
  j["config"] = to_json(config);
  j["rows"] = report;
  j["summary"] = {{"rows", total}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}};
  j["wall_time_ms"] = wall_time(config, start);

  CommandResult out{j, {}, failed > 0};
  switch (config.format) {
    case OutputFormat::json: out.output = render_json(j); break;
    case OutputFormat::csv: out.output = csv.str(); break;
    case OutputFormat::text: out.output = text.str(); break;
  }
  return out;
}

}  // namespace torusrips
