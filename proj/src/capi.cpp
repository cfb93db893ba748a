#include "torusrips/torusrips.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <new>

#include "torusrips/driver.hpp"

struct tr_context {
  torusrips::Limits limits;
  std::string last_error;
};

struct tr_complex {
  torusrips::FlagComplex complex;
};

namespace {

using torusrips::Error;
using torusrips::ErrorKind;

tr_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::validation: return TR_ERR_VALIDATION;
    case ErrorKind::budget: return TR_ERR_BUDGET;
    case ErrorKind::unsupported_regime: return TR_ERR_UNSUPPORTED_REGIME;
    case ErrorKind::mismatch: return TR_MISMATCH;
    case ErrorKind::io: return TR_ERR_IO;
    case ErrorKind::internal: return TR_ERR_INTERNAL;
  }
  return TR_ERR_INTERNAL;
}

void record(tr_context* ctx, const char* kind, const std::string& message) {
  if (!ctx) return;
  ctx->last_error = torusrips::Json{{"error", {{"kind", kind}, {"message", message}}}}.dump();
}

// Runs body, translating exceptions into a status and the context's error.
template <class Body>
tr_status guarded(tr_context* ctx, Body&& body) {
  if (ctx) ctx->last_error.clear();
  try {
    return body();
  } catch (const Error& e) {
    record(ctx, torusrips::to_string(e.kind()), e.what());
    return status_of(e.kind());
  } catch (const torusrips::Json::exception& e) {
    record(ctx, "validation", e.what());
    return TR_ERR_VALIDATION;
  } catch (const std::bad_alloc&) {
    record(ctx, "budget", "out of memory");
    return TR_ERR_BUDGET;
  } catch (const std::exception& e) {
    record(ctx, "internal", e.what());
    return TR_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

torusrips::Limits limits_for(const tr_context* ctx) {
  return ctx ? ctx->limits : torusrips::Limits{};
}

tr_status build(tr_context* ctx, const torusrips::FiniteMetricSpace& space, int k, int max_dim,
                tr_complex** out) {
  torusrips::require(out != nullptr, "output handle pointer is null");
  torusrips::require(k >= 0, "scale k must be nonnegative");
  const auto limits = limits_for(ctx);
  auto graph = torusrips::vr_graph(space, k);
  auto complex = max_dim < 0 ? torusrips::enumerate_all_simplices(graph, limits)
                             : torusrips::enumerate_simplices(graph, max_dim, limits);
  *out = new tr_complex{std::move(complex)};
  return TR_OK;
}

}  // namespace

extern "C" {

const char* tr_version(void) { return TORUSRIPS_VERSION; }

const char* tr_status_name(tr_status status) {
  switch (status) {
    case TR_OK: return "ok";
    case TR_MISMATCH: return "mismatch";
    case TR_ERR_VALIDATION: return "validation";
    case TR_ERR_BUDGET: return "budget";
    case TR_ERR_UNSUPPORTED_REGIME: return "unsupported_regime";
    case TR_ERR_IO: return "io";
    case TR_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

tr_context* tr_context_new(void) { return new (std::nothrow) tr_context{}; }

void tr_context_free(tr_context* ctx) { delete ctx; }

tr_status tr_context_set_simplex_budget(tr_context* ctx, uint64_t budget) {
  return guarded(ctx, [&] {
    torusrips::require(ctx != nullptr, "null context");
    torusrips::require(budget > 0, "simplex budget must be positive");
    ctx->limits.simplex_budget = budget;
    return TR_OK;
  });
}

tr_status tr_context_set_time_budget_ms(tr_context* ctx, int64_t ms) {
  return guarded(ctx, [&] {
    torusrips::require(ctx != nullptr, "null context");
    torusrips::require(ms > 0, "time budget must be positive");
    ctx->limits.set_time_budget(std::chrono::milliseconds(ms));
    return TR_OK;
  });
}

tr_status tr_context_set_threads(tr_context* ctx, unsigned threads) {
  return guarded(ctx, [&] {
    torusrips::require(ctx != nullptr, "null context");
    torusrips::require(threads >= 1 && threads <= 256, "thread count must be in [1, 256]");
    ctx->limits.threads = threads;
    return TR_OK;
  });
}

const char* tr_last_error(const tr_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

tr_status tr_run(tr_context* ctx, const char* command, const char* request_json, char** output) {
  return guarded(ctx, [&] {
    using namespace torusrips;
    require(command != nullptr && request_json != nullptr && output != nullptr,
            "null argument");
    *output = nullptr;
    const Json request = Json::parse(request_json);
    const std::string name = command;
    CommandResult result;
    if (name == "verify-table") {
      require(request.is_object(), "verify-table request must be an object");
      const auto config = config_from_json(request.value("config", Json::object()), false);
      require(request.contains("goldens"), "verify-table request needs a goldens path");
      TableFilter filter;
      if (request.contains("filter")) {
        const auto& f = request.at("filter");
        if (f.contains("n") && !f.at("n").is_null()) filter.n = f.at("n").get<int>();
        if (f.contains("k") && !f.at("k").is_null()) filter.k = f.at("k").get<int>();
        if (f.contains("coefficients") && !f.at("coefficients").is_null())
          filter.coefficients = parse_coefficients(f.at("coefficients").get<std::string>());
        filter.include_heavy = f.value("include_heavy", false);
      }
      result = run_verify_table(load_goldens(request.at("goldens").get<std::string>()), filter,
                                config);
    } else {
      const auto config = config_from_json(request);
      if (name == "betti") {
        result = run_betti(config);
      } else if (name == "facets") {
        result = run_facets(config);
      } else if (name == "certify") {
        result = run_certify(config);
      } else {
        fail(ErrorKind::validation, "unknown command '" + name + "'");
      }
    }
    *output = copy_string(result.output);
    return result.mismatch ? TR_MISMATCH : TR_OK;
  });
}

void tr_string_free(char* s) { std::free(s); }

tr_status tr_complex_new_torus(tr_context* ctx, int n, int k, int max_dim, tr_complex** out) {
  return guarded(ctx, [&] { return build(ctx, torusrips::FiniteMetricSpace::torus(n), k, max_dim, out); });
}

tr_status tr_complex_new_cycle(tr_context* ctx, int n, int k, int max_dim, tr_complex** out) {
  return guarded(ctx, [&] { return build(ctx, torusrips::FiniteMetricSpace::cycle(n), k, max_dim, out); });
}

tr_status tr_complex_new_window(tr_context* ctx, long x_min, long x_max, long y_min, long y_max,
                                int k, int max_dim, tr_complex** out) {
  return guarded(ctx, [&] {
    return build(ctx, torusrips::FiniteMetricSpace::window({x_min, x_max, y_min, y_max}), k,
                 max_dim, out);
  });
}

void tr_complex_free(tr_complex* complex) { delete complex; }

int tr_complex_max_dim(const tr_complex* complex) {
  return complex ? complex->complex.max_dim() : -1;
}

int tr_complex_truncated(const tr_complex* complex) {
  return complex && complex->complex.truncated() ? 1 : 0;
}

uint64_t tr_complex_count(const tr_complex* complex, int dim) {
  return complex ? complex->complex.count(dim) : 0;
}

tr_status tr_complex_betti(tr_context* ctx, const tr_complex* complex,
                           tr_coefficients coefficients, int max_betti_dim, uint64_t* betti) {
  return guarded(ctx, [&] {
    torusrips::require(complex != nullptr && betti != nullptr, "null argument");
    const auto limits = limits_for(ctx);
    const auto profile =
        coefficients == TR_GF2
            ? torusrips::betti_gf2(complex->complex, max_betti_dim, limits)
            : torusrips::homology_integer(complex->complex, max_betti_dim, limits);
    for (int d = 0; d <= max_betti_dim; ++d)
      betti[d] = static_cast<std::size_t>(d) < profile.betti.size() ? profile.betti[d] : 0;
    return TR_OK;
  });
}

}  // extern "C"
