#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace torusrips {

enum class ErrorKind {
  validation,
  budget,
  unsupported_regime,
  mismatch,
  io,
  internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

inline void require(bool condition, const std::string& message) {
  if (!condition) fail(ErrorKind::validation, message);
}

/// Resource limits shared by the enumeration and reduction passes.
///
/// Exceeding any of them raises an `Error` of kind `budget`; nothing is ever
/// silently truncated.
struct Limits {
  std::uint64_t simplex_budget = 50'000'000;
  // Columns per boundary matrix handed to the Smith normal form.
  std::uint64_t snf_column_budget = 500'000;
  // Side of the dense block left after unit-pivot elimination.
  std::uint64_t snf_dense_budget = 4'000;
  std::uint32_t brute_force_vertex_budget = 2'000;
  std::uint32_t exhaustive_vertex_budget = 100;
  unsigned threads = 1;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  void set_time_budget(std::chrono::milliseconds budget) {
    deadline = std::chrono::steady_clock::now() + budget;
  }

  void check_deadline() const {
    if (deadline && std::chrono::steady_clock::now() > *deadline)
      fail(ErrorKind::budget, "time budget exhausted");
  }
};

}  // namespace torusrips
