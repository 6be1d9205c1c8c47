#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "peelkit/io.hpp"

namespace peelkit {

struct CheckResult {
  std::string id;
  std::string suite;
  std::string name;
  /// The mathematical statement the check exercises.
  std::string anchor;
  bool passed = false;
  std::string detail;
  /// Failing instance, serialized for replay (null when passed).
  Json replay;
  double seconds = 0;
  double budget_seconds = 0;
};

/// Suites: "kernel", "peeling", "defense", "construction", "bounds", "all".
/// Throws InputError for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed);

/// The numbered end-to-end criteria, one result each, in order.
std::vector<CheckResult> run_acceptance(std::uint64_t seed);

Json check_to_json(const CheckResult& r);

}  // namespace peelkit
