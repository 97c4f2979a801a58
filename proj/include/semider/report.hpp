#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace semider {

/// One verified identity / flag / precondition. Witnesses are JSON
/// objects carrying the inputs and both sides, so a failure can be
/// re-evaluated independently of the code that found it.
struct CheckResult {
  std::string name;
  std::string kind = "identity";  // identity | flag | capability
  bool passed = true;
  std::uint64_t cases = 0;
  std::vector<nlohmann::json> witnesses;

  CheckResult() = default;
  explicit CheckResult(std::string check_name, std::string check_kind = "identity")
      : name(std::move(check_name)), kind(std::move(check_kind)) {}
};

struct VerificationReport {
  std::string subject;
  std::string mode = "exhaustive";  // exhaustive | sampled
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
  nlohmann::json to_json() const;
};

}  // namespace semider
