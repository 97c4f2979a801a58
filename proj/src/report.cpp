#include "semider/report.hpp"

namespace semider {

bool VerificationReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json jchecks = nlohmann::json::array();
  for (const auto& c : checks) {
    jchecks.push_back({{"name", c.name},
                       {"kind", c.kind},
                       {"passed", c.passed},
                       {"cases", c.cases},
                       {"witnesses", c.witnesses}});
  }
  return {{"subject", subject},
          {"mode", mode},
          {"seed", seed},
          {"samples", samples},
          {"passed", passed()},
          {"checks", jchecks}};
}

}  // namespace semider
