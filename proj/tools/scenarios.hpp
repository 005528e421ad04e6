#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace esakia::cli {

struct Check {
  std::string name;
  bool pass = false;
  std::string note;
};

struct ScenarioReport {
  std::string name;
  std::vector<Check> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

std::vector<std::string> scenario_names();

// Throws validation_error on an unknown name. Deterministic for a fixed seed.
ScenarioReport run_scenario(const std::string& name, std::uint64_t seed);

}  // namespace esakia::cli
