#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootfold/root_system.hpp"

namespace rootfold {

using nlohmann::json;

enum class FaultKind { None, DropRoot, CorruptMark };

// "drop-root", "corrupt-mark"; anything else -> DomainError.
FaultKind parse_fault(const std::string& text);

struct VerifyConfig {
  int max_rank = 12;
  std::vector<std::string> filter;
  int jobs = 1;
  std::uint64_t seed = 1;
  FaultKind fault = FaultKind::None;
};

struct CheckResult {
  std::string type;
  int rank = 0;
  int j = 0;
  std::string invariant;
  bool ok = true;
  // Counterexample payload on failure, summary counts on success.
  json witness;
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<CheckResult> checks;

  std::size_t failures() const;
  bool clean() const { return failures() == 0; }
  json to_json() const;
  std::string to_tsv() const;
};

// One work item per (type, j in J). System-wide invariants are attached to j = 0.
VerifyReport run_verify(const VerifyConfig& config);

}  // namespace rootfold
