#pragma once

#include <stdexcept>
#include <string>

namespace rolescan {

struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BankError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LedgerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScoringError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Provider failures the runner reacts to differently: auth errors abort a run,
// exhausted retries mark one work item failed, budget stops cleanly.
struct GatewayError : std::runtime_error {
  enum class Kind { AuthError, ExhaustedRetries, BudgetExceeded, BadConfig };

  GatewayError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}

  Kind kind;
};

}  // namespace rolescan
