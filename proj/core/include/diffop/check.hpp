#pragma once

#include <string>
#include <vector>

namespace diffop {

// Outcome of one verifiable identity. Arena Q means the residual must be
// identically zero as a polynomial; arena R means zero after reduction mod
// f. A Q-arena check that only vanishes mod f is a distinct diagnostic
// state (passed = false, q_holds_only_mod_f = true).
struct CheckResult {
  std::string id;
  char arena = 'R';  // 'Q' or 'R'
  bool passed = false;
  bool informational = false;
  bool q_holds_only_mod_f = false;
  std::string residual;  // rendered residual when nonzero
};

inline bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.passed && !c.informational) return false;
  return true;
}

}  // namespace diffop
