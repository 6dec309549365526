#pragma once

#include <string>
#include <vector>

#include "flagvar/roots.hpp"
#include "flagvar/weyl.hpp"

namespace flagvar {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  std::string type;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::vector<CartanType> types;
  EnumerationPolicy policy;
};

/// A1-A4, B2-B4, C3, C4, D4, G2.
std::vector<CartanType> default_verify_types();

/// Names of the invariants run per type, in report order.
std::vector<std::string> verify_check_names();

/// Runs every invariant on every type. Independent checks may run
/// concurrently; the result order is always (type, check) as listed.
/// Enumeration caps turn a check into `skipped`, never `fail`.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace flagvar
