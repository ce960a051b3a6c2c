#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "strata/springer_data.hpp"

namespace strata {

enum class CheckStatus { Pass, Fail, Skipped };

std::string status_name(CheckStatus s);

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

struct VerificationReport {
  CartanType type = CartanType::torus(0);
  std::vector<CheckResult> checks;
  std::vector<Erratum> errata;

  bool ok() const;
  const CheckResult& check(std::string_view id) const;
  /// One "check_id: status" line per check, each followed by its detail.
  std::string text() const;
  /// verification-report/1 document, newline terminated.
  std::string json() const;
};

/// Check identifiers in execution order.
const std::vector<std::string>& check_ids();

/// Runs every check for t. Checks that need a table report skipped when no
/// table is available.
VerificationReport run_all(const TableStore& store, const CartanType& t);

/// The types covered by "verify all": the exceptional types plus every
/// registered type.
std::vector<CartanType> verification_targets(const TableStore& store);

/// Canonical JSON for what in {"table", "triples", "strata", "report"}.
std::string export_document(const TableStore& store, const CartanType& t, std::string_view what);

}  // namespace strata
