#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "critdg/oracle.hpp"

namespace critdg {

enum class CellStatus { kMatch, kMismatch, kErrataSuspected };

/// "match", "mismatch", "formula-errata-suspected".
std::string_view status_name(CellStatus s);

/// One grid point of a scenario: what enumeration (or construction) found
/// next to what the closed form or characterization predicts.
struct ReportCell {
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::string oracle;
  std::string formula;
  CellStatus status = CellStatus::kMatch;
  std::string note;
};

struct VerificationReport {
  std::string scenario;
  std::string claim;
  std::size_t max_n = 0;
  std::vector<ReportCell> cells;
  double wall_seconds = 0.0;

  std::size_t count(CellStatus s) const;
  bool has_mismatch() const { return count(CellStatus::kMismatch) > 0; }
};

/// Names accepted by run_scenario, in a fixed order.
const std::vector<std::string>& scenario_names();

/// Runs one named scenario over 2 <= n <= max_n. Mismatches are recorded in
/// the report, never thrown. Throws UnknownScenario, TooLarge (max_n > 5) or
/// OutOfRange (max_n < 2).
VerificationReport run_scenario(std::string_view name, std::size_t max_n, ScanOptions opts = {});

}  // namespace critdg
