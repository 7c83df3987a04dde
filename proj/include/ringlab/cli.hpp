#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ringlab::cli {

/// Exit codes: 0 ok, 2 parse error, 3 build error, 4 reference-table or law
/// failure.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 2;
inline constexpr int kBuildError = 3;
inline constexpr int kCheckFailed = 4;

struct CliConfig {
  uint64_t order_cap = 65536;            // >= 1
  bool json = false;
  std::optional<std::string> cache_path; // survey JSONL cache
  int jobs = 1;                          // >= 1
};

int cmd_classify(const std::string& expr_text, const CliConfig& cfg,
                 std::ostream& out, std::ostream& err);

int cmd_element(const std::string& expr_text, uint64_t element,
                const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Classifies the four reference rings for CUNC/NCUC/CSNC/NCSUC/NCC, prints
/// the grid, and fails (exit 4) if any cell differs from the pinned
/// reference values.
int cmd_table1(const CliConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_laws(const std::string& expr_text, const CliConfig& cfg,
             std::ostream& out, std::ostream& err);

/// Enumerates constructor expressions with result order <= max_order,
/// classifies uncached ones in parallel, appends fresh records to the JSONL
/// cache (single writer), and prints every record in enumeration order.
int cmd_survey(uint64_t max_order, const CliConfig& cfg, std::ostream& out,
               std::ostream& err);

/// Deterministic survey enumeration (canonical keys, deduplicated).
std::vector<std::string> survey_expressions(uint64_t max_order);

}  // namespace ringlab::cli
