#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace drba {

// One verification outcome.  Everything is pre-rendered text so that reports
// are stable across runs: for a fixed seed the emitted bytes differ only in
// elapsed_ms.
struct ReportEntry {
  std::string case_id;
  std::string constraint;  // rendered ω, empty when the entry was not instantiated
  std::string weight;      // rendered λ
  std::string computed;    // what the probe produced
  std::string expected;    // what the closed form / prediction says
  bool match = false;
  std::uint64_t seed = 0;  // 0 for deterministic (seedless) probes
  std::int64_t elapsed_ms = 0;
  std::string note;  // serialized only when nonempty
};

enum class ReportFormat { Text, Json };

// Stable sort by case id; lexicographic order is the display order.
void sort_report(std::vector<ReportEntry>& entries);

// Render the whole report.  Text is an aligned table with a summary line;
// JSON is an array of objects with the fixed key order
// {case, constraint, weight, computed, expected, match, seed, elapsed_ms}
// plus "note" when nonempty.
std::string emit_report(const std::vector<ReportEntry>& entries, ReportFormat format);

// 0 when every entry matches, 1 otherwise.
int report_exit_code(const std::vector<ReportEntry>& entries);

}  // namespace drba
