#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace thetadiv {

enum class Section { Theta, Sing, Pfaff, Ag, Prym };
enum class ReportFormat { Md, Json, Csv };

struct ReportEntry {
  std::string claim_id;   // stable, sortable
  std::string statement;  // the identity or bound being reproduced
  std::string expected;
  std::string computed;
  std::string status;  // PASS | FAIL | SKIPPED
  long long runtime_ms = 0;
};

struct ReportOptions {
  std::set<Section> sections;  // empty set runs nothing
  uint64_t seed = 7;
  double tol = 1e-12;
  /// Timings vary run to run; they are kept out of the formatted documents
  /// unless asked for, so default reports are byte-identical across runs.
  bool timings = false;
};

std::set<Section> all_sections();

/// Runs every certificate in the chosen sections with fixed seeds and returns
/// the entries sorted by claim_id. Certificate failures become FAIL rows, not
/// exceptions.
std::vector<ReportEntry> run_report(const ReportOptions& opt);

std::string format_report(const std::vector<ReportEntry>& entries, ReportFormat fmt,
                          bool timings = false);

bool all_pass(const std::vector<ReportEntry>& entries);

}  // namespace thetadiv
