#pragma once

// Analysis reports and classification tables, with their JSON and text forms.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nilpat/analysis.hpp"

namespace nilpat::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

struct AnalysisReport {
  std::vector<std::string> pattern;
  int order = 0;
  std::string field;
  std::string status;
  std::string certificate_kind;
  Json certificate_data = Json::object();
  std::optional<std::vector<std::vector<std::int64_t>>> realization;
  std::vector<StageTiming> stages;
  std::string version = kVersion;

  friend bool operator==(const AnalysisReport& a, const AnalysisReport& b);
};

/// With `timing` false every stage reports 0 micros, which makes the output
/// byte-for-byte reproducible.
AnalysisReport make_report(const ZnzPattern& a, const Verdict& verdict, bool timing = true);

Json certificate_data_json(const Certificate& certificate);

Json to_json(const AnalysisReport& report);
/// Throws Error(parse_error) when keys are missing or mistyped.
AnalysisReport report_from_json(const Json& j);
std::string to_text(const AnalysisReport& report);

/// Exit code for a verdict status: 0 PN, 1 not PN, 2 unknown.
int exit_code(const std::string& status);

struct ClassificationRow {
  ZnzPattern pattern;
  /// Names of listed reference patterns in this class, e.g. "A_{2,5}".
  std::vector<std::string> labels;
  /// Reference group ("1".."4") or "not PN".
  std::string group;
  /// Index of the class containing the transpose.
  std::size_t transpose_class = 0;
  /// Per prime, in the table's prime order.
  std::vector<Verdict> verdicts;
};

struct ClassificationTable {
  int order = 0;
  std::vector<std::int64_t> primes;
  std::vector<ClassificationRow> rows;
};

struct ClassifyOptions {
  DecideOptions decide;
  /// Worker count across (class, prime) cells; 0 = default_threads().
  unsigned threads = 0;
};

/// Every irreducible class of order n (canonical order) against every prime.
/// Budget overruns become unknown cells.
ClassificationTable classify(int order, const std::vector<std::int64_t>& primes, const ClassifyOptions& options = {});

/// Reference group of a canonical pattern, and whether the group predicts
/// PN at p.
std::string reference_group(const ZnzPattern& canonical);
std::vector<std::string> reference_labels(const ZnzPattern& canonical);
bool group_predicts_pn(const std::string& group, std::int64_t p);

Json to_json(const ClassificationTable& table);
std::string to_text(const ClassificationTable& table);

}  // namespace nilpat::cli
