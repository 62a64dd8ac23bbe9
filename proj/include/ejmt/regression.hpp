#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ejmt/resources.hpp"
#include "ejmt/transfer.hpp"

namespace ejmt {

struct CorpusCase {
  std::string id;
  std::string english;
  std::string expected;
};

/// `id<TAB>english<TAB>expected` per line; blank and `#` lines skipped.
/// Throws ResourceError("corpus", line, ...) on malformed lines.
std::vector<CorpusCase> load_corpus(std::string_view tsv);

struct CaseRecord {
  std::string id;
  std::string status;
  std::string got;
  std::string expected;
  bool pass = false;
  std::optional<double> total;
  std::string parse_count;  // decimal
  bool operator==(const CaseRecord&) const = default;
};

struct RunSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;   // status ok, wrong output
  std::size_t error = 0;  // any other status
  bool operator==(const RunSummary&) const = default;
};

struct RunReport {
  std::vector<CaseRecord> records;  // corpus order
  RunSummary summary;
  std::string fingerprint;
  std::string timestamp;
};

RunReport run_suite(const std::vector<CorpusCase>& corpus, const std::shared_ptr<const ResourceBundle>& bundle,
                    Execution execution = Execution::parallel);

/// JSON-lines: one object per case, then a summary object.
std::string format_report(const RunReport& report);
/// Throws std::invalid_argument on anything that is not a report.
RunReport parse_report(std::string_view jsonl);

struct RunDiff {
  std::vector<std::string> regressions;     // pass -> fail
  std::vector<std::string> progressions;    // fail -> pass
  std::vector<std::string> changed_output;  // fail -> fail, different output
  std::size_t unchanged = 0;
  std::vector<std::string> added;    // only in current
  std::vector<std::string> removed;  // only in baseline
  bool operator==(const RunDiff&) const = default;
};

RunDiff diff_runs(const RunReport& baseline, const RunReport& current);
std::string format_diff(const RunDiff& diff);

}  // namespace ejmt
