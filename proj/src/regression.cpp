#include "ejmt/regression.hpp"

#include <chrono>
#include <ctime>
#include <exception>
#include <map>
#include <set>

#include "json.hpp"

#include "text_util.hpp"

namespace ejmt {

using nlohmann::ordered_json;

std::vector<CorpusCase> load_corpus(std::string_view tsv) {
  std::vector<CorpusCase> cases;
  std::set<std::string, std::less<>> ids;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos < tsv.size()) {
    auto end = tsv.find('\n', pos);
    if (end == std::string_view::npos) end = tsv.size();
    auto line = tsv.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (detail::trim(line).empty() || line.front() == '#') continue;
    std::vector<std::string_view> cols;
    std::size_t start = 0;
    while (true) {
      auto tab = line.find('\t', start);
      cols.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (cols.size() != 3) {
      throw ResourceError("corpus", number, "expected 3 tab-separated fields, got " + std::to_string(cols.size()));
    }
    CorpusCase c{std::string(detail::trim(cols[0])), std::string(cols[1]), std::string(cols[2])};
    if (c.id.empty()) throw ResourceError("corpus", number, "empty case id");
    if (!ids.insert(c.id).second) throw ResourceError("corpus", number, "duplicate case id " + c.id);
    cases.push_back(std::move(c));
  }
  return cases;
}

namespace {

CaseRecord evaluate(const CorpusCase& c, const std::shared_ptr<const ResourceBundle>& bundle) {
  CaseRecord r;
  r.id = c.id;
  r.expected = c.expected;
  auto results = translate(c.english, bundle, {}, {}, Execution::serial);
  SentenceStatus status = results.empty() ? SentenceStatus::no_parse : SentenceStatus::ok;
  BigCount count = results.empty() ? BigCount(0) : BigCount(1);
  double total = 0;
  for (const auto& s : results) {
    if (status == SentenceStatus::ok) status = s.status;
    r.got += s.japanese;
    count *= s.parse_count;
    if (s.best) total += s.best->breakdown.total;
  }
  r.status = std::string(status_name(status));
  if (status == SentenceStatus::ok) r.total = total;
  r.parse_count = count.str();
  r.pass = status == SentenceStatus::ok && r.got == r.expected;
  return r;
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

RunReport run_suite(const std::vector<CorpusCase>& corpus, const std::shared_ptr<const ResourceBundle>& bundle,
                    Execution execution) {
  RunReport report;
  report.records.resize(corpus.size());
  std::vector<std::exception_ptr> errors(corpus.size());
  const auto n = static_cast<long>(corpus.size());
  auto one = [&](long i) {
    try {
      report.records[i] = evaluate(corpus[i], bundle);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) one(i);
  } else {
    for (long i = 0; i < n; ++i) one(i);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (const auto& r : report.records) {
    if (r.pass) {
      ++report.summary.pass;
    } else if (r.status == "ok") {
      ++report.summary.fail;
    } else {
      ++report.summary.error;
    }
  }
  report.fingerprint = bundle->fingerprint();
  report.timestamp = utc_now();
  return report;
}

std::string format_report(const RunReport& report) {
  std::string out;
  for (const auto& r : report.records) {
    ordered_json j;
    j["id"] = r.id;
    j["status"] = r.status;
    j["got"] = r.got;
    j["expected"] = r.expected;
    j["pass"] = r.pass;
    j["total"] = r.total ? ordered_json(*r.total) : ordered_json(nullptr);
    j["parse_count"] = r.parse_count;
    out += j.dump() + "\n";
  }
  ordered_json s;
  s["summary"] = {{"pass", report.summary.pass}, {"fail", report.summary.fail}, {"error", report.summary.error}};
  s["fingerprint"] = report.fingerprint;
  s["timestamp"] = report.timestamp;
  out += s.dump() + "\n";
  return out;
}

RunReport parse_report(std::string_view jsonl) {
  RunReport report;
  bool saw_summary = false;
  std::size_t pos = 0;
  try {
    while (pos < jsonl.size()) {
      auto end = jsonl.find('\n', pos);
      if (end == std::string_view::npos) end = jsonl.size();
      auto line = detail::trim(jsonl.substr(pos, end - pos));
      pos = end + 1;
      if (line.empty()) continue;
      if (saw_summary) throw std::invalid_argument("report has lines after the summary");
      auto j = ordered_json::parse(line);
      if (j.contains("summary")) {
        const auto& s = j.at("summary");
        report.summary = {s.at("pass").get<std::size_t>(), s.at("fail").get<std::size_t>(),
                          s.at("error").get<std::size_t>()};
        report.fingerprint = j.at("fingerprint").get<std::string>();
        report.timestamp = j.at("timestamp").get<std::string>();
        saw_summary = true;
        continue;
      }
      CaseRecord r;
      r.id = j.at("id").get<std::string>();
      r.status = j.at("status").get<std::string>();
      r.got = j.at("got").get<std::string>();
      r.expected = j.at("expected").get<std::string>();
      r.pass = j.at("pass").get<bool>();
      if (!j.at("total").is_null()) r.total = j.at("total").get<double>();
      r.parse_count = j.at("parse_count").get<std::string>();
      report.records.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
  if (!saw_summary) throw std::invalid_argument("malformed report: missing summary line");
  return report;
}

RunDiff diff_runs(const RunReport& baseline, const RunReport& current) {
  RunDiff diff;
  std::map<std::string_view, const CaseRecord*> now;
  for (const auto& r : current.records) now.emplace(r.id, &r);
  std::set<std::string_view> before;
  for (const auto& old : baseline.records) {
    before.insert(old.id);
    auto it = now.find(old.id);
    if (it == now.end()) {
      diff.removed.push_back(old.id);
      continue;
    }
    const auto& cur = *it->second;
    if (old.pass && !cur.pass) {
      diff.regressions.push_back(old.id);
    } else if (!old.pass && cur.pass) {
      diff.progressions.push_back(old.id);
    } else if (!old.pass && !cur.pass && old.got != cur.got) {
      diff.changed_output.push_back(old.id);
    } else {
      ++diff.unchanged;
    }
  }
  for (const auto& r : current.records) {
    if (!before.count(r.id)) diff.added.push_back(r.id);
  }
  return diff;
}

std::string format_diff(const RunDiff& diff) {
  ordered_json j;
  j["regressions"] = diff.regressions;
  j["progressions"] = diff.progressions;
  j["changed_output"] = diff.changed_output;
  j["unchanged"] = diff.unchanged;
  j["added"] = diff.added;
  j["removed"] = diff.removed;
  return j.dump();
}

}  // namespace ejmt
