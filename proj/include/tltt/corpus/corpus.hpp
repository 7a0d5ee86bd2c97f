#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tltt/kernel/module_checker.hpp"

namespace tltt::corpus {

namespace fs = std::filesystem;

/// A typing rule tracked by the coverage table. `restricted` rules must also
/// be seen rejecting at least one declaration.
struct RuleSpec {
  std::string name;
  bool restricted;
};

inline const std::vector<RuleSpec>& tracked_rules() {
  static const std::vector<RuleSpec> rules{
      {"FORM-=s", false},  {"INTRO-=s", false}, {"ELIM-=s", false},  {"UIP", false},
      {"FUNEXT", false},   {"FIB-PRE", true},   {"PI-FIB", true},    {"SIGMA-FIB", true},
      {"INTRO-=", true},   {"ELIM-=", true},    {"FORM-+", true},    {"ELIM-+", true},
      {"ELIM-N", true},    {"ELIM-0", true},    {"FORM-+s", false},  {"ELIM-+s", false},
      {"ELIM-Ns", false},  {"ELIM-0s", false},  {"ELIM-1", false},   {"INTRO-+", false},
      {"INTRO-+s", false}, {"COMP-=", false},   {"COMP-=s", false},  {"COMP-N", false},
      {"COMP-Ns", false},  {"COMP-+", false},   {"COMP-+s", false},  {"COMP-1", false},
      {"CUMUL", true},
  };
  return rules;
}

struct CoverageEntry {
  std::vector<std::string> accepted;  // FILE:LINE sites
  std::vector<std::string> rejected;
};

struct Report {
  std::vector<ModuleReport> files;
  std::map<std::string, CoverageEntry> coverage;

  bool files_ok() const {
    return std::all_of(files.begin(), files.end(), [](const ModuleReport& m) { return m.ok(); });
  }

  /// Tracked rules lacking an accepting site, or a rejecting one when restricted.
  std::vector<std::string> coverage_gaps() const {
    std::vector<std::string> gaps;
    for (const auto& rule : tracked_rules()) {
      auto it = coverage.find(rule.name);
      bool has_pass = it != coverage.end() && !it->second.accepted.empty();
      bool has_reject = it != coverage.end() && !it->second.rejected.empty();
      if (!has_pass) gaps.push_back(rule.name + " (no accepted use)");
      if (rule.restricted && !has_reject) gaps.push_back(rule.name + " (no rejection)");
    }
    return gaps;
  }

  bool ok() const { return files_ok(); }

  std::size_t count(DeclStatus s) const {
    std::size_t n = 0;
    for (const auto& f : files)
      for (const auto& d : f.decls)
        if (d.status == s) ++n;
    return n;
  }
};

inline std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void record_coverage(const ModuleReport& m, std::map<std::string, CoverageEntry>& cov) {
  for (const auto& d : m.decls) {
    std::string site = m.file + ":" + std::to_string(d.pos.line);
    if (d.status == DeclStatus::Passed)
      for (const auto& r : d.rules_used) cov[r].accepted.push_back(site);
    else if (d.status == DeclStatus::Rejected)
      cov[d.rule].rejected.push_back(site);
  }
}

inline ModuleReport check_file(const fs::path& path, const Environment& env,
                               const CheckOptions& opts) {
  auto text = read_file(path);
  if (!text) {
    ModuleReport r;
    r.file = path.generic_string();
    r.fatal = path.generic_string() + ": cannot read file";
    r.env = env;
    return r;
  }
  ModuleChecker checker(env, opts);
  return checker.check_source(path.generic_string(), *text);
}

/// Checks `chained` in order, each seeing the previous definitions, then each
/// of `independent` separately on top of the chained environment.
inline Report run(const std::vector<fs::path>& chained, const std::vector<fs::path>& independent,
                  CheckOptions opts = {}) {
  Report report;
  Environment env;
  for (const auto& p : chained) {
    ModuleReport m = check_file(p, env, opts);
    env = m.env;
    record_coverage(m, report.coverage);
    report.files.push_back(std::move(m));
  }
  for (const auto& p : independent) {
    ModuleReport m = check_file(p, env, opts);
    record_coverage(m, report.coverage);
    report.files.push_back(std::move(m));
  }
  return report;
}

inline std::vector<fs::path> tltt_files(const fs::path& dir) {
  std::vector<fs::path> out;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".tltt") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

/// Corpus layout: `prelude/*.tltt` chained, `tests/pass` and `tests/fail`
/// files each checked against the full prelude. Every `fail` needs an
/// expected-rule annotation.
inline Report run_directory(const fs::path& root, KernelOptions kernel = {}) {
  CheckOptions opts{kernel, true};
  std::vector<fs::path> tests = tltt_files(root / "tests" / "pass");
  auto fails = tltt_files(root / "tests" / "fail");
  tests.insert(tests.end(), fails.begin(), fails.end());
  return run(tltt_files(root / "prelude"), tests, opts);
}

inline nlohmann::json to_json(const ModuleReport& m) {
  nlohmann::json decls = nlohmann::json::array();
  for (const auto& d : m.decls) {
    nlohmann::json j{{"kind", surface::to_string(d.kind)},
                     {"line", d.pos.line},
                     {"col", d.pos.col},
                     {"status", to_string(d.status)}};
    if (!d.name.empty()) j["name"] = d.name;
    if (!d.rule.empty()) j["rule"] = d.rule;
    if (d.expected_rule) j["expect"] = *d.expected_rule;
    if (d.status == DeclStatus::Error) j["message"] = d.message;
    decls.push_back(std::move(j));
  }
  nlohmann::json out{{"file", m.file},
                     {"ok", m.ok()},
                     {"declarations", std::move(decls)},
                     {"unused_axioms", m.unused_axioms}};
  if (m.fatal) out["fatal"] = *m.fatal;
  return out;
}

inline nlohmann::json to_json(const Report& r) {
  nlohmann::json files = nlohmann::json::array();
  for (const auto& f : r.files) files.push_back(to_json(f));
  nlohmann::json cov = nlohmann::json::object();
  for (const auto& [rule, e] : r.coverage)
    cov[rule] = {{"accepted", e.accepted}, {"rejected", e.rejected}};
  return {{"ok", r.ok()},
          {"passed", r.count(DeclStatus::Passed)},
          {"rejected", r.count(DeclStatus::Rejected)},
          {"errors", r.count(DeclStatus::Error)},
          {"files", std::move(files)},
          {"coverage", std::move(cov)},
          {"coverage_gaps", r.coverage_gaps()}};
}

}  // namespace tltt::corpus
