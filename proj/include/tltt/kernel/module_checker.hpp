#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tltt/kernel/kernel.hpp"
#include "tltt/syntax/parser.hpp"
#include "tltt/syntax/resolve.hpp"

namespace tltt {

enum class DeclStatus {
  Passed,    // def/axiom/check accepted
  Rejected,  // fail rejected as expected
  Error,     // anything else
};

inline const char* to_string(DeclStatus s) {
  switch (s) {
    case DeclStatus::Passed: return "passed";
    case DeclStatus::Rejected: return "rejected";
    case DeclStatus::Error: return "error";
  }
  return "?";
}

struct DeclResult {
  surface::DeclKind kind;
  std::string name;
  Pos pos;
  DeclStatus status = DeclStatus::Passed;
  /// Rule that rejected a `fail` declaration, or the rule of an error.
  std::string rule;
  std::optional<std::string> expected_rule;
  std::string message;
  /// Rules fired while checking an accepted declaration.
  std::set<std::string> rules_used;
};

struct ModuleReport {
  std::string file;
  std::vector<DeclResult> decls;
  /// Set when the file could not be read or parsed.
  std::optional<std::string> fatal;
  /// Axioms declared in this file that nothing else in it depends on.
  std::vector<std::string> unused_axioms;
  Environment env;

  bool ok() const {
    if (fatal) return false;
    for (const auto& d : decls)
      if (d.status == DeclStatus::Error) return false;
    return true;
  }

  std::vector<std::string> diagnostics() const {
    std::vector<std::string> out;
    if (fatal) out.push_back(*fatal);
    for (const auto& d : decls)
      if (d.status == DeclStatus::Error)
        out.push_back(file + ":" + to_string(d.pos) + ": [" + d.rule + "] " + d.message);
    return out;
  }
};

struct CheckOptions {
  KernelOptions kernel;
  /// Every `fail` must carry a `--! expect:` annotation.
  bool require_expectations = false;
};

/// Checks declarations in order, extending the environment as it goes. The
/// first failing declaration stops the module.
class ModuleChecker {
 public:
  explicit ModuleChecker(Environment env, CheckOptions opts = {})
      : env_(std::move(env)), opts_(opts) {}

  const Environment& env() const { return env_; }

  ModuleReport check_source(const std::string& file, std::string_view source) {
    ModuleReport report;
    report.file = file;
    surface::Module m;
    try {
      m = syntax::parse(source);
    } catch (const Error& e) {
      report.fatal = format_diagnostic(file, e);
      report.env = env_;
      return report;
    }
    return check_module(file, m);
  }

  ModuleReport check_module(const std::string& file, const surface::Module& m) {
    ModuleReport report;
    report.file = file;
    Resolver resolver(env_.names());
    std::vector<std::string> axioms;
    std::set<std::string> roots;

    for (const auto& d : m.decls) {
      DeclResult r = check_decl(file, d, resolver, roots);
      if (r.status != DeclStatus::Error && d.kind == surface::DeclKind::Axiom)
        axioms.push_back(d.name);
      bool stop = r.status == DeclStatus::Error;
      report.decls.push_back(std::move(r));
      if (stop) break;
    }

    std::set<std::string> deps = env_.dependencies(roots);
    for (const auto& a : axioms)
      if (!deps.count(a)) report.unused_axioms.push_back(a);
    report.env = env_;
    return report;
  }

 private:
  DeclResult check_decl(const std::string& file, const surface::Decl& d, Resolver& resolver,
                        std::set<std::string>& roots) {
    DeclResult r;
    r.kind = d.kind;
    r.name = d.name;
    r.pos = d.pos;
    r.expected_rule = d.expect;
    Kernel kernel(env_, opts_.kernel);
    kernel.set_fallback_pos(d.pos);

    if (d.kind == surface::DeclKind::Fail) {
      if (opts_.require_expectations && !d.expect) {
        r.status = DeclStatus::Error;
        r.rule = "EXPECT";
        r.message = "fail declaration has no '--! expect: RULE' annotation";
        return r;
      }
      try {
        CoreDecl cd = resolver.decl(d);
        kernel.infer_sort({}, cd.type);
        kernel.check({}, cd.value, cd.type);
      } catch (const Error& e) {
        r.rule = e.rule();
        r.message = e.what();
        if (d.expect && *d.expect != e.rule()) {
          r.status = DeclStatus::Error;
          r.message = "expected rejection by [" + *d.expect + "] but [" + e.rule() +
                      "] fired: " + e.what();
          r.pos = e.pos();
          r.rule = "EXPECT";
        } else {
          r.status = DeclStatus::Rejected;
        }
        return r;
      }
      r.status = DeclStatus::Error;
      r.rule = "FAIL";
      r.message = "declaration was expected to be rejected but type-checks";
      return r;
    }

    try {
      if (!d.name.empty() && (env_.contains(d.name) || builtin_by_name(d.name)))
        throw TypeError("DUP", "'" + d.name + "' is already defined", d.pos);
      CoreDecl cd = resolver.decl(d);
      TermPtr type = cd.type;
      if (type) kernel.infer_sort({}, type);
      if (cd.value) {
        if (type)
          kernel.check({}, cd.value, type);
        else
          type = kernel.infer({}, cd.value);
      }
      if (d.kind != surface::DeclKind::Axiom) {
        if (cd.type) collect_globals(cd.type, roots);
        collect_globals(cd.value, roots);
      }
      if (!d.name.empty()) {
        env_ = env_.extend({d.name, type, cd.value, d.pos, file});
        resolver.add_global(d.name);
      }
      r.rules_used = kernel.rules_used();
    } catch (const Error& e) {
      r.status = DeclStatus::Error;
      r.rule = e.rule();
      r.message = e.what();
      r.pos = e.pos();
    }
    return r;
  }

  Environment env_;
  CheckOptions opts_;
};

}  // namespace tltt
