#pragma once

#include <set>
#include <string>
#include <vector>

#include "tltt/core/term.hpp"
#include "tltt/syntax/lexer.hpp"

namespace tltt {

/// Pretty-prints core terms as parseable surface text.
///
/// Binder names are regenerated when needed so that no name in scope, keyword,
/// built-in or referenced global is shadowed; the output therefore resolves back
/// to an alpha-equal term.
class Printer {
 public:
  explicit Printer(std::vector<std::string> scope = {}) : scope_(std::move(scope)) {}

  std::string print(const TermPtr& t) {
    taken_globals_.clear();
    collect_globals(t, taken_globals_);
    std::string out;
    go(t, 0, out);
    return out;
  }

 private:
  enum Level { kBinder = 0, kArrow = 1, kEq = 2, kSum = 3, kApp = 4, kAtom = 5 };

  bool is_taken(const std::string& n) const {
    if (syntax::is_keyword(n) || builtin_by_name(n) || taken_globals_.count(n)) return true;
    for (const auto& s : scope_)
      if (s == n) return true;
    return false;
  }

  std::string fresh(const std::string& hint) const {
    std::string base = (hint.empty() || hint == "_") ? "x" : hint;
    if (!is_taken(base)) return base;
    for (unsigned i = 1;; ++i) {
      std::string cand = base + std::to_string(i);
      if (!is_taken(cand)) return cand;
    }
  }

  std::string local(unsigned idx) const {
    if (idx >= scope_.size()) return "?" + std::to_string(idx);
    return scope_[scope_.size() - 1 - idx];
  }

  void open(bool paren, std::string& out) const { if (paren) out += '('; }
  void close(bool paren, std::string& out) const { if (paren) out += ')'; }

  void under(const std::string& name, const TermPtr& body, int prec, std::string& out) {
    scope_.push_back(name);
    go(body, prec, out);
    scope_.pop_back();
  }

  void go(const TermPtr& t, int prec, std::string& out) {
    std::visit(
        overloaded{
            [&](const Var& v) { out += local(v.index); },
            [&](const Global& g) { out += g.name; },
            [&](const Universe& u) {
              out += u.sort.is_fib() ? "U " : "Us ";
              out += std::to_string(u.sort.level);
            },
            [&](const Pi& p) {
              if (!occurs(p.cod, 0)) {
                bool paren = prec > kArrow;
                open(paren, out);
                go(p.dom, kEq, out);
                out += " -> ";
                under("_", p.cod, kBinder, out);
                close(paren, out);
                return;
              }
              bool paren = prec > kBinder;
              open(paren, out);
              std::string n = fresh(p.name);
              out += "Pi (" + n + " : ";
              go(p.dom, kBinder, out);
              out += "), ";
              under(n, p.cod, kBinder, out);
              close(paren, out);
            },
            [&](const Sigma& s) {
              bool paren = prec > kBinder;
              open(paren, out);
              std::string n = occurs(s.snd, 0) ? fresh(s.name) : "_";
              out += "Sig (" + n + " : ";
              go(s.fst, kBinder, out);
              out += "), ";
              under(n, s.snd, kBinder, out);
              close(paren, out);
            },
            [&](const Lam& l) {
              bool paren = prec > kBinder;
              open(paren, out);
              std::string n = occurs(l.body, 0) ? fresh(l.name) : "_";
              out += "fun ";
              if (l.dom) {
                out += "(" + n + " : ";
                go(l.dom, kBinder, out);
                out += ")";
              } else {
                out += n;
              }
              out += " => ";
              under(n, l.body, kBinder, out);
              close(paren, out);
            },
            [&](const App& a) {
              bool paren = prec > kApp;
              open(paren, out);
              go(a.fn, kApp, out);
              out += ' ';
              go(a.arg, kAtom, out);
              close(paren, out);
            },
            [&](const Const& c) { constant(c, prec, out); },
            [&](const Ann& a) {
              out += '(';
              go(a.term, kBinder, out);
              out += " : ";
              go(a.type, kBinder, out);
              out += ')';
            },
        },
        t->node);
  }

  void constant(const Const& c, int prec, std::string& out) {
    const auto& info = builtin_info(c.id);
    if (info.infix && c.args.size() == 2) {
      bool is_eq = c.id == Builtin::Eq || c.id == Builtin::EqS;
      int level = is_eq ? kEq : kSum;
      bool paren = prec > level;
      open(paren, out);
      go(c.args[0], kSum, out);
      out += ' ';
      out += info.name;
      out += ' ';
      go(c.args[1], is_eq ? kSum : kApp, out);
      close(paren, out);
      return;
    }
    if (c.args.empty()) {
      out += info.name;
      return;
    }
    bool paren = prec > kApp;
    open(paren, out);
    out += info.name;
    for (const auto& a : c.args) {
      out += ' ';
      go(a, kAtom, out);
    }
    close(paren, out);
  }

  std::vector<std::string> scope_;
  std::set<std::string> taken_globals_;
};

inline std::string print(const TermPtr& t, std::vector<std::string> scope = {}) {
  return Printer(std::move(scope)).print(t);
}

}  // namespace tltt
