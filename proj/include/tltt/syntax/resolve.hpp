#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tltt/core/term.hpp"
#include "tltt/syntax/surface.hpp"

namespace tltt {

/// A declaration after name resolution.
struct CoreDecl {
  surface::DeclKind kind;
  std::string name;
  TermPtr type;   // null only for an unannotated def
  TermPtr value;  // null for axiom
  Pos pos;
  std::optional<std::string> expect;
};

/// Turns surface names into de Bruijn indices, global references or
/// built-in constants. Locals shadow globals, globals shadow built-ins.
class Resolver {
 public:
  explicit Resolver(std::set<std::string> globals = {}) : globals_(std::move(globals)) {}

  void add_global(const std::string& name) { globals_.insert(name); }
  bool has_global(const std::string& name) const { return globals_.count(name) != 0; }

  TermPtr term(const surface::TermPtr& t) {
    locals_.clear();
    return go(t);
  }

  /// Resolves one declaration. Does not register its name.
  CoreDecl decl(const surface::Decl& d) {
    CoreDecl out{d.kind, d.name, nullptr, nullptr, d.pos, d.expect};
    if (d.type) out.type = term(d.type);
    if (d.value) out.value = term(d.value);
    return out;
  }

 private:
  std::optional<unsigned> lookup_local(const std::string& name) const {
    if (name == "_") return std::nullopt;
    for (std::size_t i = locals_.size(); i-- > 0;)
      if (locals_[i] == name) return static_cast<unsigned>(locals_.size() - 1 - i);
    return std::nullopt;
  }

  TermPtr under(const std::string& name, const surface::TermPtr& body) {
    locals_.push_back(name);
    TermPtr r = go(body);
    locals_.pop_back();
    return r;
  }

  TermPtr go(const surface::TermPtr& t) {
    Pos pos = t->pos;
    return std::visit(
        overloaded{
            [&](const surface::Name&) { return spine(t); },
            [&](const surface::App&) { return spine(t); },
            [&](const surface::Universe& u) { return mk::univ(u.sort, pos); },
            [&](const surface::Pi& p) {
              TermPtr dom = go(p.dom);
              return mk::pi(p.name, dom, under(p.name, p.cod), pos);
            },
            [&](const surface::Sigma& s) {
              TermPtr dom = go(s.fst);
              return mk::sigma(s.name, dom, under(s.name, s.snd), pos);
            },
            [&](const surface::Lam& l) {
              TermPtr dom = l.dom ? go(l.dom) : nullptr;
              return mk::lam(l.name, dom, under(l.name, l.body), pos);
            },
            [&](const surface::Infix& i) {
              return mk::cnst(i.op, {go(i.lhs), go(i.rhs)}, pos);
            },
            [&](const surface::Ann& a) { return mk::ann(go(a.term), go(a.type), pos); },
        },
        t->node);
  }

  /// Resolves an application spine so built-ins can absorb their arguments.
  TermPtr spine(const surface::TermPtr& t) {
    std::vector<surface::TermPtr> args;
    surface::TermPtr head = t;
    while (const auto* a = head->as<surface::App>()) {
      args.push_back(a->arg);
      head = a->fn;
    }
    std::reverse(args.begin(), args.end());

    TermPtr fn;
    std::size_t used = 0;
    if (const auto* n = head->as<surface::Name>()) {
      if (auto idx = lookup_local(n->name)) {
        fn = mk::var(*idx, head->pos);
      } else if (has_global(n->name)) {
        fn = mk::global(n->name, head->pos);
      } else if (auto b = builtin_by_name(n->name)) {
        used = std::min<std::size_t>(builtin_info(*b).arity, args.size());
        std::vector<TermPtr> cargs;
        for (std::size_t i = 0; i < used; ++i) cargs.push_back(go(args[i]));
        fn = mk::cnst(*b, std::move(cargs), head->pos);
      } else {
        throw ScopeError("unbound identifier '" + n->name + "'", head->pos);
      }
    } else {
      fn = go(head);
    }
    for (std::size_t i = used; i < args.size(); ++i) fn = mk::app(fn, go(args[i]), fn->pos);
    return fn;
  }

  std::set<std::string> globals_;
  std::vector<std::string> locals_;
};

/// Resolves a whole module, registering def/axiom names in order.
inline std::vector<CoreDecl> resolve_module(const surface::Module& m,
                                            std::set<std::string> globals = {}) {
  Resolver r(std::move(globals));
  std::vector<CoreDecl> out;
  for (const auto& d : m.decls) {
    out.push_back(r.decl(d));
    if (!d.name.empty()) r.add_global(d.name);
  }
  return out;
}

}  // namespace tltt
