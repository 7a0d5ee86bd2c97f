#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tltt/core/error.hpp"

namespace tltt {

// ---------------------------------------------------------------------------
// Sorts

enum class SortKind { Fib, Strict };

/// The universe a type lives in: `U level` (fibrant) or `Us level` (strict).
struct Sort {
  SortKind kind = SortKind::Fib;
  unsigned level = 0;

  friend bool operator==(const Sort&, const Sort&) = default;

  static Sort fib(unsigned l) { return {SortKind::Fib, l}; }
  static Sort strict(unsigned l) { return {SortKind::Strict, l}; }
  bool is_fib() const { return kind == SortKind::Fib; }
};

/// Fib(i) <= Fib(j), Strict(i) <= Strict(j), Fib(i) <= Strict(j) for i <= j.
/// Strict is never below Fib.
inline bool sort_leq(Sort a, Sort b) {
  if (a.level > b.level) return false;
  return !(a.kind == SortKind::Strict && b.kind == SortKind::Fib);
}

/// Pi/Sigma sort: fibrant iff both components are fibrant.
inline Sort sort_join(Sort a, Sort b) {
  unsigned l = std::max(a.level, b.level);
  return (a.is_fib() && b.is_fib()) ? Sort::fib(l) : Sort::strict(l);
}

inline std::string to_string(Sort s) {
  return std::string(s.is_fib() ? "Fib(" : "Strict(") + std::to_string(s.level) + ")";
}

// ---------------------------------------------------------------------------
// Built-in constants

enum class Builtin : std::uint8_t {
  Unit, Star, Empty, EmptyS, Nat, NatS,
  Zero, Succ, ZeroS, SuccS,
  Inl, Inr, InlS, InrS,
  Refl, ReflS, J, Js, Uip, FunextS,
  IndNat, IndNatS, IndEmpty, IndEmptyS, IndSum, IndSumS, IndUnit,
  Fst, Snd, Pair,
  // infix type formers
  Sum, SumS, Eq, EqS,
};

struct BuiltinInfo {
  Builtin id;
  std::string_view name;
  unsigned arity;
  bool infix;
};

inline constexpr std::array<BuiltinInfo, 34> kBuiltins{{
    {Builtin::Unit, "Unit", 0, false},         {Builtin::Star, "star", 0, false},
    {Builtin::Empty, "Empty", 0, false},       {Builtin::EmptyS, "EmptyS", 0, false},
    {Builtin::Nat, "Nat", 0, false},           {Builtin::NatS, "NatS", 0, false},
    {Builtin::Zero, "zero", 0, false},         {Builtin::Succ, "succ", 1, false},
    {Builtin::ZeroS, "zeroS", 0, false},       {Builtin::SuccS, "succS", 1, false},
    {Builtin::Inl, "inl", 1, false},           {Builtin::Inr, "inr", 1, false},
    {Builtin::InlS, "inlS", 1, false},         {Builtin::InrS, "inrS", 1, false},
    {Builtin::Refl, "refl", 1, false},         {Builtin::ReflS, "reflS", 1, false},
    {Builtin::J, "J", 3, false},               {Builtin::Js, "Js", 3, false},
    {Builtin::Uip, "uip", 0, false},           {Builtin::FunextS, "funextS", 0, false},
    {Builtin::IndNat, "indNat", 4, false},     {Builtin::IndNatS, "indNatS", 4, false},
    {Builtin::IndEmpty, "indEmpty", 2, false}, {Builtin::IndEmptyS, "indEmptyS", 2, false},
    {Builtin::IndSum, "indSum", 4, false},     {Builtin::IndSumS, "indSumS", 4, false},
    {Builtin::IndUnit, "indUnit", 3, false},
    {Builtin::Fst, "fst", 1, false},           {Builtin::Snd, "snd", 1, false},
    {Builtin::Pair, "pair", 2, false},
    {Builtin::Sum, "+", 2, true},              {Builtin::SumS, "+s", 2, true},
    {Builtin::Eq, "=", 2, true},               {Builtin::EqS, "=s", 2, true},
}};

inline const BuiltinInfo& builtin_info(Builtin b) {
  return kBuiltins[static_cast<std::size_t>(b)];
}

/// Looks up a prefix (non-infix) built-in by its surface name.
inline std::optional<Builtin> builtin_by_name(std::string_view name) {
  for (const auto& info : kBuiltins)
    if (!info.infix && info.name == name) return info.id;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Core terms: de Bruijn indices, shared immutable nodes.

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Var { unsigned index; };
struct Global { std::string name; };
struct Universe { Sort sort; };
struct Pi { std::string name; TermPtr dom; TermPtr cod; };
struct Sigma { std::string name; TermPtr fst; TermPtr snd; };
struct Lam { std::string name; TermPtr dom; /* may be null */ TermPtr body; };
struct App { TermPtr fn; TermPtr arg; };
struct Const { Builtin id; std::vector<TermPtr> args; };
/// `(t : T)`; the checker uses it to switch into inference, reduction drops it.
struct Ann { TermPtr term; TermPtr type; };

struct Term {
  std::variant<Var, Global, Universe, Pi, Sigma, Lam, App, Const, Ann> node;
  Pos pos;

  template <class T>
  const T* as() const { return std::get_if<T>(&node); }
  template <class T>
  bool is() const { return std::holds_alternative<T>(node); }
};

namespace mk {
inline TermPtr term(auto node, Pos pos = {}) {
  return std::make_shared<const Term>(Term{std::move(node), pos});
}
inline TermPtr var(unsigned i, Pos p = {}) { return term(Var{i}, p); }
inline TermPtr global(std::string n, Pos p = {}) { return term(Global{std::move(n)}, p); }
inline TermPtr univ(Sort s, Pos p = {}) { return term(Universe{s}, p); }
inline TermPtr pi(std::string n, TermPtr a, TermPtr b, Pos p = {}) {
  return term(Pi{std::move(n), std::move(a), std::move(b)}, p);
}
inline TermPtr sigma(std::string n, TermPtr a, TermPtr b, Pos p = {}) {
  return term(Sigma{std::move(n), std::move(a), std::move(b)}, p);
}
inline TermPtr lam(std::string n, TermPtr dom, TermPtr body, Pos p = {}) {
  return term(Lam{std::move(n), std::move(dom), std::move(body)}, p);
}
inline TermPtr app(TermPtr f, TermPtr a, Pos p = {}) {
  return term(App{std::move(f), std::move(a)}, p);
}
inline TermPtr cnst(Builtin b, std::vector<TermPtr> args = {}, Pos p = {}) {
  return term(Const{b, std::move(args)}, p);
}
inline TermPtr ann(TermPtr t, TermPtr ty, Pos p = {}) {
  return term(Ann{std::move(t), std::move(ty)}, p);
}
inline TermPtr apps(TermPtr f, std::initializer_list<TermPtr> args) {
  for (const auto& a : args) f = app(f, a, f->pos);
  return f;
}
}  // namespace mk

// ---------------------------------------------------------------------------
// Structural operations

/// Adds `by` to every free index >= `cutoff`.
inline TermPtr shift(const TermPtr& t, int by, unsigned cutoff = 0) {
  if (by == 0) return t;
  return std::visit(
      overloaded{
          [&](const Var& v) -> TermPtr {
            if (v.index < cutoff) return t;
            return mk::var(static_cast<unsigned>(static_cast<int>(v.index) + by), t->pos);
          },
          [&](const Global&) -> TermPtr { return t; },
          [&](const Universe&) -> TermPtr { return t; },
          [&](const Pi& p) -> TermPtr {
            return mk::pi(p.name, shift(p.dom, by, cutoff), shift(p.cod, by, cutoff + 1), t->pos);
          },
          [&](const Sigma& s) -> TermPtr {
            return mk::sigma(s.name, shift(s.fst, by, cutoff), shift(s.snd, by, cutoff + 1), t->pos);
          },
          [&](const Lam& l) -> TermPtr {
            return mk::lam(l.name, l.dom ? shift(l.dom, by, cutoff) : nullptr,
                           shift(l.body, by, cutoff + 1), t->pos);
          },
          [&](const App& a) -> TermPtr {
            return mk::app(shift(a.fn, by, cutoff), shift(a.arg, by, cutoff), t->pos);
          },
          [&](const Const& c) -> TermPtr {
            std::vector<TermPtr> args;
            args.reserve(c.args.size());
            for (const auto& a : c.args) args.push_back(shift(a, by, cutoff));
            return mk::cnst(c.id, std::move(args), t->pos);
          },
          [&](const Ann& a) -> TermPtr {
            return mk::ann(shift(a.term, by, cutoff), shift(a.type, by, cutoff), t->pos);
          },
      },
      t->node);
}

/// Replaces index `depth` by `value` (which lives outside all `depth` binders)
/// and lowers the indices above it by one.
inline TermPtr subst_at(const TermPtr& t, unsigned depth, const TermPtr& value) {
  return std::visit(
      overloaded{
          [&](const Var& v) -> TermPtr {
            if (v.index < depth) return t;
            if (v.index == depth) return shift(value, static_cast<int>(depth));
            return mk::var(v.index - 1, t->pos);
          },
          [&](const Global&) -> TermPtr { return t; },
          [&](const Universe&) -> TermPtr { return t; },
          [&](const Pi& p) -> TermPtr {
            return mk::pi(p.name, subst_at(p.dom, depth, value), subst_at(p.cod, depth + 1, value),
                          t->pos);
          },
          [&](const Sigma& s) -> TermPtr {
            return mk::sigma(s.name, subst_at(s.fst, depth, value),
                             subst_at(s.snd, depth + 1, value), t->pos);
          },
          [&](const Lam& l) -> TermPtr {
            return mk::lam(l.name, l.dom ? subst_at(l.dom, depth, value) : nullptr,
                           subst_at(l.body, depth + 1, value), t->pos);
          },
          [&](const App& a) -> TermPtr {
            return mk::app(subst_at(a.fn, depth, value), subst_at(a.arg, depth, value), t->pos);
          },
          [&](const Const& c) -> TermPtr {
            std::vector<TermPtr> args;
            args.reserve(c.args.size());
            for (const auto& a : c.args) args.push_back(subst_at(a, depth, value));
            return mk::cnst(c.id, std::move(args), t->pos);
          },
          [&](const Ann& a) -> TermPtr {
            return mk::ann(subst_at(a.term, depth, value), subst_at(a.type, depth, value), t->pos);
          },
      },
      t->node);
}

/// Instantiates the outermost bound variable of a binder body.
inline TermPtr instantiate(const TermPtr& body, const TermPtr& value) {
  return subst_at(body, 0, value);
}

/// Syntactic equality up to binder names and positions.
inline bool alpha_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const Var& v) { return v.index == b->as<Var>()->index; },
          [&](const Global& g) { return g.name == b->as<Global>()->name; },
          [&](const Universe& u) { return u.sort == b->as<Universe>()->sort; },
          [&](const Pi& p) {
            const auto* q = b->as<Pi>();
            return alpha_equal(p.dom, q->dom) && alpha_equal(p.cod, q->cod);
          },
          [&](const Sigma& s) {
            const auto* q = b->as<Sigma>();
            return alpha_equal(s.fst, q->fst) && alpha_equal(s.snd, q->snd);
          },
          [&](const Lam& l) {
            const auto* q = b->as<Lam>();
            if (static_cast<bool>(l.dom) != static_cast<bool>(q->dom)) return false;
            if (l.dom && !alpha_equal(l.dom, q->dom)) return false;
            return alpha_equal(l.body, q->body);
          },
          [&](const App& x) {
            const auto* y = b->as<App>();
            return alpha_equal(x.fn, y->fn) && alpha_equal(x.arg, y->arg);
          },
          [&](const Const& c) {
            const auto* d = b->as<Const>();
            if (c.id != d->id || c.args.size() != d->args.size()) return false;
            for (std::size_t i = 0; i < c.args.size(); ++i)
              if (!alpha_equal(c.args[i], d->args[i])) return false;
            return true;
          },
          [&](const Ann& x) {
            const auto* y = b->as<Ann>();
            return alpha_equal(x.term, y->term) && alpha_equal(x.type, y->type);
          },
      },
      a->node);
}

/// True if index `depth` (relative to the root of `t`) occurs free.
inline bool occurs(const TermPtr& t, unsigned depth) {
  return std::visit(
      overloaded{
          [&](const Var& v) { return v.index == depth; },
          [&](const Global&) { return false; },
          [&](const Universe&) { return false; },
          [&](const Pi& p) { return occurs(p.dom, depth) || occurs(p.cod, depth + 1); },
          [&](const Sigma& s) { return occurs(s.fst, depth) || occurs(s.snd, depth + 1); },
          [&](const Lam& l) {
            return (l.dom && occurs(l.dom, depth)) || occurs(l.body, depth + 1);
          },
          [&](const App& a) { return occurs(a.fn, depth) || occurs(a.arg, depth); },
          [&](const Const& c) {
            return std::any_of(c.args.begin(), c.args.end(),
                               [&](const TermPtr& x) { return occurs(x, depth); });
          },
          [&](const Ann& a) { return occurs(a.term, depth) || occurs(a.type, depth); },
      },
      t->node);
}

/// Collects the names of globals referenced by `t`.
inline void collect_globals(const TermPtr& t, std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const Var&) {},
                 [&](const Global& g) { out.insert(g.name); },
                 [&](const Universe&) {},
                 [&](const Pi& p) { collect_globals(p.dom, out); collect_globals(p.cod, out); },
                 [&](const Sigma& s) { collect_globals(s.fst, out); collect_globals(s.snd, out); },
                 [&](const Lam& l) {
                   if (l.dom) collect_globals(l.dom, out);
                   collect_globals(l.body, out);
                 },
                 [&](const App& a) { collect_globals(a.fn, out); collect_globals(a.arg, out); },
                 [&](const Const& c) {
                   for (const auto& a : c.args) collect_globals(a, out);
                 },
                 [&](const Ann& a) { collect_globals(a.term, out); collect_globals(a.type, out); },
             },
             t->node);
}

/// Collects the built-in constants used by `t`.
inline void collect_builtins(const TermPtr& t, std::set<Builtin>& out) {
  std::visit(overloaded{
                 [&](const Var&) {},
                 [&](const Global&) {},
                 [&](const Universe&) {},
                 [&](const Pi& p) { collect_builtins(p.dom, out); collect_builtins(p.cod, out); },
                 [&](const Sigma& s) { collect_builtins(s.fst, out); collect_builtins(s.snd, out); },
                 [&](const Lam& l) {
                   if (l.dom) collect_builtins(l.dom, out);
                   collect_builtins(l.body, out);
                 },
                 [&](const App& a) { collect_builtins(a.fn, out); collect_builtins(a.arg, out); },
                 [&](const Const& c) {
                   out.insert(c.id);
                   for (const auto& a : c.args) collect_builtins(a, out);
                 },
                 [&](const Ann& a) { collect_builtins(a.term, out); collect_builtins(a.type, out); },
             },
             t->node);
}

/// Checks that every index is bound: the scope validator for core terms.
inline bool well_scoped(const TermPtr& t, unsigned depth) {
  return std::visit(
      overloaded{
          [&](const Var& v) { return v.index < depth; },
          [&](const Global&) { return true; },
          [&](const Universe&) { return true; },
          [&](const Pi& p) { return well_scoped(p.dom, depth) && well_scoped(p.cod, depth + 1); },
          [&](const Sigma& s) {
            return well_scoped(s.fst, depth) && well_scoped(s.snd, depth + 1);
          },
          [&](const Lam& l) {
            return (!l.dom || well_scoped(l.dom, depth)) && well_scoped(l.body, depth + 1);
          },
          [&](const App& a) { return well_scoped(a.fn, depth) && well_scoped(a.arg, depth); },
          [&](const Const& c) {
            return std::all_of(c.args.begin(), c.args.end(),
                               [&](const TermPtr& x) { return well_scoped(x, depth); });
          },
          [&](const Ann& a) { return well_scoped(a.term, depth) && well_scoped(a.type, depth); },
      },
      t->node);
}

}  // namespace tltt
