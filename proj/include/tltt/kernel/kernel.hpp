#pragma once

#include <set>
#include <string>
#include <vector>

#include "tltt/core/term.hpp"
#include "tltt/kernel/environment.hpp"
#include "tltt/syntax/parser.hpp"
#include "tltt/syntax/printer.hpp"
#include "tltt/syntax/resolve.hpp"

namespace tltt {

/// Switches for individual computation rules and postulates. Everything is on
/// by default; tests turn single rules off to see which proofs depend on them.
struct KernelOptions {
  bool beta_j = true;
  bool beta_js = true;
  bool iota_nat = true;
  bool iota_nat_s = true;
  bool iota_sum = true;
  bool iota_sum_s = true;
  bool iota_unit = true;
  bool enable_uip = true;
  bool enable_funext = true;
};

/// Typing context as a telescope; entry i lives in the context of entries 0..i-1.
class Context {
 public:
  struct Entry {
    std::string name;
    TermPtr type;
  };

  Context extended(std::string name, TermPtr type) const {
    Context c = *this;
    c.entries_.push_back({std::move(name), std::move(type)});
    return c;
  }

  std::size_t size() const { return entries_.size(); }

  /// Type of de Bruijn index `idx`, valid in the full context.
  TermPtr type_of(unsigned idx) const {
    const auto& e = entries_.at(entries_.size() - 1 - idx);
    return shift(e.type, static_cast<int>(idx) + 1);
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& e : entries_) out.push_back(e.name);
    return out;
  }

 private:
  std::vector<Entry> entries_;
};

namespace detail {

inline TermPtr builtin_type(std::string_view text) {
  return Resolver().term(syntax::parse_term(text));
}

inline const TermPtr& uip_type() {
  static const TermPtr t =
      builtin_type("Pi (A : Us 0)(a b : A)(p q : a =s b), p =s q");
  return t;
}

inline const TermPtr& funext_type() {
  static const TermPtr t = builtin_type(
      "Pi (A : Us 0)(B : A -> Us 0)(f g : Pi (x : A), B x), "
      "(Pi (x : A), f x =s g x) -> f =s g");
  return t;
}

}  // namespace detail

/// Bidirectional checker for core terms over a fixed environment.
///
/// Every rule that participates in a successful judgement is added to
/// `rules_used()`; a rejection is reported as a `TypeError` carrying the rule
/// that refused the input.
class Kernel {
 public:
  explicit Kernel(const Environment& env, KernelOptions opts = {}) : env_(&env), opts_(opts) {}

  const std::set<std::string>& rules_used() const { return rules_; }
  void clear_rules() { rules_.clear(); }
  void set_fallback_pos(Pos p) { fallback_ = p; }

  // ---------------------------------------------------------------- reduction

  TermPtr whnf(TermPtr t) const {
    for (;;) {
      if (const auto* a = t->as<Ann>()) {
        t = a->term;
      } else if (const auto* g = t->as<Global>()) {
        const GlobalEntry* e = env_->find(g->name);
        if (e == nullptr || !e->value) return t;
        t = e->value;
      } else if (const auto* app = t->as<App>()) {
        TermPtr fn = whnf(app->fn);
        const auto* lam = fn->as<Lam>();
        if (lam == nullptr) return fn == app->fn ? t : mk::app(fn, app->arg, t->pos);
        t = instantiate(lam->body, app->arg);
      } else if (const auto* c = t->as<Const>()) {
        TermPtr next = step_const(*c);
        if (!next) return t;
        t = next;
      } else {
        return t;
      }
    }
  }

  // --------------------------------------------------------------- conversion

  bool convert(const TermPtr& a, const TermPtr& b) const {
    if (alpha_equal(a, b)) return true;
    TermPtr x = whnf(a);
    TermPtr y = whnf(b);
    if (alpha_equal(x, y)) return true;

    // Eta for functions and pairs: one side is a constructor, the other is not.
    const auto* lx = x->as<Lam>();
    const auto* ly = y->as<Lam>();
    if (lx && ly) return convert(lx->body, ly->body);
    if (lx) return convert(lx->body, mk::app(shift(y, 1), mk::var(0)));
    if (ly) return convert(mk::app(shift(x, 1), mk::var(0)), ly->body);
    const Const* px = as_pair(x);
    const Const* py = as_pair(y);
    if (px && !py)
      return convert(px->args[0], mk::cnst(Builtin::Fst, {y})) &&
             convert(px->args[1], mk::cnst(Builtin::Snd, {y}));
    if (py && !px)
      return convert(mk::cnst(Builtin::Fst, {x}), py->args[0]) &&
             convert(mk::cnst(Builtin::Snd, {x}), py->args[1]);

    if (x->node.index() != y->node.index()) return false;
    return std::visit(
        overloaded{
            [&](const Var& v) { return v.index == y->as<Var>()->index; },
            [&](const Global& g) { return g.name == y->as<Global>()->name; },
            [&](const Universe& u) { return u.sort == y->as<Universe>()->sort; },
            [&](const Pi& p) {
              const auto* q = y->as<Pi>();
              return convert(p.dom, q->dom) && convert(p.cod, q->cod);
            },
            [&](const Sigma& s) {
              const auto* q = y->as<Sigma>();
              return convert(s.fst, q->fst) && convert(s.snd, q->snd);
            },
            [&](const Lam&) { return false; },
            [&](const App& f) {
              const auto* g = y->as<App>();
              return convert(f.fn, g->fn) && convert(f.arg, g->arg);
            },
            [&](const Const& c) {
              const auto* d = y->as<Const>();
              if (c.id != d->id || c.args.size() != d->args.size()) return false;
              for (std::size_t i = 0; i < c.args.size(); ++i)
                if (!convert(c.args[i], d->args[i])) return false;
              return true;
            },
            [&](const Ann&) { return false; },
        },
        x->node);
  }

  /// Cumulative subtyping: universes by sort order, Pi covariant in the
  /// codomain and invariant in the domain, conversion elsewhere.
  bool subsumes(const TermPtr& inferred, const TermPtr& expected) {
    TermPtr a = whnf(inferred);
    TermPtr b = whnf(expected);
    const auto* ua = a->as<Universe>();
    const auto* ub = b->as<Universe>();
    if (ua && ub) {
      if (!sort_leq(ua->sort, ub->sort)) return false;
      if (ua->sort.is_fib() && !ub->sort.is_fib()) use("FIB-PRE");
      if (ua->sort.level < ub->sort.level) use("CUMUL");
      return true;
    }
    const auto* pa = a->as<Pi>();
    const auto* pb = b->as<Pi>();
    if (pa && pb) return convert(pa->dom, pb->dom) && subsumes(pa->cod, pb->cod);
    return convert(a, b);
  }

  // ------------------------------------------------------------------- typing

  Sort infer_sort(const Context& ctx, const TermPtr& type) {
    TermPtr ty = whnf(infer(ctx, type));
    if (const auto* u = ty->as<Universe>()) return u->sort;
    throw TypeError("TYPE", "expected a type, but '" + show(ctx, type) + "' has type '" +
                                show(ctx, ty) + "'",
                    pos_of(type));
  }

  TermPtr infer(const Context& ctx, const TermPtr& t) {
    return std::visit(
        overloaded{
            [&](const Var& v) -> TermPtr {
              if (v.index >= ctx.size())
                throw TypeError("SCOPE", "index out of scope", pos_of(t));
              return ctx.type_of(v.index);
            },
            [&](const Global& g) -> TermPtr {
              const GlobalEntry* e = env_->find(g.name);
              if (e == nullptr)
                throw TypeError("SCOPE", "unknown global '" + g.name + "'", pos_of(t));
              return e->type;
            },
            [&](const Universe& u) -> TermPtr {
              return mk::univ({u.sort.kind, u.sort.level + 1});
            },
            [&](const Pi& p) -> TermPtr {
              Sort a = infer_sort(ctx, p.dom);
              Sort b = infer_sort(ctx.extended(p.name, p.dom), p.cod);
              Sort j = sort_join(a, b);
              use(j.is_fib() ? "PI-FIB" : "FORM-PI");
              return mk::univ(j);
            },
            [&](const Sigma& s) -> TermPtr {
              Sort a = infer_sort(ctx, s.fst);
              Sort b = infer_sort(ctx.extended(s.name, s.fst), s.snd);
              Sort j = sort_join(a, b);
              use(j.is_fib() ? "SIGMA-FIB" : "FORM-SIGMA");
              return mk::univ(j);
            },
            [&](const Lam& l) -> TermPtr {
              if (!l.dom)
                throw TypeError("INFER",
                                "cannot infer the type of an unannotated function; add a "
                                "binder type or an annotation",
                                pos_of(t));
              infer_sort(ctx, l.dom);
              TermPtr body = infer(ctx.extended(l.name, l.dom), l.body);
              return mk::pi(l.name, l.dom, body);
            },
            [&](const App& a) -> TermPtr {
              if (const auto* l = a.fn->as<Lam>(); l && !l->dom) {
                // A redex such as an instantiated motive: the argument fixes the domain.
                TermPtr dom = infer(ctx, a.arg);
                return infer(ctx, mk::app(mk::lam(l->name, dom, l->body, a.fn->pos), a.arg, t->pos));
              }
              TermPtr fty = whnf(infer(ctx, a.fn));
              const auto* pi = fty->as<Pi>();
              if (pi == nullptr)
                throw TypeError("TYPE",
                                "'" + show(ctx, a.fn) + "' is applied but has non-function type '" +
                                    show(ctx, fty) + "'",
                                pos_of(a.fn));
              check(ctx, a.arg, pi->dom);
              return instantiate(pi->cod, a.arg);
            },
            [&](const Const& c) -> TermPtr { return infer_const(ctx, t, c); },
            [&](const Ann& a) -> TermPtr {
              infer_sort(ctx, a.type);
              check(ctx, a.term, a.type);
              return a.type;
            },
        },
        t->node);
  }

  void check(const Context& ctx, const TermPtr& t, const TermPtr& expected) {
    if (const auto* l = t->as<Lam>()) {
      TermPtr e = whnf(expected);
      const auto* pi = e->as<Pi>();
      if (pi == nullptr)
        throw TypeError("TYPE", "a function was given where '" + show(ctx, e) + "' is expected",
                        pos_of(t));
      if (l->dom) {
        infer_sort(ctx, l->dom);
        if (!convert(l->dom, pi->dom))
          throw TypeError("CONV",
                          "binder type '" + show(ctx, l->dom) + "' does not match '" +
                              show(ctx, pi->dom) + "'",
                          pos_of(l->dom));
      }
      check(ctx.extended(l->name, pi->dom), l->body, pi->cod);
      return;
    }
    if (const auto* c = t->as<Const>(); c && c->args.size() == builtin_info(c->id).arity) {
      switch (c->id) {
        case Builtin::Pair: {
          TermPtr e = whnf(expected);
          if (const auto* sg = e->as<Sigma>()) {
            check(ctx, c->args[0], sg->fst);
            check(ctx, c->args[1], instantiate(sg->snd, c->args[0]));
            return;
          }
          break;
        }
        case Builtin::Inl:
        case Builtin::Inr:
        case Builtin::InlS:
        case Builtin::InrS: {
          bool strict = c->id == Builtin::InlS || c->id == Builtin::InrS;
          bool left = c->id == Builtin::Inl || c->id == Builtin::InlS;
          Builtin former = strict ? Builtin::SumS : Builtin::Sum;
          TermPtr e = whnf(expected);
          const auto* s = e->as<Const>();
          if (s == nullptr || s->id != former || s->args.size() != 2)
            throw TypeError("TYPE",
                            std::string(builtin_info(c->id).name) + " builds an element of a " +
                                (strict ? "strict" : "fibrant") + " sum, but '" + show(ctx, e) +
                                "' is expected",
                            pos_of(t));
          check(ctx, c->args[0], s->args[left ? 0 : 1]);
          use(strict ? "INTRO-+s" : "INTRO-+");
          return;
        }
        default: break;
      }
    }
    TermPtr actual = infer(ctx, t);
    if (!subsumes(actual, expected)) mismatch(ctx, t, actual, expected);
  }

 private:
  void use(const char* rule) const { rules_.insert(rule); }

  Pos pos_of(const TermPtr& t) const { return t->pos.line != 0 ? t->pos : fallback_; }

  static std::string show(const Context& ctx, const TermPtr& t) {
    return print(t, ctx.names());
  }

  static const Const* as_pair(const TermPtr& t) {
    const auto* c = t->as<Const>();
    return (c && c->id == Builtin::Pair && c->args.size() == 2) ? c : nullptr;
  }

  /// Returns the head constructor of `t` if it is the given built-in.
  const Const* ctor(const TermPtr& t, Builtin id) const {
    const auto* c = t->as<Const>();
    return (c && c->id == id && c->args.size() == builtin_info(id).arity) ? c : nullptr;
  }

  /// One computation step at a built-in head, or null if stuck.
  TermPtr step_const(const Const& c) const {
    if (c.args.size() != builtin_info(c.id).arity) return nullptr;
    const auto& a = c.args;
    switch (c.id) {
      case Builtin::Fst:
      case Builtin::Snd: {
        TermPtr p = whnf(a[0]);
        if (const Const* pr = as_pair(p)) return pr->args[c.id == Builtin::Fst ? 0 : 1];
        return nullptr;
      }
      case Builtin::J:
      case Builtin::Js: {
        bool strict = c.id == Builtin::Js;
        if (!(strict ? opts_.beta_js : opts_.beta_j)) return nullptr;
        if (!ctor(whnf(a[2]), strict ? Builtin::ReflS : Builtin::Refl)) return nullptr;
        use(strict ? "COMP-=s" : "COMP-=");
        return a[1];
      }
      case Builtin::IndNat:
      case Builtin::IndNatS: {
        bool strict = c.id == Builtin::IndNatS;
        if (!(strict ? opts_.iota_nat_s : opts_.iota_nat)) return nullptr;
        TermPtr n = whnf(a[3]);
        if (ctor(n, strict ? Builtin::ZeroS : Builtin::Zero)) {
          use(strict ? "COMP-Ns" : "COMP-N");
          return a[1];
        }
        if (const Const* s = ctor(n, strict ? Builtin::SuccS : Builtin::Succ)) {
          use(strict ? "COMP-Ns" : "COMP-N");
          TermPtr rec = mk::cnst(c.id, {a[0], a[1], a[2], s->args[0]});
          return mk::app(mk::app(a[2], s->args[0]), rec);
        }
        return nullptr;
      }
      case Builtin::IndSum:
      case Builtin::IndSumS: {
        bool strict = c.id == Builtin::IndSumS;
        if (!(strict ? opts_.iota_sum_s : opts_.iota_sum)) return nullptr;
        TermPtr s = whnf(a[3]);
        if (const Const* l = ctor(s, strict ? Builtin::InlS : Builtin::Inl)) {
          use(strict ? "COMP-+s" : "COMP-+");
          return mk::app(a[1], l->args[0]);
        }
        if (const Const* r = ctor(s, strict ? Builtin::InrS : Builtin::Inr)) {
          use(strict ? "COMP-+s" : "COMP-+");
          return mk::app(a[2], r->args[0]);
        }
        return nullptr;
      }
      case Builtin::IndUnit: {
        if (!opts_.iota_unit) return nullptr;
        if (!ctor(whnf(a[2]), Builtin::Star)) return nullptr;
        use("COMP-1");
        return a[1];
      }
      default: return nullptr;
    }
  }

  [[noreturn]] void mismatch(const Context& ctx, const TermPtr& t, const TermPtr& actual,
                             const TermPtr& expected) {
    TermPtr a = whnf(actual);
    TermPtr e = whnf(expected);
    std::string msg = "'" + show(ctx, t) + "' has type '" + show(ctx, actual) +
                      "' but '" + show(ctx, expected) + "' is expected";
    const auto* ua = a->as<Universe>();
    const auto* ue = e->as<Universe>();
    if (ua && ue) {
      if (!ua->sort.is_fib() && ue->sort.is_fib()) {
        const TermPtr* head = &t;
        while (const auto* an = (*head)->as<Ann>()) head = &an->term;
        std::string rule = (*head)->is<Pi>()    ? "PI-FIB"
                           : (*head)->is<Sigma>() ? "SIGMA-FIB"
                                                  : "FIB-PRE";
        throw TypeError(rule, msg + " (a pretype is not a fibrant type)", pos_of(t));
      }
      throw TypeError("CUMUL", msg + " (universe level too large)", pos_of(t));
    }
    throw TypeError("CONV", msg, pos_of(t));
  }

  /// Sort of the family `motive` over the telescope `doms`; each domain lives
  /// in the context extended by the previous ones.
  Sort family_sort(const Context& ctx, const TermPtr& motive, const std::vector<TermPtr>& doms,
                   std::size_t from = 0) {
    if (from == doms.size()) return infer_sort(ctx, motive);
    if (const auto* l = motive->as<Lam>()) {
      if (l->dom) {
        infer_sort(ctx, l->dom);
        if (!convert(l->dom, doms[from]))
          throw TypeError("CONV",
                          "motive binder type '" + show(ctx, l->dom) + "' does not match '" +
                              show(ctx, doms[from]) + "'",
                          pos_of(l->dom));
      }
      return family_sort(ctx.extended(l->name, doms[from]), l->body, doms, from + 1);
    }
    TermPtr ty = infer(ctx, motive);
    Context inner = ctx;
    for (std::size_t i = from; i < doms.size(); ++i) {
      TermPtr w = whnf(ty);
      const auto* pi = w->as<Pi>();
      if (pi == nullptr || !convert(pi->dom, doms[i]))
        throw TypeError("TYPE",
                        "motive '" + show(ctx, motive) + "' does not take an argument of type '" +
                            show(inner, doms[i]) + "'",
                        pos_of(motive));
      inner = inner.extended(pi->name, pi->dom);
      ty = pi->cod;
    }
    TermPtr w = whnf(ty);
    if (const auto* u = w->as<Universe>()) return u->sort;
    throw TypeError("TYPE", "motive '" + show(ctx, motive) + "' is not a type family",
                    pos_of(motive));
  }

  static TermPtr apply(TermPtr f, std::initializer_list<TermPtr> args) {
    return mk::apps(std::move(f), args);
  }

  TermPtr infer_equality_carrier(const Context& ctx, const TermPtr& a, Sort& sort) {
    TermPtr ty = infer(ctx, a);
    sort = infer_sort(ctx, ty);
    return ty;
  }

  TermPtr infer_const(const Context& ctx, const TermPtr& t, const Const& c) {
    const auto& info = builtin_info(c.id);
    if (c.args.size() < info.arity)
      throw TypeError("ARITY",
                      std::string("'") + std::string(info.name) + "' expects " +
                          std::to_string(info.arity) + " argument(s), got " +
                          std::to_string(c.args.size()),
                      pos_of(t));
    const auto& a = c.args;
    auto fib0 = [] { return mk::univ(Sort::fib(0)); };
    auto strict0 = [] { return mk::univ(Sort::strict(0)); };
    switch (c.id) {
      case Builtin::Unit:
      case Builtin::Empty:
      case Builtin::Nat: return fib0();
      case Builtin::EmptyS:
      case Builtin::NatS: return strict0();
      case Builtin::Star: return mk::cnst(Builtin::Unit);
      case Builtin::Zero: return mk::cnst(Builtin::Nat);
      case Builtin::ZeroS: return mk::cnst(Builtin::NatS);
      case Builtin::Succ:
        check(ctx, a[0], mk::cnst(Builtin::Nat));
        return mk::cnst(Builtin::Nat);
      case Builtin::SuccS:
        check(ctx, a[0], mk::cnst(Builtin::NatS));
        return mk::cnst(Builtin::NatS);
      case Builtin::Inl:
      case Builtin::Inr:
      case Builtin::InlS:
      case Builtin::InrS:
        throw TypeError("INFER",
                        std::string("cannot infer the sum type of '") + std::string(info.name) +
                            " ...'; add an annotation",
                        pos_of(t));
      case Builtin::Sum: {
        Sort l = infer_sort(ctx, a[0]);
        Sort r = infer_sort(ctx, a[1]);
        if (!l.is_fib() || !r.is_fib())
          throw TypeError("FORM-+",
                          "'+' needs fibrant summands, got " + to_string(l) + " and " +
                              to_string(r) + "; use '+s' for pretypes",
                          pos_of(t));
        use("FORM-+");
        return mk::univ(Sort::fib(std::max(l.level, r.level)));
      }
      case Builtin::SumS: {
        Sort l = infer_sort(ctx, a[0]);
        Sort r = infer_sort(ctx, a[1]);
        use("FORM-+s");
        return mk::univ(Sort::strict(std::max(l.level, r.level)));
      }
      case Builtin::Eq:
      case Builtin::EqS: {
        bool strict = c.id == Builtin::EqS;
        Sort s;
        TermPtr carrier = infer_equality_carrier(ctx, a[0], s);
        if (!strict && !s.is_fib())
          throw TypeError("INTRO-=",
                          "fibrant equality over '" + show(ctx, carrier) +
                              "', which is only a pretype (" + to_string(s) + "); use '=s'",
                          pos_of(t));
        check(ctx, a[1], carrier);
        use(strict ? "FORM-=s" : "INTRO-=");
        return mk::univ(strict ? Sort::strict(s.level) : Sort::fib(s.level));
      }
      case Builtin::Refl:
      case Builtin::ReflS: {
        bool strict = c.id == Builtin::ReflS;
        Sort s;
        TermPtr carrier = infer_equality_carrier(ctx, a[0], s);
        if (!strict && !s.is_fib())
          throw TypeError("INTRO-=",
                          "refl over '" + show(ctx, carrier) + "', which is only a pretype",
                          pos_of(t));
        use(strict ? "INTRO-=s" : "INTRO-=");
        return mk::cnst(strict ? Builtin::EqS : Builtin::Eq, {a[0], a[0]});
      }
      case Builtin::J:
      case Builtin::Js: return infer_path_induction(ctx, c);
      case Builtin::Uip:
        if (!opts_.enable_uip) throw TypeError("UIP", "uip is disabled", pos_of(t));
        use("UIP");
        return detail::uip_type();
      case Builtin::FunextS:
        if (!opts_.enable_funext) throw TypeError("FUNEXT", "funextS is disabled", pos_of(t));
        use("FUNEXT");
        return detail::funext_type();
      case Builtin::IndNat:
      case Builtin::IndNatS: {
        bool strict = c.id == Builtin::IndNatS;
        TermPtr nat = mk::cnst(strict ? Builtin::NatS : Builtin::Nat);
        Builtin zero = strict ? Builtin::ZeroS : Builtin::Zero;
        Builtin succ = strict ? Builtin::SuccS : Builtin::Succ;
        const char* rule = strict ? "ELIM-Ns" : "ELIM-N";
        require_motive(ctx, a[0], {nat}, strict, rule, info.name);
        check(ctx, a[1], apply(a[0], {mk::cnst(zero)}));
        TermPtr step = mk::pi(
            "m", nat,
            mk::pi("_", apply(shift(a[0], 1), {mk::var(0)}),
                   apply(shift(a[0], 2), {mk::cnst(succ, {mk::var(1)})})));
        check(ctx, a[2], step);
        check(ctx, a[3], nat);
        use(rule);
        return apply(a[0], {a[3]});
      }
      case Builtin::IndEmpty:
      case Builtin::IndEmptyS: {
        bool strict = c.id == Builtin::IndEmptyS;
        TermPtr empty = mk::cnst(strict ? Builtin::EmptyS : Builtin::Empty);
        const char* rule = strict ? "ELIM-0s" : "ELIM-0";
        require_motive(ctx, a[0], {empty}, strict, rule, info.name);
        check(ctx, a[1], empty);
        use(rule);
        return apply(a[0], {a[1]});
      }
      case Builtin::IndSum:
      case Builtin::IndSumS: {
        bool strict = c.id == Builtin::IndSumS;
        const char* rule = strict ? "ELIM-+s" : "ELIM-+";
        TermPtr sty = whnf(infer(ctx, a[3]));
        const auto* s = sty->as<Const>();
        Builtin former = strict ? Builtin::SumS : Builtin::Sum;
        if (s == nullptr || s->id != former || s->args.size() != 2)
          throw TypeError(rule,
                          std::string(info.name) + " eliminates a " + (strict ? "strict" : "fibrant") +
                              " sum, but the scrutinee has type '" + show(ctx, sty) + "'",
                          pos_of(a[3]));
        require_motive(ctx, a[0], {sty}, strict, rule, info.name);
        Builtin inl = strict ? Builtin::InlS : Builtin::Inl;
        Builtin inr = strict ? Builtin::InrS : Builtin::Inr;
        check(ctx, a[1],
              mk::pi("a", s->args[0], apply(shift(a[0], 1), {mk::cnst(inl, {mk::var(0)})})));
        check(ctx, a[2],
              mk::pi("b", s->args[1], apply(shift(a[0], 1), {mk::cnst(inr, {mk::var(0)})})));
        use(rule);
        return apply(a[0], {a[3]});
      }
      case Builtin::IndUnit: {
        TermPtr unit = mk::cnst(Builtin::Unit);
        require_motive(ctx, a[0], {unit}, true, "ELIM-1", info.name);
        check(ctx, a[1], apply(a[0], {mk::cnst(Builtin::Star)}));
        check(ctx, a[2], unit);
        use("ELIM-1");
        return apply(a[0], {a[2]});
      }
      case Builtin::Fst:
      case Builtin::Snd: {
        TermPtr pty = whnf(infer(ctx, a[0]));
        const auto* sg = pty->as<Sigma>();
        if (sg == nullptr)
          throw TypeError("TYPE",
                          std::string(info.name) + " expects a pair, but '" + show(ctx, a[0]) +
                              "' has type '" + show(ctx, pty) + "'",
                          pos_of(a[0]));
        if (c.id == Builtin::Fst) return sg->fst;
        return instantiate(sg->snd, mk::cnst(Builtin::Fst, {a[0]}));
      }
      case Builtin::Pair: {
        TermPtr l = infer(ctx, a[0]);
        TermPtr r = infer(ctx, a[1]);
        return mk::sigma("_", l, shift(r, 1));
      }
    }
    throw TypeError("INFER", "unsupported constant", pos_of(t));
  }

  void require_motive(const Context& ctx, const TermPtr& motive, const std::vector<TermPtr>& doms,
                      bool any_sort, const char* rule, std::string_view elim) {
    Sort s = family_sort(ctx, motive, doms);
    if (!any_sort && !s.is_fib())
      throw TypeError(rule,
                      std::string(elim) + " only eliminates into fibrant types, but the motive '" +
                          show(ctx, motive) + "' lands in " + to_string(s),
                      pos_of(motive));
  }

  TermPtr infer_path_induction(const Context& ctx, const Const& c) {
    bool strict = c.id == Builtin::Js;
    const char* rule = strict ? "ELIM-=s" : "ELIM-=";
    Builtin eq = strict ? Builtin::EqS : Builtin::Eq;
    Builtin refl = strict ? Builtin::ReflS : Builtin::Refl;
    const auto& a = c.args;  // motive, base case, proof
    TermPtr pty = whnf(infer(ctx, a[2]));
    const auto* e = pty->as<Const>();
    if (e == nullptr || e->id != eq || e->args.size() != 2)
      throw TypeError(rule,
                      std::string(builtin_info(c.id).name) + " eliminates a " +
                          (strict ? "strict" : "fibrant") + " equality, but '" + show(ctx, a[2]) +
                          "' has type '" + show(ctx, pty) + "'",
                      pos_of(a[2]));
    TermPtr lhs = e->args[0];
    TermPtr rhs = e->args[1];
    TermPtr carrier = infer(ctx, lhs);
    std::vector<TermPtr> doms{carrier, mk::cnst(eq, {shift(lhs, 1), mk::var(0)})};
    require_motive(ctx, a[0], doms, strict, rule, builtin_info(c.id).name);
    check(ctx, a[1], apply(a[0], {lhs, mk::cnst(refl, {lhs})}));
    use(rule);
    return apply(a[0], {rhs, a[2]});
  }

  const Environment* env_;
  KernelOptions opts_;
  Pos fallback_{};
  mutable std::set<std::string> rules_;
};

}  // namespace tltt
