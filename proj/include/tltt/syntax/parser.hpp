#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tltt/syntax/lexer.hpp"
#include "tltt/syntax/surface.hpp"

namespace tltt::syntax {

/// Recursive-descent parser for `.tltt` modules.
///
/// Precedence, loosest first: binder forms (`Pi`, `Sig`, `fun`, extending as
/// far right as possible), `->` (right associative), `=` / `=s` (non
/// associative), `+` / `+s` (left associative), application, atoms.
class Parser {
 public:
  explicit Parser(LexResult lexed)
      : toks_(std::move(lexed.tokens)), expects_(std::move(lexed.expectations)) {}

  surface::Module module() {
    surface::Module m;
    while (peek().kind != Tok::End) m.decls.push_back(decl());
    attach_expectations(m);
    return m;
  }

  surface::TermPtr single_term() {
    auto t = term();
    expect(Tok::End);
    return t;
  }

 private:
  using TermPtr = surface::TermPtr;

  const Token& peek() const { return toks_[i_]; }
  const Token& take() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    take();
    return true;
  }

  [[noreturn]] void fail_expected(std::initializer_list<Tok> wanted) const {
    std::string msg = "expected ";
    if (wanted.size() > 1) msg += "one of {";
    bool first = true;
    for (Tok t : wanted) {
      if (!first) msg += ", ";
      msg += describe(t);
      first = false;
    }
    if (wanted.size() > 1) msg += "}";
    msg += " but found ";
    msg += peek().kind == Tok::End ? std::string("end of input") : "'" + peek().text + "'";
    throw SyntaxError(msg, peek().pos);
  }

  const Token& expect(Tok k) {
    if (peek().kind != k) fail_expected({k});
    return take();
  }

  surface::Decl decl() {
    const Token& head = peek();
    Pos pos = head.pos;
    surface::Decl d{};
    d.pos = pos;
    switch (head.kind) {
      case Tok::KwDef:
        take();
        d.kind = surface::DeclKind::Def;
        d.name = expect(Tok::Name).text;
        if (accept(Tok::Colon)) d.type = term();
        expect(Tok::Define);
        d.value = term();
        return d;
      case Tok::KwAxiom:
        take();
        d.kind = surface::DeclKind::Axiom;
        d.name = expect(Tok::Name).text;
        expect(Tok::Colon);
        d.type = term();
        return d;
      case Tok::KwCheck:
      case Tok::KwFail:
        take();
        d.kind = head.kind == Tok::KwCheck ? surface::DeclKind::Check : surface::DeclKind::Fail;
        d.value = term();
        expect(Tok::Colon);
        d.type = term();
        return d;
      default:
        fail_expected({Tok::KwDef, Tok::KwAxiom, Tok::KwCheck, Tok::KwFail});
    }
  }

  void attach_expectations(surface::Module& m) const {
    auto before = [](Pos a, Pos b) {
      return a.line < b.line || (a.line == b.line && a.col < b.col);
    };
    for (const auto& e : expects_) {
      surface::Decl* target = nullptr;
      for (auto& d : m.decls)
        if (before(e.pos, d.pos)) {
          target = &d;
          break;
        }
      if (target == nullptr || target->kind != surface::DeclKind::Fail)
        throw SyntaxError("expect annotation must precede a fail declaration", e.pos);
      if (target->expect) throw SyntaxError("fail declaration has two expect annotations", e.pos);
      target->expect = e.rule;
    }
  }

  TermPtr term() {
    switch (peek().kind) {
      case Tok::KwPi:
      case Tok::KwSig: return quantifier();
      case Tok::KwFun: return lambda();
      default: return arrow();
    }
  }

  std::vector<std::pair<std::string, Pos>> names_until_colon() {
    std::vector<std::pair<std::string, Pos>> names;
    while (peek().kind == Tok::Name) {
      names.emplace_back(peek().text, peek().pos);
      take();
    }
    if (names.empty()) fail_expected({Tok::Name});
    expect(Tok::Colon);
    return names;
  }

  struct Binder {
    std::string name;
    TermPtr type;
    Pos pos;
  };

  void typed_group(std::vector<Binder>& out) {
    expect(Tok::LParen);
    auto names = names_until_colon();
    TermPtr ty = term();
    expect(Tok::RParen);
    for (auto& [n, p] : names) out.push_back({n, ty, p});
  }

  TermPtr quantifier() {
    const Token& kw = take();
    bool is_pi = kw.kind == Tok::KwPi;
    std::vector<Binder> binders;
    if (peek().kind != Tok::LParen) fail_expected({Tok::LParen});
    while (peek().kind == Tok::LParen) typed_group(binders);
    expect(Tok::Comma);
    TermPtr body = term();
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
      Pos p = it + 1 == binders.rend() ? kw.pos : it->pos;
      body = is_pi ? surface::make(surface::Pi{it->name, it->type, body}, p)
                   : surface::make(surface::Sigma{it->name, it->type, body}, p);
    }
    return body;
  }

  TermPtr lambda() {
    Pos kw = take().pos;
    std::vector<Binder> binders;
    for (;;) {
      if (peek().kind == Tok::Name) {
        binders.push_back({peek().text, nullptr, peek().pos});
        take();
      } else if (peek().kind == Tok::LParen) {
        typed_group(binders);
      } else {
        break;
      }
    }
    if (binders.empty()) fail_expected({Tok::Name, Tok::LParen});
    expect(Tok::FatArrow);
    TermPtr body = term();
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
      Pos p = it + 1 == binders.rend() ? kw : it->pos;
      body = surface::make(surface::Lam{it->name, it->type, body}, p);
    }
    return body;
  }

  TermPtr arrow() {
    TermPtr lhs = equality();
    if (peek().kind != Tok::Arrow) return lhs;
    take();
    TermPtr rhs = term();
    return surface::make(surface::Pi{"_", lhs, rhs}, lhs->pos);
  }

  TermPtr equality() {
    TermPtr lhs = sum();
    if (peek().kind != Tok::Eq && peek().kind != Tok::EqS) return lhs;
    Builtin op = take().kind == Tok::Eq ? Builtin::Eq : Builtin::EqS;
    TermPtr rhs = sum();
    if (peek().kind == Tok::Eq || peek().kind == Tok::EqS)
      throw SyntaxError("equality is not associative; add parentheses", peek().pos);
    return surface::make(surface::Infix{op, lhs, rhs}, lhs->pos);
  }

  TermPtr sum() {
    TermPtr lhs = application();
    while (peek().kind == Tok::Plus || peek().kind == Tok::PlusS) {
      Builtin op = take().kind == Tok::Plus ? Builtin::Sum : Builtin::SumS;
      TermPtr rhs = application();
      lhs = surface::make(surface::Infix{op, lhs, rhs}, lhs->pos);
    }
    return lhs;
  }

  bool starts_atom() const {
    switch (peek().kind) {
      case Tok::Name:
      case Tok::LParen:
      case Tok::KwU:
      case Tok::KwUs: return true;
      default: return false;
    }
  }

  TermPtr application() {
    TermPtr fn = atom();
    while (starts_atom()) {
      TermPtr arg = atom();
      fn = surface::make(surface::App{fn, arg}, fn->pos);
    }
    return fn;
  }

  TermPtr atom() {
    const Token& t = peek();
    Pos pos = t.pos;
    switch (t.kind) {
      case Tok::Name: {
        std::string name = take().text;
        return surface::make(surface::Name{std::move(name)}, pos);
      }
      case Tok::KwU:
      case Tok::KwUs: {
        bool fib = take().kind == Tok::KwU;
        const Token& n = expect(Tok::Nat);
        unsigned level = 0;
        try {
          level = static_cast<unsigned>(std::stoul(n.text));
        } catch (const std::exception&) {
          throw SyntaxError("universe level out of range", n.pos);
        }
        return surface::make(surface::Universe{fib ? Sort::fib(level) : Sort::strict(level)}, pos);
      }
      case Tok::LParen: {
        take();
        TermPtr inner = term();
        if (accept(Tok::Colon)) {
          TermPtr ty = term();
          expect(Tok::RParen);
          return surface::make(surface::Ann{inner, ty}, pos);
        }
        expect(Tok::RParen);
        return inner;
      }
      default: fail_expected({Tok::Name, Tok::LParen, Tok::KwU, Tok::KwUs});
    }
  }

  std::vector<Token> toks_;
  std::vector<ExpectAnnotation> expects_;
  std::size_t i_ = 0;
};

inline surface::Module parse(std::string_view source) { return Parser(lex(source)).module(); }

inline surface::TermPtr parse_term(std::string_view source) {
  return Parser(lex(source)).single_term();
}

}  // namespace tltt::syntax
