#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tltt/core/error.hpp"
#include "tltt/core/term.hpp"

namespace tltt::surface {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Name { std::string name; };
struct Universe { Sort sort; };
/// One binder per node; multi-binder groups are split by the parser.
struct Pi { std::string name; TermPtr dom; TermPtr cod; };
struct Sigma { std::string name; TermPtr fst; TermPtr snd; };
struct Lam { std::string name; TermPtr dom; /* may be null */ TermPtr body; };
struct App { TermPtr fn; TermPtr arg; };
struct Infix { Builtin op; TermPtr lhs; TermPtr rhs; };
struct Ann { TermPtr term; TermPtr type; };

struct Term {
  std::variant<Name, Universe, Pi, Sigma, Lam, App, Infix, Ann> node;
  Pos pos;

  template <class T>
  const T* as() const { return std::get_if<T>(&node); }
};

inline TermPtr make(auto node, Pos pos) {
  return std::make_shared<const Term>(Term{std::move(node), pos});
}

enum class DeclKind { Def, Axiom, Check, Fail };

inline const char* to_string(DeclKind k) {
  switch (k) {
    case DeclKind::Def: return "def";
    case DeclKind::Axiom: return "axiom";
    case DeclKind::Check: return "check";
    case DeclKind::Fail: return "fail";
  }
  return "?";
}

struct Decl {
  DeclKind kind;
  std::string name;  // empty for check/fail
  TermPtr type;      // null only for an unannotated def
  TermPtr value;     // null for axiom
  Pos pos;
  std::optional<std::string> expect;  // `--! expect: RULE`, fail only
};

struct Module {
  std::vector<Decl> decls;
};

}  // namespace tltt::surface
