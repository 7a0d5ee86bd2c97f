#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "tltt/core/error.hpp"

namespace tltt::syntax {

enum class Tok {
  Name, Nat,
  KwDef, KwAxiom, KwCheck, KwFail, KwPi, KwSig, KwFun, KwU, KwUs,
  LParen, RParen, Colon, Comma, Define, FatArrow, Arrow,
  Eq, EqS, Plus, PlusS,
  End,
};

inline const char* describe(Tok t) {
  switch (t) {
    case Tok::Name: return "name";
    case Tok::Nat: return "number";
    case Tok::KwDef: return "'def'";
    case Tok::KwAxiom: return "'axiom'";
    case Tok::KwCheck: return "'check'";
    case Tok::KwFail: return "'fail'";
    case Tok::KwPi: return "'Pi'";
    case Tok::KwSig: return "'Sig'";
    case Tok::KwFun: return "'fun'";
    case Tok::KwU: return "'U'";
    case Tok::KwUs: return "'Us'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Colon: return "':'";
    case Tok::Comma: return "','";
    case Tok::Define: return "':='";
    case Tok::FatArrow: return "'=>'";
    case Tok::Arrow: return "'->'";
    case Tok::Eq: return "'='";
    case Tok::EqS: return "'=s'";
    case Tok::Plus: return "'+'";
    case Tok::PlusS: return "'+s'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  Pos pos;
};

/// A `--! expect: RULE` comment and where it appeared.
struct ExpectAnnotation {
  std::string rule;
  Pos pos;
};

struct LexResult {
  std::vector<Token> tokens;
  std::vector<ExpectAnnotation> expectations;
};

inline constexpr std::string_view kKeywords[] = {"def", "axiom", "check", "fail", "Pi",
                                                 "Sig", "fun", "U",     "Us"};

inline bool is_keyword(std::string_view s) {
  for (auto k : kKeywords)
    if (k == s) return true;
  return false;
}

inline bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  LexResult run() {
    LexResult out;
    for (;;) {
      skip_space_and_comments(out.expectations);
      Pos start{line_, col_};
      if (at_end()) {
        out.tokens.push_back({Tok::End, "", start});
        return out;
      }
      out.tokens.push_back(next_token(start));
    }
  }

 private:
  bool at_end() const { return i_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0';
  }
  void advance() {
    if (src_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip_space_and_comments(std::vector<ExpectAnnotation>& expects) {
    while (!at_end()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '-' && peek(1) == '-') {
        Pos start{line_, col_};
        std::string body;
        while (!at_end() && peek() != '\n') {
          body.push_back(peek());
          advance();
        }
        read_annotation(body, start, expects);
      } else {
        return;
      }
    }
  }

  static void read_annotation(std::string_view comment, Pos pos,
                              std::vector<ExpectAnnotation>& expects) {
    constexpr std::string_view prefix = "--!";
    if (comment.substr(0, prefix.size()) != prefix) return;
    auto rest = comment.substr(prefix.size());
    auto key = rest.find("expect:");
    if (key == std::string_view::npos) throw SyntaxError("malformed annotation, expected 'expect: RULE'", pos);
    auto rule = rest.substr(key + 7);
    while (!rule.empty() && std::isspace(static_cast<unsigned char>(rule.front()))) rule.remove_prefix(1);
    while (!rule.empty() && std::isspace(static_cast<unsigned char>(rule.back()))) rule.remove_suffix(1);
    if (rule.empty()) throw SyntaxError("annotation names no rule", pos);
    expects.push_back({std::string(rule), pos});
  }

  Token next_token(Pos start) {
    char c = peek();
    if (is_ident_start(c)) {
      std::string word;
      while (!at_end() && is_ident_char(peek())) {
        word.push_back(peek());
        advance();
      }
      return {keyword_kind(word), word, start};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        digits.push_back(peek());
        advance();
      }
      return {Tok::Nat, digits, start};
    }
    auto single = [&](Tok k) {
      std::string text(1, c);
      advance();
      return Token{k, text, start};
    };
    auto with_s = [&](Tok plain, Tok strict) {
      std::string text(1, c);
      advance();
      if (peek() == 's' && !is_ident_char(peek(1))) {
        advance();
        return Token{strict, text + "s", start};
      }
      return Token{plain, text, start};
    };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case ',': return single(Tok::Comma);
      case ':':
        advance();
        if (peek() == '=') {
          advance();
          return {Tok::Define, ":=", start};
        }
        return {Tok::Colon, ":", start};
      case '=':
        if (peek(1) == '>') {
          advance();
          advance();
          return {Tok::FatArrow, "=>", start};
        }
        return with_s(Tok::Eq, Tok::EqS);
      case '+': return with_s(Tok::Plus, Tok::PlusS);
      case '-':
        if (peek(1) == '>') {
          advance();
          advance();
          return {Tok::Arrow, "->", start};
        }
        break;
      default: break;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", start);
  }

  static Tok keyword_kind(std::string_view w) {
    if (w == "def") return Tok::KwDef;
    if (w == "axiom") return Tok::KwAxiom;
    if (w == "check") return Tok::KwCheck;
    if (w == "fail") return Tok::KwFail;
    if (w == "Pi") return Tok::KwPi;
    if (w == "Sig") return Tok::KwSig;
    if (w == "fun") return Tok::KwFun;
    if (w == "U") return Tok::KwU;
    if (w == "Us") return Tok::KwUs;
    return Tok::Name;
  }

  std::string_view src_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

inline LexResult lex(std::string_view src) { return Lexer(src).run(); }

}  // namespace tltt::syntax
