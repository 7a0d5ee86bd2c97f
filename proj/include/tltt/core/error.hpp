#pragma once

#include <stdexcept>
#include <string>

namespace tltt {

/// Source position, 1-based. A zero line means "unknown".
struct Pos {
  int line = 0;
  int col = 0;
};

inline std::string to_string(Pos p) {
  return std::to_string(p.line) + ":" + std::to_string(p.col);
}

/// Base class for every diagnostic raised by the front end and the kernel.
/// `rule()` names the typing rule (or phase) that rejected the input.
class Error : public std::runtime_error {
 public:
  Error(std::string rule, std::string message, Pos pos)
      : std::runtime_error(message), rule_(std::move(rule)), pos_(pos) {}

  const std::string& rule() const noexcept { return rule_; }
  Pos pos() const noexcept { return pos_; }

 private:
  std::string rule_;
  Pos pos_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::string message, Pos pos) : Error("SYNTAX", std::move(message), pos) {}
};

class ScopeError : public Error {
 public:
  ScopeError(std::string message, Pos pos) : Error("SCOPE", std::move(message), pos) {}
};

class TypeError : public Error {
 public:
  using Error::Error;
};

/// Formats `FILE:LINE:COL: [RULE] message`.
inline std::string format_diagnostic(const std::string& file, const Error& e) {
  return file + ":" + to_string(e.pos()) + ": [" + e.rule() + "] " + e.what();
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace tltt
