#include <gtest/gtest.h>

#include "support.hpp"
#include "tltt/syntax/printer.hpp"

using namespace tltt;

TEST(Lexer, ReadsExpectAnnotations) {
  auto r = syntax::lex("--! expect: ELIM-=\nfail zero : Nat\n");
  ASSERT_FALSE(r.tokens.empty());
  ASSERT_EQ(r.expectations.size(), 1u);
  EXPECT_EQ(r.expectations.front().rule, "ELIM-=");
}

TEST(Parser, ReportsPositionOfSyntaxErrors) {
  try {
    syntax::parse("def x : Nat :=\n  (zero");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.rule(), "SYNTAX");
    EXPECT_EQ(e.pos().line, 2);
  }
}

TEST(Resolver, LocalsShadowGlobalsAndBuiltins) {
  Resolver r({"isSet"});
  auto t = r.term(syntax::parse_term("fun (isSet : U 0) (Nat : U 0) => isSet"));
  const auto* outer = t->as<Lam>();
  ASSERT_NE(outer, nullptr);
  const auto* inner = outer->body->as<Lam>();
  ASSERT_NE(inner, nullptr);
  const auto* v = inner->body->as<Var>();
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->index, 1u);

  auto g = r.term(syntax::parse_term("isSet"));
  EXPECT_NE(g->as<Global>(), nullptr);
  EXPECT_THROW(r.term(syntax::parse_term("unknownName")), ScopeError);
}

TEST(Printer, RoundTripsEveryCorpusDeclaration) {
  std::set<std::string> globals;
  std::size_t terms = 0;
  for (const auto& path : fixtures::corpus_files()) {
    auto text = corpus::read_file(path);
    ASSERT_TRUE(text) << path;
    auto module = syntax::parse(*text);
    Resolver resolver(globals);
    std::set<std::string> visible = globals;
    for (const auto& d : module.decls) {
      if (d.expect == "SCOPE") continue;
      auto core = resolver.decl(d);
      for (const TermPtr& t : std::vector<TermPtr>{core.type, core.value}) {
        if (!t) continue;
        std::string shown = print(t);
        Resolver again(visible);
        auto back = again.term(syntax::parse_term(shown));
        EXPECT_TRUE(alpha_equal(t, back)) << path << ": " << shown;
        ++terms;
      }
      if (!d.name.empty()) {
        resolver.add_global(d.name);
        visible.insert(d.name);
        if (path.parent_path().filename() == "prelude") globals.insert(d.name);
      }
    }
  }
  EXPECT_GT(terms, 100u);
}

TEST(Printer, RenamesBindersThatWouldCapture) {
  Resolver r({"x"});
  auto t = r.term(syntax::parse_term("fun (y : Nat) => x"));
  auto shown = print(mk::lam("x", mk::cnst(Builtin::Nat), t->as<Lam>()->body));
  Resolver again({"x"});
  auto back = again.term(syntax::parse_term(shown));
  EXPECT_NE(back->as<Lam>()->body->as<Global>(), nullptr) << shown;
}
