#include <gtest/gtest.h>

#include "support.hpp"

using namespace tltt;
using tltt::fixtures::check_text;

namespace {

bool passes(const std::string& source, KernelOptions opts = {}) {
  auto r = check_text(source, opts);
  return r.ok() && !r.decls.empty() && r.decls.back().status == DeclStatus::Passed;
}

std::string rejection_rule(const std::string& source) {
  auto r = check_text("fail " + source);
  if (!r.ok() || r.decls.empty() || r.decls.back().status != DeclStatus::Rejected) return "<accepted>";
  return r.decls.back().rule;
}

}  // namespace

TEST(Corpus, ChecksCleanlyWithFullCoverage) {
  auto report = corpus::run_directory(fixtures::kRoot);
  EXPECT_TRUE(report.files_ok());
  EXPECT_TRUE(report.coverage_gaps().empty());
}

TEST(KernelMutation, NatComputationIsNeededByThePassCorpus) {
  KernelOptions o;
  o.iota_nat_s = false;
  EXPECT_FALSE(corpus::run_directory(fixtures::kRoot, o).files_ok());
}

TEST(KernelMutation, PathComputationIsNeededByThePrelude) {
  KernelOptions o;
  o.beta_j = false;
  EXPECT_FALSE(corpus::run_directory(fixtures::kRoot, o).files_ok());
}

TEST(KernelMutation, StrictPathComputationDrivesConversion) {
  const std::string src = "check fun (A : Us 0) (a : A) => reflS a : Pi (A : Us 0)(a : A), "
                          "Js (fun (y : A) (_ : a =s y) => A) a (reflS a) =s a";
  EXPECT_TRUE(passes(src));
  KernelOptions o;
  o.beta_js = false;
  EXPECT_FALSE(passes(src, o));
}

TEST(Eliminators, FibrantJRejectsStrictMotives) {
  EXPECT_EQ(rejection_rule("fun A a b p => J (fun y _ => a =s y) (reflS a) p : "
                           "Pi (A : U 0)(a b : A), a = b -> a =s b"),
            "ELIM-=");
  EXPECT_TRUE(passes("check fun A a b p => Js (fun y _ => a =s y) (reflS a) p : "
                     "Pi (A : Us 0)(a b : A), a =s b -> a =s b"));
}

TEST(Eliminators, StrictJReachesFibrantMotivesOnlyOverStrictEquality) {
  EXPECT_TRUE(passes("check fun A a b p => Js (fun y _ => a = y) (refl a) p : "
                     "Pi (A : U 0)(a b : A), a =s b -> a = b"));
  EXPECT_EQ(rejection_rule("fun A a b p => Js (fun y _ => a = y) (refl a) p : "
                           "Pi (A : U 0)(a b : A), a = b -> a = b"),
            "ELIM-=s");
}

TEST(Uip, IsAPostulateNotAConversion) {
  EXPECT_TRUE(passes("check fun A a b p q => uip A a b p q : "
                     "Pi (A : Us 0)(a b : A)(p q : a =s b), p =s q"));
  EXPECT_EQ(rejection_rule("fun A a b p q => reflS p : Pi (A : Us 0)(a b : A)(p q : a =s b), p =s q"), "CONV");
  KernelOptions o;
  o.enable_uip = false;
  EXPECT_FALSE(passes("check fun A a b p q => uip A a b p q : "
                      "Pi (A : Us 0)(a b : A)(p q : a =s b), p =s q",
                      o));
}

TEST(Fibrancy, StrictTypesAreNotFibrant) {
  EXPECT_EQ(rejection_rule("NatS : U 0"), "FIB-PRE");
  EXPECT_TRUE(passes("check Nat : Us 0"));
}

TEST(Reduction, WhnfPreservesTypes) {
  // Subject reduction on every accepted corpus definition with a value.
  Environment env;
  std::size_t checked = 0;
  for (const auto& f : corpus::tltt_files(fixtures::kRoot / "prelude")) {
    auto m = corpus::check_file(f, env, {});
    ASSERT_TRUE(m.ok()) << f;
    env = m.env;
  }
  Kernel k(env);
  for (const auto& name : env.names()) {
    const GlobalEntry* e = env.find(name);
    if (!e->value) continue;
    TermPtr reduced = k.whnf(e->value);
    EXPECT_NO_THROW(k.check(Context{}, reduced, e->type)) << name;
    ++checked;
  }
  EXPECT_GT(checked, 20u);
}

TEST(Reduction, NatRecursionComputes) {
  EXPECT_TRUE(passes("def add : Nat -> Nat -> Nat := fun m n => indNat (fun _ => Nat) n (fun _ k => succ k) m\n"
                     "check refl (succ (succ zero)) : add (succ zero) (succ zero) = succ (succ zero)"));
}
