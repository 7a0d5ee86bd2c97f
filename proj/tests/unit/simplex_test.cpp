#include <gtest/gtest.h>

#include "support.hpp"
#include "tltt/diagram/fixture.hpp"
#include "tltt/simplex/horn_factor.hpp"
#include "tltt/simplex/nat_trans.hpp"
#include "tltt/simplex/sieve.hpp"

using namespace tltt;
using namespace tltt::simplex;

TEST(Sieve, SpineHasVerticesEdgesAndTheEmptyFace) {
  for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(Sieve::spine(n).size(), 1 + (n + 1) + n) << n;
  EXPECT_EQ(Sieve::powerset(3).size(), 16u);
}

TEST(Sieve, RejectsFamiliesThatAreNotDownwardClosed) {
  EXPECT_THROW(Sieve(2, {0, mask_of({0, 1})}), std::invalid_argument);
}

TEST(Sieve, HornRemovalTakesAMaximalMemberAndOneFace) {
  Sieve full = Sieve::powerset(2);
  Sieve after = horn_remove(full, full_mask(2), 1);
  EXPECT_EQ(after.size(), full.size() - 2);
  EXPECT_FALSE(after.contains(mask_of({0, 2})));
  EXPECT_TRUE(after.is_downward_closed());
}

TEST(HornFactor, EveryDefinedCaseAuditsCleanly) {
  for (unsigned n = 2; n <= 7; ++n)
    for (unsigned k = 0; k <= n; ++k) {
      if (!horn_factor_defined(n, k)) continue;
      auto h = factor_spine_to_horn(n, k);
      EXPECT_EQ(audit(h), "") << n << "," << k;
      EXPECT_EQ(h.end().members(), Sieve::spine(n).members()) << n << "," << k;
      EXPECT_EQ(h.cells_removed(), 2 * h.steps.size());
      EXPECT_EQ(h.steps.size(), (std::size_t{1} << n) - n - 2) << n << "," << k;
    }
}

TEST(HornFactor, InnerHornsUseOnlyInnerSteps) {
  for (unsigned n = 3; n <= 6; ++n)
    for (unsigned k = 1; k < n; ++k)
      for (const auto& s : factor_spine_to_horn(n, k).steps) EXPECT_TRUE(s.inner) << n << "," << k;
}

TEST(HornFactor, UndefinedWhereTheHornMissesASpineEdge) {
  EXPECT_FALSE(horn_factor_defined(1, 0));
  EXPECT_FALSE(horn_factor_defined(1, 1));
  EXPECT_FALSE(horn_factor_defined(2, 0));
  EXPECT_FALSE(horn_factor_defined(2, 2));
  EXPECT_TRUE(horn_factor_defined(2, 1));
  EXPECT_TRUE(horn_factor_defined(3, 0));
}

TEST(Yoneda, SimplicesOfAFixtureMatchNaturalTransformations) {
  auto x = diagram::parse_simplicial_source(
      diagram::read_json_file((fixtures::kRoot / "fixtures" / "simplex3.json").string()), 3);
  for (unsigned n = 0; n <= 3; ++n) {
    auto nat = nat_transforms(full_subfunctor(n), x);
    EXPECT_EQ(nat.families.size(), x.size(n));
    std::string why;
    EXPECT_TRUE(yoneda_bijection_holds(n, x, nat, &why)) << why;
  }
}

TEST(Subfunctors, BoundaryAndHornAreClosed) {
  for (unsigned n = 1; n <= 5; ++n) {
    EXPECT_TRUE(boundary_subfunctor(n).is_closed());
    EXPECT_TRUE(spine_subfunctor(n).subset_of(boundary_subfunctor(n)) || n == 1);
    for (unsigned j = 0; j <= n; ++j) EXPECT_TRUE(horn_subfunctor(n, j).subset_of(boundary_subfunctor(n)));
  }
}
