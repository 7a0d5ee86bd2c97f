#include <gtest/gtest.h>

#include "support.hpp"
#include "tltt/diagram/classifier.hpp"
#include "tltt/diagram/coslice.hpp"
#include "tltt/diagram/exponential.hpp"
#include "tltt/diagram/fixture.hpp"
#include "tltt/diagram/pointed_nerve.hpp"
#include "tltt/diagram/random.hpp"
#include "tltt/lab/experiments.hpp"

using namespace tltt;
using namespace tltt::diagram;

namespace {

json fixture(const std::string& name) {
  return read_json_file((fixtures::kRoot / "fixtures" / (name + ".json")).string());
}

Family push(const SetDiagram& x, const DiagramMap& f, const MatchingObject& m, const Family& fam) {
  Family out;
  for (std::size_t k = 0; k < m.arrows.size(); ++k) out.push_back(f.apply(x.base().arrow(m.arrows[k]).dst, fam[k]));
  return out;
}

}  // namespace

TEST(Limits, CospanFixtureHasFourCones) {
  auto j = fixture("cospan");
  auto x = parse_diagram_values(parse_category(j), j);
  EXPECT_EQ(limit_direct(x).size(), 4u);
  EXPECT_EQ(compare_limits(limit_recursive(x), limit_direct(x)), "");
}

TEST(Limits, EmptyCategoryHasASingletonLimit) {
  SetDiagram x(std::make_shared<FinCat>());
  EXPECT_EQ(limit_direct(x).size(), 1u);
  EXPECT_EQ(limit_recursive(x).size(), 1u);
}

TEST(Limits, EmptyValueAtAMinimalObjectEmptiesTheLimit) {
  auto c = std::make_shared<FinCat>();
  c->add_object("a", 0);
  c->add_object("b", 1);
  SetDiagram x(c, {0, 3}, {{}, {0, 1, 2}});
  EXPECT_TRUE(limit_direct(x).empty());
  EXPECT_EQ(limit_recursive(x).size(), 0u);
}

TEST(Category, RankIncreasingArrowIsNamed) {
  FinCat c;
  auto a = c.add_object("a", 0);
  auto b = c.add_object("b", 1);
  c.add_arrow(a, b, "up");
  c.fill_identity_composites();
  auto v = validate_inverse(c);
  EXPECT_FALSE(v.ok);
  EXPECT_NE(v.witness.find("up"), std::string::npos) << v.witness;
}

TEST(Limits, MinimalObjectHasASingletonMatchingObject) {
  SimplexBase base(2);
  auto x = from_simplicial_subset(base, simplex::full_subfunctor(2));
  EXPECT_EQ(matching_object(x, 0).size(), 1u);
  EXPECT_EQ(matching_object(x, 1).size(), 9u);
}

TEST(Coslice, OfTheTwoSimplexHasSixObjects) {
  SimplexBase base(2);
  auto r = reduced_coslice(*base.cat, 2);
  EXPECT_EQ(r.cat->object_count(), 6u);
  EXPECT_TRUE(forgetful_functoriality(*base.cat, r).ok);
  for (std::size_t p = 0; p < r.cat->object_count(); ++p) {
    std::string why;
    EXPECT_TRUE(coslice_of_coslice_iso(*base.cat, 2, p, &why)) << why;
  }
}

TEST(Exponential, ConstantSingletonSourceGivesTheLimitOfTheTarget) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Rng rng(seed);
    auto cat = random_inverse_category(rng, exponential_bounds());
    auto g = random_diagram(cat, rng, kExponentialMaxValue);
    auto f = constant_diagram(cat, 1);
    auto e = exponential_diagram(f, g);
    auto lim = limit_direct(e.diagram);
    EXPECT_EQ(lim.size(), limit_direct(g).size()) << seed;
    EXPECT_EQ(exponential_limit_bijection(f, e, lim, natural_transformations(f, g)), "") << seed;
  }
}

TEST(Pullback, StableUnderMatchingObjects) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Rng rng(seed);
    auto cat = random_inverse_category(rng, limit_bounds());
    auto z = random_diagram(cat, rng, 3);
    auto [x, f] = random_diagram_over(z, rng);
    auto [y, g] = random_diagram_over(z, rng);
    auto pb = pullback(x, f, y, g);
    ASSERT_TRUE(pb.diagram.functoriality().ok) << seed;
    EXPECT_TRUE(naturality(pb.diagram, x, pb.to_left).ok);
    EXPECT_TRUE(naturality(pb.diagram, y, pb.to_right).ok);
    for (std::size_t o = 0; o < cat->object_count(); ++o) {
      for (std::size_t e = 0; e < pb.diagram.size(o); ++e)
        EXPECT_EQ(f.apply(o, pb.to_left.apply(o, e)), g.apply(o, pb.to_right.apply(o, e)));
      auto mp = matching_object(pb.diagram, o);
      auto mx = matching_object(x, o);
      auto my = matching_object(y, o);
      auto mz = matching_object(z, o);
      std::size_t pairs = 0;
      for (const auto& a : mx.elements)
        for (const auto& b : my.elements) pairs += push(x, f, mz, a) == push(y, g, mz, b);
      EXPECT_EQ(mp.size(), pairs) << "seed " << seed << " object " << o;
    }
  }
}

TEST(PointedNerve, SingletonUniverseCountsOne) {
  for (const auto& r : pointed_nerve_counts({1}, 3)) {
    EXPECT_EQ(r.count_a, 1u);
    EXPECT_EQ(r.count_b, 1u);
    EXPECT_TRUE(r.ok());
  }
}

TEST(Classifier, TruncationZeroInterpretsAsTheEmptyDiagram) {
  auto base = constant_diagram(lab::classifier_base(0), 1);
  auto els = classifier_build(base, 0, 2);
  ASSERT_EQ(els.size(), 1u);
  auto in = interpret(base, els.front());
  EXPECT_EQ(in.diagram.base().object_count(), 0u);
  EXPECT_TRUE(round_trip(base, els.front()).ok());
}

TEST(Classifier, LargerBaseMultipliesSlots) {
  auto base = constant_diagram(lab::classifier_base(1), 2);
  EXPECT_EQ(classifier_build(base, 1, 1).size(), 4u);
}

TEST(Nerve, SegalFailsOnTheDoctoredFixture) {
  auto x = parse_simplicial_source(fixture("non_segal"), 2);
  EXPECT_TRUE(segal_check(x, 1).ok());
  EXPECT_FALSE(segal_check(x, 2).ok());
}
