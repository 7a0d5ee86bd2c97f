#include <gtest/gtest.h>

#include "tltt/diagram/fixture.hpp"

using namespace tltt::diagram;
using nlohmann::json;

TEST(Fixture, MissingFileIsReported) {
  EXPECT_THROW(read_json_file("/no/such/fixture.json"), FixtureError);
}

TEST(Fixture, UnknownObjectInHomIsRejected) {
  auto j = json::parse(R"({"objects": [{"id": "a", "rank": 0}],
                           "homs": [{"src": "a", "dst": "b", "arrows": ["f"]}]})");
  EXPECT_THROW(parse_category(j), FixtureError);
}

TEST(Fixture, NonFunctorialValuesAreRejected) {
  auto j = json::parse(R"({"objects": [{"id": "a", "rank": 1}, {"id": "b", "rank": 0}],
                           "homs": [{"src": "a", "dst": "b", "arrows": ["f"]}]})");
  auto c = parse_category(j);
  auto v = json::parse(R"({"values": {"a": 2, "b": 1}, "function": {"f": [0, 3]}})");
  EXPECT_ANY_THROW(parse_diagram_values(c, v));
}

TEST(Fixture, SemiSimplicialIdentitiesAreChecked) {
  auto j = json::parse(R"({"semi_simplicial": {"sizes": [2, 1], "faces": [[], [[0], [1]]]}})");
  EXPECT_NO_THROW(parse_simplicial_source(j, 1));
  auto bad = json::parse(R"({"semi_simplicial": {"sizes": [2, 1], "faces": [[], [[0], [2]]]}})");
  EXPECT_ANY_THROW(parse_simplicial_source(bad, 1));
}
