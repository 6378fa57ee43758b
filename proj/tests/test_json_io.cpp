#include <gtest/gtest.h>

#include "ngtrace/json_io.hpp"

using namespace ngtrace;

TEST(JsonIo, SemigroupRoundTrip) {
  NumericalSemigroup h({10, 7, 9, 8});
  auto j = to_json(h);
  EXPECT_EQ(j.dump(), R"({"generators":[7,8,9,10]})");
  EXPECT_EQ(semigroup_from_json(parse_json_text(j.dump())), h);
}

TEST(JsonIo, RelativeIdealRoundTrip) {
  auto h = std::make_shared<const NumericalSemigroup>(std::vector<Int>{3, 4, 5});
  auto e = RelativeIdeal::from_generators(h, {-2, 0, 7});
  auto back = relative_ideal_from_json(parse_json_text(to_json(e).dump()));
  EXPECT_EQ(back, e);
  EXPECT_EQ(back.generators(), (std::vector<Int>{-2, 0}));
}

TEST(JsonIo, InstanceRoundTrip) {
  auto j = parse_json_text(R"({"generators":[7,8,9,10],"order":[7,8,9,10],"m":[3,1,1,1],"ell":[1,1,1,2]})");
  auto inst = instance_from_json(j);
  EXPECT_EQ(to_json(inst), j);
  EXPECT_EQ(instance_from_json(to_json(inst)), inst);
  for (const auto& found : search_instances({1, 2, 1, 1}, {2, 1, 1, 3}, 500))
    EXPECT_EQ(instance_from_json(parse_json_text(to_json(found).dump())), found);
}

TEST(JsonIo, HigherRoundTrip) {
  auto j = parse_json_text(
      R"({"generators":[7,8,9,10],"order":[7,8,9,10],"m":[3,1,1,1],"ell":[1,1,1,2],"I":[1],"J":[3]})");
  auto hd = higher_from_json(j);
  EXPECT_EQ(hd.I(), (std::set<std::size_t>{1}));
  EXPECT_EQ(to_json(hd), j);
  EXPECT_EQ(higher_from_json(to_json(hd)), hd);
}

TEST(JsonIo, MatrixRoundTrip) {
  auto inst = search_instances({2, 1, 1}, {1, 1, 1}, 500).at(0);
  auto ring = inst.ring();
  auto mat = inst.matrix(ring);
  EXPECT_EQ(matrix_from_json(ring, parse_json_text(to_json(mat).dump())), mat);
}

TEST(JsonIo, Errors) {
  EXPECT_THROW(parse_json_text("{"), InvalidInput);
  EXPECT_THROW(semigroup_from_json(parse_json_text(R"({"gens":[3,4]})")), InvalidInput);
  EXPECT_THROW(semigroup_from_json(parse_json_text(R"({"generators":[3,"4"]})")), InvalidInput);
  EXPECT_THROW(semigroup_from_json(parse_json_text(R"({"generators":[4,6]})")), GcdNotOne);
  EXPECT_THROW(higher_from_json(parse_json_text(
                   R"({"order":[7,8,9,10],"m":[3,1,1,1],"ell":[1,1,1,2],"I":[0]})")),
               InvalidInput);
  EXPECT_THROW(instance_from_json(parse_json_text(
                   R"({"order":[7,8,9,10],"m":[1,1,1,1],"ell":[1,1,1,2]})")),
               InhomogeneousMatrix);
}
