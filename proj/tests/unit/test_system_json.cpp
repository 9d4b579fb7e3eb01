#include <gtest/gtest.h>

#include "oracles.hpp"

namespace rotinv {
namespace {

TEST(SystemJson, LoadsExampleFile) {
  const auto s = load_system(std::string(ROTINV_TEST_DATA_DIR) + "/vector_potential.json");
  EXPECT_EQ(s.dimension(), 4);
  EXPECT_EQ(s.metric().to_string(), "+---");
  ASSERT_NE(s.find_vector("A"), nullptr);
  ASSERT_NE(s.find_tensor("B"), nullptr);
  EXPECT_EQ(s.find_tensor("L")->symmetry, TensorSymmetry::Antisymmetric);
  EXPECT_EQ(flatten(s).size(), 20);
}

TEST(SystemJson, MetricDefaultsToEuclidean) {
  const auto s = parse_system(R"({"dimension": 3, "vectors": {"u": [1, 2, 3]}})");
  EXPECT_TRUE(s.metric().is_euclidean());
  EXPECT_EQ(s.metric().dimension(), 3);
}

TEST(SystemJson, KeepsDocumentOrder) {
  const auto s = parse_system(R"({"dimension": 2, "vectors": {"z": [1, 0], "a": [0, 1]}})");
  EXPECT_EQ(s.vectors()[0].first, "z");
  EXPECT_EQ(s.vectors()[1].first, "a");
}

TEST(SystemJson, RoundTrip) {
  const auto s = random_system(SystemSpec::make(4, MetricSignature::minkowski(4), 2, 1, 1, 1), 8);
  const auto back = system_from_json(nlohmann::ordered_json::parse(system_to_json(s).dump()));
  EXPECT_EQ(flatten(back), flatten(s));
  EXPECT_EQ(back.metric(), s.metric());
}

TEST(SystemJson, Errors) {
  EXPECT_THROW(parse_system("{"), ParseError);
  EXPECT_THROW(parse_system(R"({"vectors": {}})"), ParseError);
  EXPECT_THROW(parse_system(R"({"dimension": 2, "metric": [1, 2]})"), ParseError);
  EXPECT_THROW(parse_system(R"({"dimension": 2, "vectors": {"u": [1, "x"]}})"), ParseError);
  EXPECT_THROW(parse_system(R"({"dimension": 2, "vectors": {"u": [1, 2, 3]}})"), DimensionError);
  EXPECT_THROW(parse_system(R"({"dimension": 2, "tensors": {"W": {"symmetry": "symmetric",
               "components": [[1, 2], [3, 4]]}}})"),
               StructureError);
  EXPECT_THROW(parse_system(R"({"dimension": 2, "tensors": {"W": {"symmetry": "skew",
               "components": [[1, 2], [2, 4]]}}})"),
               ParseError);
  EXPECT_THROW(load_system("/nonexistent/file.json"), ParseError);
}

}  // namespace
}  // namespace rotinv
