#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

namespace rotinv {
namespace {

TEST(Theorem1, EmissionOrderAtN2) {
  std::vector<std::string> got;
  for (const auto& e : theorem1_basis(2)) got.push_back(render(e));
  const std::vector<std::string> expected = {
      "tr(W1)", "tr(W1^2)", "tr(W2)", "tr(W2^2)", "tr(W1 W2)",
      "u1 . u1", "u1 . W1 . u1", "u2 . u2", "u2 . W1 . u2",
      "u1 . u1", "u1 . u2", "u2 . u2"};
  EXPECT_EQ(got, expected);
}

TEST(Theorem1, CandidateSizes) {
  EXPECT_EQ(theorem1_basis(4).size(), 25U);
  EXPECT_EQ(theorem1_basis(5).size(), 33U);
  EXPECT_EQ(theorem1_basis(6).size(), 42U);
}

TEST(Theorem1, CustomNames) {
  const auto b = theorem1_basis(3, {"a", "b", "P", "Q"});
  EXPECT_TRUE(resolves_in(b.front(), SystemSpec{3, MetricSignature::euclidean(3), 2, 2, 0, 0,
                                                {"a", "b", "P", "Q"}}
                                         .layout()));
  EXPECT_EQ(render(b.front()), "tr(P)");
}

TEST(Theorem2, UsesSquaredSlotsAndCrossSandwiches) {
  const auto b = theorem2_basis(4);
  EXPECT_EQ(b.size(), 27U);
  EXPECT_EQ(render(b.front()), "tr(sq(Y1))");
  EXPECT_EQ(render(b[b.size() - 2]), "u1 . Y1 . u2");
  EXPECT_EQ(render(b.back()), "u1 . Y2 . u2");
}

TEST(Theorem3, DeviceSizesAndNoDuplicateWords) {
  EXPECT_EQ(theorem3_basis(4).size(), 122U);
  EXPECT_EQ(theorem3_basis(5).size(), 266U);
  EXPECT_EQ(theorem3_basis(6).size(), 704U);
  std::set<std::string> seen;
  for (const auto& e : theorem3_basis(4)) {
    if (e.is_trace()) EXPECT_TRUE(seen.insert(render(e)).second) << render(e);
  }
}

TEST(Poincare, FourteenInListedOrder) {
  std::vector<std::string> got;
  for (const auto& e : poincare_vector_potential_basis()) got.push_back(render(e));
  const std::vector<std::string> expected = {
      "A . A", "A . B . A", "A . B^2 . A", "A . B L . A", "A . L^2 . A",
      "tr(B)", "tr(B^2)", "tr(B^3)", "tr(B^4)", "tr(L^2)", "tr(L^4)",
      "tr(L^2 B)", "tr(L B^2 L)", "tr(L B L B)"};
  EXPECT_EQ(got, expected);
}

TEST(CandidateBasis, EveryExpressionResolves) {
  for (const auto& b : testing::shipped_bases({2, 3, 4, 5})) {
    const Layout l = b.basis.spec.layout();
    for (const auto& e : b.basis.exprs) EXPECT_TRUE(resolves_in(e, l)) << render(e);
    EXPECT_FALSE(b.basis.label.empty());
  }
}

TEST(CandidateBasis, RejectsSmallDimension) {
  EXPECT_THROW(theorem1_basis(1), DimensionError);
  EXPECT_THROW(theorem3_basis(0), DimensionError);
}

TEST(CandidateBasis, ParseTheorem) {
  EXPECT_EQ(parse_theorem("poincare"), Theorem::Poincare);
  EXPECT_EQ(to_string(parse_theorem("3")), "3");
  EXPECT_THROW(parse_theorem("4"), ParseError);
}

TEST(RestrictTo, DropsMissingObjects) {
  const auto kept = restrict_to(theorem1_basis(3), SystemSpec::make(3, 1, 1, 0).layout());
  for (const auto& e : kept) {
    for (const auto& name : e.slot_names()) EXPECT_TRUE(name == "u1" || name == "W1");
  }
  EXPECT_EQ(kept.size(), 7U);  // 3 traces, 3 sandwiches, u1 . u1 twice
}

}  // namespace
}  // namespace rotinv
