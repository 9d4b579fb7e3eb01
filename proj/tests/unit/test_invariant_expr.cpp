#include <gtest/gtest.h>

#include "oracles.hpp"

namespace rotinv {
namespace {

TensorSystem two_by_two() {
  Matrix w(2, 2);
  w << 1, 2, 2, 3;
  Vector u(2);
  u << 1, -1;
  return TensorSystem(2, MetricSignature::euclidean(2), {{"u", u}},
                      {{"W", Tensor{TensorSymmetry::Symmetric, w}}});
}

TEST(Eval, HandComputed) {
  const auto s = two_by_two();
  EXPECT_DOUBLE_EQ(eval(parse_expr("tr(W)"), s), 4.0);
  EXPECT_DOUBLE_EQ(eval(parse_expr("tr(W^2)"), s), 18.0);
  EXPECT_DOUBLE_EQ(eval(parse_expr("u . u"), s), 2.0);
  EXPECT_DOUBLE_EQ(eval(parse_expr("u . W . u"), s), 0.0);
  EXPECT_DOUBLE_EQ(eval(parse_expr("u . W^2 . u"), s), 2.0);
}

TEST(Eval, MetricEntersEveryContraction) {
  Vector a(4);
  a << 2, 1, 0, 0;
  const TensorSystem s(4, MetricSignature::minkowski(4), {{"A", a}}, {});
  EXPECT_DOUBLE_EQ(eval(parse_expr("A . A"), s), 3.0);
  const auto e = load_system(std::string(ROTINV_TEST_DATA_DIR) + "/vector_potential.json");
  const auto ee = load_system(std::string(ROTINV_TEST_DATA_DIR) + "/vector_potential_euclidean.json");
  EXPECT_DOUBLE_EQ(eval(parse_expr("A . A"), e), -1.0);
  EXPECT_DOUBLE_EQ(eval(parse_expr("A . A"), ee), 1.0);
}

TEST(Eval, SquaredSlotOnAntisymmetricTensor) {
  Matrix y = Matrix::Zero(4, 4);
  y(0, 1) = 1;
  y(1, 0) = -1;
  y(2, 3) = 2;
  y(3, 2) = -2;
  const TensorSystem s(4, MetricSignature::euclidean(4), {},
                       {{"Y1", Tensor{TensorSymmetry::Antisymmetric, y}}});
  EXPECT_DOUBLE_EQ(eval(parse_expr("tr(sq(Y1))"), s), -10.0);
  EXPECT_DOUBLE_EQ(eval(parse_expr("tr(Y1^2)"), s), -10.0);
  EXPECT_DOUBLE_EQ(eval(parse_expr("tr(Y1)"), s), 0.0);
}

TEST(Eval, UnresolvedNamesThrow) {
  const auto s = two_by_two();
  EXPECT_THROW(eval(parse_expr("tr(Q)"), s), ResolutionError);
  EXPECT_THROW(eval(parse_expr("W . W"), s), ResolutionError);
  EXPECT_THROW(eval(parse_expr("tr(u)"), s), ResolutionError);
}

TEST(Render, Forms) {
  using S = SlotRef;
  EXPECT_EQ(render(InvariantExpr::trace({S::tensor("W1"), S::tensor("W1"), S::tensor("W2")})),
            "tr(W1^2 W2)");
  EXPECT_EQ(render(InvariantExpr::sandwich(S::vector("u1"),
                                           {S::tensor("W1"), S::tensor("W1"), S::tensor("W1")},
                                           S::vector("u1"))),
            "u1 . W1^3 . u1");
  EXPECT_EQ(render(InvariantExpr::sandwich(S::vector("A"), {}, S::vector("A"))), "A . A");
  EXPECT_EQ(render(InvariantExpr::trace({S::squared("Y1"), S::squared("Y1")})), "tr(sq(Y1)^2)");
}

TEST(Parse, RoundTripsShippedBases) {
  for (const auto& b : testing::shipped_bases({2, 4})) {
    for (const auto& e : b.basis.exprs) EXPECT_EQ(parse_expr(render(e)), e) << render(e);
  }
}

TEST(Parse, Errors) {
  for (const char* bad : {"", "tr(", "tr()", "u .", "u . . v", "tr(W^0)", "tr(W^x)", "sq(Y)",
                          "u . W . v extra", "tr(W) + 1"}) {
    EXPECT_THROW(parse_expr(bad), ParseError) << bad;
  }
}

TEST(ResolvesIn, ChecksKinds) {
  const Layout l = SystemSpec::make(3, 1, 1, 1).layout();
  EXPECT_TRUE(resolves_in(parse_expr("u1 . W1 . u1"), l));
  EXPECT_TRUE(resolves_in(parse_expr("tr(sq(Y1) W1)"), l));
  EXPECT_FALSE(resolves_in(parse_expr("tr(u1)"), l));
  EXPECT_FALSE(resolves_in(parse_expr("u1 . W2 . u1"), l));
}

TEST(Grad, MatchesCentralDifferences) {
  const auto spec = SystemSpec::make(4, MetricSignature::minkowski(4), 2, 1, 1, 1);
  const std::vector<std::string> texts = {"tr(W1 Y1 V1 W1)", "u1 . V1^2 Y1 . u2", "tr(sq(Y1) W1)",
                                          "u2 . sq(Y1)^2 . u1", "tr(V1^3)", "u1 . u2"};
  for (int k = 0; k < 5; ++k) {
    const auto s = random_system(spec, 100 + k);
    for (const auto& t : texts) {
      const auto e = parse_expr(t);
      const Vector g = grad(e, s);
      const Vector fd = testing::central_difference_gradient(e, s);
      EXPECT_LE((g - fd).norm(), 1e-6 * std::max(1.0, fd.norm())) << t;
    }
  }
}

TEST(Grad, ZeroSystem) {
  const auto spec = SystemSpec::make(3, 1, 1, 0);
  const TensorSystem z = unflatten(spec.layout(), Vector::Zero(static_cast<Eigen::Index>(spec.variable_count())));
  EXPECT_EQ(grad(parse_expr("tr(W1^3)"), z), Vector::Zero(9));
  EXPECT_EQ(eval(parse_expr("u1 . W1 . u1"), z), 0.0);
}

}  // namespace
}  // namespace rotinv
