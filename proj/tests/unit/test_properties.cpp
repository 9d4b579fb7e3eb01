// Randomized properties over many seeds and shapes.

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace rotinv {
namespace {

constexpr int kCases = 60;

SystemSpec random_spec(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dim(2, 6);
  std::uniform_int_distribution<int> count(0, 2);
  const int n = dim(rng);
  return SystemSpec::make(n, testing::random_metric(n, rng), count(rng), count(rng), count(rng),
                          count(rng));
}

TEST(Properties, FlattenUnflattenRoundTrip) {
  std::mt19937_64 rng(101);
  for (int k = 0; k < kCases; ++k) {
    const auto spec = random_spec(rng);
    const auto s = random_system(spec, rng);
    EXPECT_EQ(flatten(unflatten(s.layout(), flatten(s))), flatten(s));
    EXPECT_EQ(flatten(s).size(), static_cast<Eigen::Index>(spec.variable_count()));
  }
}

TEST(Properties, GroupElementsPreserveFormAndInvariants) {
  std::mt19937_64 rng(202);
  for (int k = 0; k < kCases; ++k) {
    const auto spec = random_spec(rng);
    const auto s = random_system(spec, rng);
    const auto g = random_group_element(spec.metric, rng);
    EXPECT_LE(g.form_defect(), 1e-12);
    const auto moved = transform(g, s);
    for (const auto& [name, t] : s.tensors()) {
      const auto e = InvariantExpr::trace({SlotRef::tensor(name), SlotRef::tensor(name)});
      EXPECT_NEAR(eval(e, moved), eval(e, s), 1e-9 * std::max(1.0, std::abs(eval(e, s))));
    }
    for (const auto& [name, v] : s.vectors()) {
      const auto e = InvariantExpr::sandwich(SlotRef::vector(name), {}, SlotRef::vector(name));
      EXPECT_NEAR(eval(e, moved), eval(e, s), 1e-9 * std::max(1.0, std::abs(eval(e, s))));
    }
  }
}

TEST(Properties, TangentsAnnihilateShippedGradients) {
  std::mt19937_64 rng(303);
  for (const auto& b : testing::shipped_bases({3, 4})) {
    const auto s = random_system(b.basis.spec, rng);
    const Matrix d = determining_matrix(s);
    for (const auto& e : b.basis.exprs) {
      const Vector g = grad(e, s);
      EXPECT_LE((d * g).cwiseAbs().maxCoeff(), 1e-9 * std::max(1.0, g.norm() * d.norm())) << render(e);
    }
  }
}

TEST(Properties, GradientsMatchFiniteDifferences) {
  std::mt19937_64 rng(404);
  for (const auto& b : testing::shipped_bases({3})) {
    for (int k = 0; k < 3; ++k) {
      const auto s = random_system(b.basis.spec, rng);
      for (const auto& e : b.basis.exprs) {
        const Vector fd = testing::central_difference_gradient(e, s);
        EXPECT_LE((grad(e, s) - fd).norm(), 1e-6 * std::max(1.0, fd.norm())) << render(e);
      }
    }
  }
}

TEST(Properties, RankNeverExceedsBounds) {
  std::mt19937_64 rng(505);
  for (int k = 0; k < 20; ++k) {
    const auto spec = random_spec(rng);
    const int r = generic_rank(spec, RankOptions{5, rng()});
    const int n = spec.n;
    EXPECT_LE(r, n * (n - 1) / 2);
    EXPECT_LE(r, static_cast<int>(spec.variable_count()));
    EXPECT_GE(count_invariants(spec, RankOptions{5, 0}), 0);
  }
}

TEST(Properties, RankIsSeedStable) {
  for (const auto& spec : {SystemSpec::make(4, 2, 2, 0), SystemSpec::make(5, 0, 0, 1),
                           vector_potential_spec(), SystemSpec::make(4, 2, 2, 2)}) {
    const int r0 = generic_rank(spec, RankOptions{20, 0});
    for (std::uint64_t seed : {1ULL, 7ULL, 12345ULL}) EXPECT_EQ(generic_rank(spec, RankOptions{20, seed}), r0);
  }
}

TEST(Properties, PrunedSetIsIndependentAndSpans) {
  std::mt19937_64 rng(606);
  for (int n : {3, 4}) {
    const auto c = candidate_basis(Theorem::Three, n, MetricSignature::euclidean(n));
    const auto systems = sample_systems(c.spec, 10, 0);
    const auto pruned = greedy_prune(c.exprs, systems);
    const auto s = random_system(c.spec, rng);
    EXPECT_EQ(testing::lu_rank(jacobian(pruned, s), 1e-8), static_cast<int>(pruned.size()));
    EXPECT_EQ(jacobian_rank(pruned, systems), jacobian_rank(c.exprs, systems));
  }
}

TEST(Properties, DecomposeReconstructs) {
  std::mt19937_64 rng(707);
  for (int k = 0; k < kCases; ++k) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Matrix v = testing::random_matrix(n, n, rng);
    EXPECT_LE(testing::max_abs(decompose(v).reconstruct() - v), 1e-15);
  }
}

}  // namespace
}  // namespace rotinv
