#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rotinv/linalg.hpp"
#include "rotinv/tensor_system.hpp"

namespace rotinv {

/// Infinitesimal generator J_ab (a < b, zero-based) of the group preserving
/// the metric G:  (M_ab)_ij = delta_ia g_bj - delta_ib g_aj.
/// Acts as u -> M u on vectors and v -> M v + v M^T on rank-2 tensors.
struct Generator {
  int a = 0;
  int b = 1;
  MetricSignature metric = MetricSignature::euclidean(2);
  Matrix matrix;

  std::string label() const;  // "J12" style, one-based
};

Generator make_generator(int a, int b, const MetricSignature& metric);

/// All n(n-1)/2 generators, ordered (0,1), (0,2), ..., (n-2,n-1).
std::vector<Generator> generators(const MetricSignature& metric);

/// Flattened infinitesimal change of every object in `system` under `gen`.
Vector generator_action(const Generator& gen, const TensorSystem& system);

/// A finite transformation R with R^T G R = G.
struct GroupElement {
  Matrix matrix;
  MetricSignature metric = MetricSignature::euclidean(2);

  /// max |R^T G R - G|.
  double form_defect() const;
};

using GeneratorCombination = std::vector<std::pair<Generator, double>>;

/// R = exp(t * sum c_i M_i). An empty combination needs the metric explicitly.
GroupElement exponentiate(const GeneratorCombination& combination, double t);
GroupElement exponentiate(const GeneratorCombination& combination, double t,
                          const MetricSignature& metric);

/// Random element exp(t * sum c_i M_i), c_i uniform in [-1, 1], t uniform in [0, max_t].
GroupElement random_group_element(const MetricSignature& metric, std::mt19937_64& engine,
                                  double max_t = 1.0);

/// u' = R u, v' = R v R^T.
TensorSystem transform(const GroupElement& g, const TensorSystem& system);

/// Row r is generator_action(J_r, system); shape (n(n-1)/2) x variable count.
Matrix determining_matrix(const TensorSystem& system);

struct RankOptions {
  int trials = 20;
  std::uint64_t seed = 0;
  double tol = kDefaultRankTol;
};

/// Rank of the determining matrix at each of `trials` random points.
std::vector<int> trial_ranks(const SystemSpec& spec, const RankOptions& opts = {});

/// Maximum of trial_ranks.
int generic_rank(const SystemSpec& spec, const RankOptions& opts = {});

/// variable_count(spec) - generic_rank(spec).
int count_invariants(const SystemSpec& spec, const RankOptions& opts = {});

/// The i-th random point used by trial_ranks, generic_rank and the independence checks.
TensorSystem trial_system(const SystemSpec& spec, std::uint64_t seed, int trial);

}  // namespace rotinv
