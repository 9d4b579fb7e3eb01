#include "rotinv/rotation_action.hpp"

#include <algorithm>

#include "rotinv/error.hpp"

namespace rotinv {

std::string Generator::label() const {
  return "J" + std::to_string(a + 1) + std::to_string(b + 1);
}

Generator make_generator(int a, int b, const MetricSignature& metric) {
  const int n = metric.dimension();
  if (a < 0 || b >= n || a >= b) {
    throw DimensionError("generator indices must satisfy 0 <= a < b < n");
  }
  Matrix m = Matrix::Zero(n, n);
  m(a, b) = metric[b];
  m(b, a) = -metric[a];
  return Generator{a, b, metric, std::move(m)};
}

std::vector<Generator> generators(const MetricSignature& metric) {
  std::vector<Generator> out;
  const int n = metric.dimension();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) out.push_back(make_generator(a, b, metric));
  }
  return out;
}

Vector generator_action(const Generator& gen, const TensorSystem& system) {
  if (gen.metric.dimension() != system.dimension()) {
    throw DimensionError("generator of dimension " + std::to_string(gen.metric.dimension()) +
                         " applied to a system of dimension " +
                         std::to_string(system.dimension()));
  }
  if (!(gen.metric == system.metric())) {
    throw DimensionError("generator metric " + gen.metric.to_string() +
                         " does not match system metric " + system.metric().to_string());
  }
  const Layout l = system.layout();
  Vector out(static_cast<Eigen::Index>(l.size()));
  const Matrix& m = gen.matrix;
  std::size_t slot = 0;
  for (const auto& [name, v] : system.vectors()) {
    const auto& s = l.slots[slot++];
    out.segment(static_cast<Eigen::Index>(s.offset), static_cast<Eigen::Index>(s.size)) = m * v;
  }
  for (const auto& [name, t] : system.tensors()) {
    const auto& s = l.slots[slot++];
    flatten_tensor(Tensor{t.symmetry, m * t.components + t.components * m.transpose()},
                   out.segment(static_cast<Eigen::Index>(s.offset),
                               static_cast<Eigen::Index>(s.size)));
  }
  return out;
}

double GroupElement::form_defect() const {
  const Matrix g = metric.matrix();
  return (matrix.transpose() * g * matrix - g).cwiseAbs().maxCoeff();
}

GroupElement exponentiate(const GeneratorCombination& combination, double t,
                          const MetricSignature& metric) {
  const int n = metric.dimension();
  Matrix algebra = Matrix::Zero(n, n);
  for (const auto& [gen, c] : combination) {
    if (!(gen.metric == metric)) {
      throw DimensionError("generator metric " + gen.metric.to_string() +
                           " does not match " + metric.to_string());
    }
    algebra += c * gen.matrix;
  }
  if (t == 0.0) return GroupElement{Matrix::Identity(n, n), metric};
  return GroupElement{matrix_exp(t * algebra), metric};
}

GroupElement exponentiate(const GeneratorCombination& combination, double t) {
  if (combination.empty()) {
    throw DimensionError("exponentiate: empty combination needs an explicit metric");
  }
  return exponentiate(combination, t, combination.front().first.metric);
}

GroupElement random_group_element(const MetricSignature& metric, std::mt19937_64& engine,
                                  double max_t) {
  GeneratorCombination combo;
  for (auto& g : generators(metric)) combo.emplace_back(std::move(g), uniform_pm1(engine));
  const double t = 0.5 * (uniform_pm1(engine) + 1.0) * max_t;
  return exponentiate(combo, t, metric);
}

TensorSystem transform(const GroupElement& g, const TensorSystem& system) {
  if (g.matrix.rows() != system.dimension() || !(g.metric == system.metric())) {
    throw DimensionError("group element does not match the system's dimension and metric");
  }
  const Matrix& r = g.matrix;
  std::vector<NamedVector> vectors;
  for (const auto& [name, v] : system.vectors()) vectors.emplace_back(name, r * v);
  std::vector<NamedTensor> tensors;
  for (const auto& [name, t] : system.tensors()) {
    tensors.emplace_back(name, project_to_symmetry(t.symmetry, r * t.components * r.transpose()));
  }
  return TensorSystem(system.dimension(), system.metric(), std::move(vectors), std::move(tensors));
}

Matrix determining_matrix(const TensorSystem& system) {
  const auto gens = generators(system.metric());
  const auto cols = static_cast<Eigen::Index>(system.layout().size());
  Matrix d(static_cast<Eigen::Index>(gens.size()), cols);
  for (std::size_t r = 0; r < gens.size(); ++r) {
    d.row(static_cast<Eigen::Index>(r)) = generator_action(gens[r], system).transpose();
  }
  return d;
}

TensorSystem trial_system(const SystemSpec& spec, std::uint64_t seed, int trial) {
  return random_system(spec, derive_seed(seed, static_cast<std::uint64_t>(trial)));
}

std::vector<int> trial_ranks(const SystemSpec& spec, const RankOptions& opts) {
  std::vector<int> ranks;
  for (int i = 0; i < std::max(opts.trials, 1); ++i) {
    ranks.push_back(numerical_rank(determining_matrix(trial_system(spec, opts.seed, i)), opts.tol));
  }
  return ranks;
}

int generic_rank(const SystemSpec& spec, const RankOptions& opts) {
  const auto ranks = trial_ranks(spec, opts);
  return *std::max_element(ranks.begin(), ranks.end());
}

int count_invariants(const SystemSpec& spec, const RankOptions& opts) {
  return static_cast<int>(spec.variable_count()) - generic_rank(spec, opts);
}

}  // namespace rotinv
