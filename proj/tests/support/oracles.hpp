#pragma once

// Test-only reference computations. Nothing here calls grad() or the rank
// helpers under test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "rotinv/rotinv.hpp"

namespace rotinv::testing {

/// Central differences of eval over flattened coordinates.
inline Vector central_difference_gradient(const InvariantExpr& expr, const TensorSystem& system,
                                          double h = 1e-6) {
  const Layout layout = system.layout();
  const Vector x = flatten(system);
  Vector g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Vector xp = x;
    Vector xm = x;
    xp[i] += h;
    xm[i] -= h;
    g[i] = (eval(expr, unflatten(layout, xp)) - eval(expr, unflatten(layout, xm))) / (2.0 * h);
  }
  return g;
}

/// Rank by full-pivot LU, an elimination route independent of the SVD rule.
inline int lu_rank(const Matrix& m, double threshold = 1e-9) {
  if (m.size() == 0) return 0;
  Eigen::FullPivLU<Matrix> lu(m);
  lu.setThreshold(threshold);
  return static_cast<int>(lu.rank());
}

inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

/// Random metric of dimension n with at least one +1.
inline MetricSignature random_metric(int n, std::mt19937_64& rng) {
  std::vector<int> d(static_cast<std::size_t>(n));
  for (auto& e : d) e = (rng() & 1U) ? 1 : -1;
  d[0] = 1;
  return MetricSignature(d);
}

inline Matrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = uniform_pm1(rng);
  return m;
}

/// Every expression each shipped constructor emits, paired with its spec.
struct ShippedBasis {
  Theorem theorem;
  int n;
  CandidateBasis basis;
};

inline std::vector<ShippedBasis> shipped_bases(const std::vector<int>& dims,
                                               const MetricSignature* metric_override = nullptr) {
  std::vector<ShippedBasis> out;
  for (int n : dims) {
    for (Theorem t : {Theorem::One, Theorem::Two, Theorem::Three}) {
      const MetricSignature m = metric_override ? *metric_override : MetricSignature::euclidean(n);
      out.push_back({t, n, candidate_basis(t, n, m)});
    }
  }
  out.push_back({Theorem::Poincare, 4, candidate_basis(Theorem::Poincare, 4, MetricSignature::minkowski(4))});
  return out;
}

}  // namespace rotinv::testing
