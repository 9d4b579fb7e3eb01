#pragma once

#include "rotinv/tensor_system.hpp"

namespace rotinv {

/// Relative tolerance for numerical rank.
inline constexpr double kDefaultRankTol = 1e-10;

/// Singular values in decreasing order.
Vector singular_values(const Matrix& m);

/// Counts singular values above tol * sigma_max * max(rows, cols).
/// An empty or all-zero matrix has rank 0.
int numerical_rank(const Matrix& m, double tol = kDefaultRankTol);

/// Absolute cutoff used by numerical_rank for the given largest singular value.
double rank_threshold(double sigma_max, Eigen::Index rows, Eigen::Index cols, double tol);

/// exp(a) by scaling and squaring of a truncated Taylor series.
Matrix matrix_exp(const Matrix& a);

}  // namespace rotinv
