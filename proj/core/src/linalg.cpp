#include "rotinv/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace rotinv {

Vector singular_values(const Matrix& m) {
  if (m.size() == 0) return Vector();
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues();
}

double rank_threshold(double sigma_max, Eigen::Index rows, Eigen::Index cols, double tol) {
  return tol * sigma_max * static_cast<double>(std::max(rows, cols));
}

int numerical_rank(const Matrix& m, double tol) {
  const Vector s = singular_values(m);
  if (s.size() == 0 || s[0] == 0.0) return 0;
  const double cut = rank_threshold(s[0], m.rows(), m.cols(), tol);
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] > cut) ++r;
  }
  return r;
}

Matrix matrix_exp(const Matrix& a) {
  const Eigen::Index n = a.rows();
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.25) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
  const Matrix b = a / std::ldexp(1.0, squarings);

  // ||b|| <= 1/4, so 20 terms put the remainder far below double rounding.
  Matrix result = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (int k = 1; k <= 20; ++k) {
    term = (term * b) / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-20) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

}  // namespace rotinv
