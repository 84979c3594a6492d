// Copyright 2026 The qeclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qeclab/linalg.hpp"

#include <cmath>

namespace qeclab {

Matrix nullspace(const Matrix& a, double rel_tol) {
  const Eigen::Index n = a.cols();
  if (a.rows() == 0) return Matrix::Identity(n, n);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double smax = s.size() ? s(0) : 0.0;
  if (smax < 1e-14) return Matrix::Identity(n, n);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > rel_tol * smax) ++rank;
  return svd.matrixV().rightCols(n - rank);
}

Matrix column_space(const Matrix& a, double rel_tol) {
  if (a.cols() == 0) return Matrix(a.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double smax = s.size() ? s(0) : 0.0;
  if (smax < 1e-14) return Matrix(a.rows(), 0);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > rel_tol * smax) ++rank;
  return svd.matrixU().leftCols(rank);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m * m.adjoint() - Matrix::Identity(m.rows(), m.cols())).norm() < tol;
}

std::optional<long long> snap_integer(double x, double tol) {
  const double r = std::round(x);
  if (std::abs(x - r) > tol) return std::nullopt;
  return static_cast<long long>(r);
}

std::optional<cplx> scalar_part(const Matrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return std::nullopt;
  const cplx c = m.trace() / static_cast<double>(m.rows());
  if ((m - c * Matrix::Identity(m.rows(), m.cols())).norm() < tol) return c;
  return std::nullopt;
}

cplx frobenius_inner(const Matrix& a, const Matrix& b) {
  return (a.conjugate().cwiseProduct(b)).sum();
}

}  // namespace qeclab
