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

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace qeclab {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Orthonormal basis (as columns) of {v : a v = 0}. Singular values below
/// rel_tol times the largest one count as zero.
Matrix nullspace(const Matrix& a, double rel_tol = 1e-8);

/// Orthonormal basis of the column space of a.
Matrix column_space(const Matrix& a, double rel_tol = 1e-8);

Matrix kron(const Matrix& a, const Matrix& b);

bool is_unitary(const Matrix& m, double tol = 1e-9);

/// Nearest integer to x if it lies within tol.
std::optional<long long> snap_integer(double x, double tol = 1e-7);

/// If m is within tol (Frobenius) of c times the identity, returns c.
std::optional<cplx> scalar_part(const Matrix& m, double tol = 1e-9);

/// Frobenius inner product tr(a^* b).
cplx frobenius_inner(const Matrix& a, const Matrix& b);

}  // namespace qeclab
