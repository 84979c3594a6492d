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

#include <gtest/gtest.h>

#include <cmath>

#include "qeclab/models.hpp"

namespace qeclab {
namespace {

constexpr double kTwoPi = 6.283185307179586;

TEST(Models, ShiftAndClock) {
  for (std::size_t n : {2u, 3u, 5u}) {
    const Matrix x = shift_matrix(n);
    const Matrix z = clock_matrix(n);
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_EQ(x(j, (j + 1) % n), cplx(1, 0));
      const double t = kTwoPi * double(j) / double(n);
      EXPECT_LT(std::abs(z(j, j) - cplx(std::cos(t), std::sin(t))), 1e-12);
    }
    const cplx w(std::cos(kTwoPi / double(n)), std::sin(kTwoPi / double(n)));
    EXPECT_LT((x * z - w * z * x).norm(), 1e-12);
  }
}

TEST(Models, GenPauli) {
  const auto m = gen_pauli_model(3);
  EXPECT_EQ(m.group()->order(), 9u);
  EXPECT_EQ(m.dim(), 3u);
  EXPECT_TRUE(m.is_central_type());
  EXPECT_EQ(m.label(), "genpauli:3");
  const Matrix x = shift_matrix(3), z = clock_matrix(3);
  EXPECT_LT((m(1 * 3 + 2) - x * z * z).norm(), 1e-12);
}

TEST(Models, MultiQubitPauli) {
  const auto m = pauli_model(2);
  EXPECT_EQ(m.group()->order(), 16u);
  EXPECT_EQ(m.dim(), 4u);
  EXPECT_TRUE(m.is_central_type());
  const Matrix x = shift_matrix(2), z = clock_matrix(2);
  EXPECT_LT((m(10) - kron(x, x)).norm(), 1e-12);
  EXPECT_LT((m(5) - kron(z, z)).norm(), 1e-12);
  ModelLimits small;
  small.max_dim = 8;
  EXPECT_THROW(pauli_model(4, small), std::invalid_argument);
}

TEST(Models, DihedralXP) {
  for (std::size_t n : {2u, 3u, 4u, 6u}) {
    const auto m = dihedral_xp_model(n);
    EXPECT_EQ(m.group()->order(), 2 * n);
    EXPECT_EQ(m.dim(), 2u);
    EXPECT_EQ(m.is_central_type(), n == 2);
    const Matrix p = m(1);
    const double t = kTwoPi / double(n);
    EXPECT_LT(std::abs(p(1, 1) - cplx(std::cos(t), std::sin(t))), 1e-12);
    EXPECT_LT(std::abs(p(0, 0) - cplx(1, 0)), 1e-12);
  }
}

TEST(Models, Products) {
  const auto a = gen_pauli_model(2);
  const auto b = dihedral_xp_model(3);
  const auto p = product_model(a, b);
  EXPECT_EQ(p.group()->order(), 24u);
  EXPECT_EQ(p.dim(), 4u);
  EXPECT_LT((p(1 * 6 + 4) - kron(a(1), b(4))).norm(), 1e-12);

  const auto w = perm_product_model(a, 2);
  EXPECT_EQ(w.group()->order(), 32u);
  EXPECT_EQ(w.dim(), 4u);
  const Subgroup s = embedded_permutations(w, a, 2);
  ASSERT_EQ(s.order(), 2u);
  Matrix swap = Matrix::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1;
  const Matrix t = w(s.members()[1]);
  const auto c = (swap.adjoint() * t)(0, 0);
  EXPECT_LT((t - c * swap).norm(), 1e-12);
}

TEST(Models, PermProductOfThreeQubits) {
  const auto w = perm_product_model(gen_pauli_model(2), 3);
  EXPECT_EQ(w.group()->order(), 384u);
  EXPECT_EQ(w.dim(), 8u);
}

TEST(Models, C2xD2nFamily) {
  for (std::size_t n : {2u, 3u, 4u}) {
    const FamilyModel f = family_c2_x_d2n(n);
    EXPECT_EQ(f.model.group()->order(), 8 * n);
    EXPECT_EQ(f.model.dim(), 4u);
    EXPECT_EQ(f.model.is_central_type(), n == 2);
    EXPECT_EQ(f.logical.order(), 4 * n);
    EXPECT_EQ(f.rho.dim(), 2u);
    EXPECT_TRUE(is_irreducible(f.rho));
  }
  EXPECT_THROW(family_c2_x_d2n(1), std::invalid_argument);
}

TEST(Models, OddFamily) {
  for (std::size_t n : {3u, 5u}) {
    const FamilyModel f = family_odd(n);
    EXPECT_EQ(f.model.group()->order(), 4 * n * n);
    EXPECT_EQ(f.model.dim(), 2 * n);
    EXPECT_TRUE(f.model.is_central_type());
    EXPECT_EQ(f.logical.order(), 2 * n * n);
    EXPECT_EQ(f.rho.dim(), n);
  }
  EXPECT_THROW(family_odd(4), std::invalid_argument);
}

TEST(Models, ErrorModelRoundTrip) {
  const ErrorModel pauli_group =
      error_model_from_generators({shift_matrix(2), clock_matrix(2)}, "xz");
  EXPECT_EQ(pauli_group.group()->order(), 8u);
  const ProjectiveErrorModel q = pem_from_em(pauli_group);
  EXPECT_EQ(q.group()->order(), 4u);
  EXPECT_EQ(q.dim(), 2u);
  EXPECT_TRUE(q.is_central_type());

  const auto m = gen_pauli_model(2);
  const ErrorModel lifted =
      em_from_pem(m, m.cocycle(), PhaseFunction::constant_one(Subgroup::whole(m.group())), 2);
  const auto& e = *lifted.group();
  EXPECT_EQ(e.order(), 8u);
  EXPECT_FALSE(e.is_abelian());
  std::size_t involutions = 0;
  for (Element x = 0; x < e.order(); ++x) involutions += e.element_order(x) == 2;
  EXPECT_EQ(involutions, 5u);
}

TEST(Models, RejectsReducibleRepresentation) {
  auto g = cyclic(2);
  Matrix z = clock_matrix(2);
  auto rep = ProjectiveRep::from_matrices(g, {Matrix::Identity(2, 2), z});
  EXPECT_THROW(ProjectiveErrorModel(rep, "bad"), std::invalid_argument);
}

}  // namespace
}  // namespace qeclab
