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

#include <string>
#include <vector>

#include "qeclab/cocycle.hpp"
#include "qeclab/group.hpp"
#include "qeclab/projrep.hpp"

namespace qeclab {

/// A group with a projectively faithful irreducible projective
/// representation on the ambient space.
class ProjectiveErrorModel {
 public:
  /// Throws if rep is reducible or not projectively faithful.
  ProjectiveErrorModel(ProjectiveRep rep, std::string label);

  const GroupPtr& group() const { return rep_.group(); }
  const ProjectiveRep& rep() const { return rep_; }
  const Matrix& operator()(Element x) const { return rep_(x); }
  const Cocycle& cocycle() const { return rep_.cocycle(); }
  std::size_t dim() const { return rep_.dim(); }
  const std::string& label() const { return label_; }
  /// |G| == dim^2, i.e. the images form a nice error basis.
  bool is_central_type() const { return group()->order() == dim() * dim(); }

 private:
  ProjectiveRep rep_;
  std::string label_;
};

/// A group with a faithful irreducible linear representation.
class ErrorModel {
 public:
  ErrorModel(ProjectiveRep rep, std::string label);

  const GroupPtr& group() const { return rep_.group(); }
  const ProjectiveRep& rep() const { return rep_; }
  std::size_t dim() const { return rep_.dim(); }
  const std::string& label() const { return label_; }

 private:
  ProjectiveRep rep_;
  std::string label_;
};

struct ModelLimits {
  std::size_t max_dim = 64;
  std::size_t max_order = 1000000;
};

/// The n x n cyclic shift X_n and clock Z_n.
Matrix shift_matrix(std::size_t n);
Matrix clock_matrix(std::size_t n);

/// pi(a, b) = X_n^a Z_n^b on Z_n x Z_n.
ProjectiveErrorModel gen_pauli_model(std::size_t n);
/// n-fold tensor power of gen_pauli_model(2) on (Z_2 x Z_2)^n.
ProjectiveErrorModel pauli_model(std::size_t qubits, const ModelLimits& limits = {});
/// pi(b^k a^l) = X^k P^l on D_n with P = diag(1, zeta_n).
ProjectiveErrorModel dihedral_xp_model(std::size_t n);
ProjectiveErrorModel product_model(const ProjectiveErrorModel& m1, const ProjectiveErrorModel& m2,
                                   const ModelLimits& limits = {});
/// G^n x| S_n acting by (pi(x_1) (x) ... (x) pi(x_n)) tau, tau permuting
/// tensor factors.
ProjectiveErrorModel perm_product_model(const ProjectiveErrorModel& m, std::size_t n,
                                        const ModelLimits& limits = {});
/// The S_n factor {(1,...,1; tau)} inside perm_product_model(m, n).
Subgroup embedded_permutations(const ProjectiveErrorModel& perm_model,
                               const ProjectiveErrorModel& base, std::size_t n);

/// sigma(b^k1 a^l1, b^k2 a^l2) = zeta_n^(k2 l1) on dihedral(n).
Cocycle dihedral_xp_cocycle(std::size_t n);
/// f(b^k a^l) = zeta_n^((n-1) l / 2) on dihedral(n), n odd.
PhaseFunction dihedral_trivializing_phase(std::size_t n);

/// A model together with the subgroup L and representation rho of L that
/// define its Clifford code.
struct FamilyModel {
  ProjectiveErrorModel model;
  Subgroup logical;
  ProjectiveRep rho;
};

/// C_2 x D_2n on C^4 with pi(c^k b^l a^m) = S^k (X+X)^l (P+(-P))^m, rho the
/// XP representation of D_2n.
FamilyModel family_c2_x_d2n(std::size_t n);
/// G = ((Z_n x Z_n) x| Z_2) x Z_2 on C^2n, n odd, with L the first factor
/// and rho(a,b,c) = X_n^a Z_n^b C^c.
FamilyModel family_odd(std::size_t n);

/// Closes a set of unitaries under multiplication into a matrix group and
/// returns it with its defining representation. Throws past max_order
/// elements.
ErrorModel error_model_from_generators(const std::vector<Matrix>& gens, std::string label,
                                       std::size_t max_order = 4096);

/// Quotient by the center, with pi(x) = lambda(s_x) for the minimal coset
/// representative s_x.
ProjectiveErrorModel pem_from_em(const ErrorModel& em);

/// E' = C_n x_{sigma'} G with lambda'(z, x) = zeta_n^z f(x) pi(x); element
/// (z, x) has index z*|G| + x. Requires sigma' valued in C_n and
/// coboundary(f) * sigma == sigma'.
ErrorModel em_from_pem(const ProjectiveErrorModel& m, const Cocycle& sigma_prime,
                       const PhaseFunction& f, std::size_t n);

}  // namespace qeclab
