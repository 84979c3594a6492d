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

#include <memory>
#include <vector>

#include "qeclab/cocycle.hpp"
#include "qeclab/group.hpp"
#include "qeclab/linalg.hpp"

namespace qeclab {

using CocyclePtr = std::shared_ptr<const Cocycle>;

/// A projective representation: one unitary per group element, with
/// pi(x) pi(y) = sigma(x,y) pi(xy) for the stored cocycle sigma.
class ProjectiveRep {
 public:
  /// Validates unitarity and extracts the cocycle, snapping each scalar to a
  /// root of unity with denominator at most 4|G|.
  static ProjectiveRep from_matrices(GroupPtr group, std::vector<Matrix> matrices);
  /// Validates the matrices against a known cocycle.
  static ProjectiveRep with_cocycle(GroupPtr group, std::vector<Matrix> matrices,
                                    CocyclePtr sigma);

  const GroupPtr& group() const { return group_; }
  std::size_t dim() const { return dim_; }
  const Matrix& operator()(Element x) const { return matrices_[x]; }
  const std::vector<Matrix>& matrices() const { return matrices_; }
  const Cocycle& cocycle() const { return *cocycle_; }
  const CocyclePtr& cocycle_ptr() const { return cocycle_; }

 private:
  ProjectiveRep(GroupPtr group, std::vector<Matrix> matrices, CocyclePtr sigma);

  GroupPtr group_;
  std::size_t dim_ = 0;
  std::vector<Matrix> matrices_;
  CocyclePtr cocycle_;
};

struct Character {
  GroupPtr group;
  std::vector<cplx> values;
  CocyclePtr cocycle;
};

Character character(const ProjectiveRep& pi);
/// (1/|G|) sum chi1(x) conj(chi2(x)); both characters must carry the same
/// cocycle.
cplx inner_product(const Character& chi1, const Character& chi2);
/// Characters agree elementwise within tol.
bool characters_equal(const Character& chi1, const Character& chi2, double tol = 1e-7);

bool is_irreducible(const ProjectiveRep& pi);
/// Only the identity acts as a scalar.
bool is_projectively_faithful(const ProjectiveRep& pi);

/// Frobenius-orthonormal basis of {T : rho2(x) T = T rho1(x) for all x}.
/// Each T has shape dim(rho2) x dim(rho1).
std::vector<Matrix> hom_space(const ProjectiveRep& rho1, const ProjectiveRep& rho2);

/// Restriction to h, as a representation of h.as_group().
ProjectiveRep restrict(const ProjectiveRep& pi, const Subgroup& h);
/// Representation of direct_product(G1, G2) by Kronecker products.
ProjectiveRep tensor(const ProjectiveRep& pi1, const ProjectiveRep& pi2);
ProjectiveRep direct_sum(const ProjectiveRep& pi1, const ProjectiveRep& pi2);

/// The 1-dimensional representation x -> f(x) of f's domain (as a group).
ProjectiveRep one_dimensional(const PhaseFunction& f);
/// x -> f(x) pi(x), where f lists one phase per element of pi's group.
ProjectiveRep twist(const ProjectiveRep& pi, const std::vector<Phase>& f);

/// Induction of theta (a representation of h.as_group()) up to sigma's
/// group. The basis is ordered by coset representative, then by theta's
/// basis.
ProjectiveRep induce(const ProjectiveRep& theta, const Subgroup& h, const Cocycle& sigma);

/// theta^x(y) = sigma(x^-1, y) conj(sigma(x^-1 y x, x^-1)) theta(x^-1 y x),
/// defined when x normalizes h.
ProjectiveRep conjugate_rep(const ProjectiveRep& theta, const Subgroup& h, Element x,
                            const Cocycle& sigma);

/// {x in N_G(h) : theta^x and theta have equal characters}.
Subgroup inertia_group(const ProjectiveRep& theta, const Subgroup& h, const Cocycle& sigma);

}  // namespace qeclab
