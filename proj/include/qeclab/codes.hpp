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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qeclab/cocycle.hpp"
#include "qeclab/linalg.hpp"
#include "qeclab/models.hpp"
#include "qeclab/projrep.hpp"

namespace qeclab {

/// A nonzero subspace of the ambient space, stored as an orthonormal basis.
class CodeSpace {
 public:
  /// Orthonormalizes the column span of vectors; throws if it is zero.
  explicit CodeSpace(const Matrix& vectors);
  static CodeSpace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return static_cast<std::size_t>(basis_.rows()); }
  std::size_t dim() const { return static_cast<std::size_t>(basis_.cols()); }
  const Matrix& basis() const { return basis_; }
  Matrix projector() const { return basis_ * basis_.adjoint(); }

 private:
  Matrix basis_;
};

/// Projector distance below tol.
bool same_subspace(const CodeSpace& a, const CodeSpace& b, double tol = 1e-7);

/// Joint eigenspace {v : pi(x) v = f(x) v for x in f's domain}, or nothing
/// when it is zero.
std::optional<CodeSpace> weak_stabilizer_code(const ProjectiveErrorModel& m,
                                              const PhaseFunction& f);
/// Same, but f's domain must be a normal subgroup.
std::optional<CodeSpace> stabilizer_code(const ProjectiveErrorModel& m, const PhaseFunction& f);

/// Every f on h with coboundary(f) equal to the restricted cocycle, i.e.
/// f0 times each linear character of h. Empty when the restriction is not a
/// coboundary.
std::vector<PhaseFunction> compatible_phases(const ProjectiveErrorModel& m, const Subgroup& h);

/// All f = f0 * chi with chi a 1-dimensional constituent of conj(f0) Res pi,
/// which are exactly the f with nonzero weak stabilizer code. Ordered by the
/// phases of chi on the generators of h.
std::vector<PhaseFunction> one_dimensional_constituents(const ProjectiveErrorModel& m,
                                                        const Subgroup& h);

/// For abelian h with trivializable restricted cocycle, a phase function with
/// nonzero stabilizer code. Empty otherwise.
std::optional<PhaseFunction> existence_phase(const ProjectiveErrorModel& m, const Subgroup& h);

/// (1/|H|) sum conj(f(x)) chi_pi(x), snapped to an integer.
std::size_t code_dimension_formula(const ProjectiveErrorModel& m, const PhaseFunction& f);

/// The image of the unique intertwiner rho -> Res_L pi. Requires rho
/// irreducible with the restricted cocycle, dim Hom = 1 and
/// [G:L] dim rho = dim V.
CodeSpace clifford_code(const ProjectiveErrorModel& m, const Subgroup& l, const ProjectiveRep& rho);

/// Restriction of pi to an invariant code space W, as a representation of
/// l in the basis of W.
ProjectiveRep restricted_to_code(const ProjectiveErrorModel& m, const Subgroup& l,
                                 const CodeSpace& w);

Subgroup logical_group(const ProjectiveErrorModel& m, const CodeSpace& w);

struct StabilizerData {
  Subgroup group;
  /// f~ per member of group, in member order.
  std::vector<cplx> phases;
  std::vector<std::optional<Phase>> exact;

  bool all_exact() const;
  /// Throws unless every phase snapped.
  PhaseFunction phase_function() const;
};
StabilizerData stabilizer_group(const ProjectiveErrorModel& m, const CodeSpace& w);

struct DetectableData {
  std::vector<Element> elements;
  /// P pi(x) P = c P, per element.
  std::vector<cplx> coefficients;
};
DetectableData detectable_set(const ProjectiveErrorModel& m, const CodeSpace& w);

struct PartitionCheck {
  bool partitioning = true;
  std::optional<Element> witness;
};
/// Does every pi(x) map W into W or into its orthogonal complement?
PartitionCheck partition_check(const ProjectiveErrorModel& m, const CodeSpace& w);
bool is_partitioning(const ProjectiveErrorModel& m, const CodeSpace& w);

struct CodeFlags {
  bool is_stabilizer = false;
  bool is_weak_stabilizer = false;
  bool is_clifford = false;
  bool is_partitioning = false;
};

struct CentralTypeCheck {
  bool weak_stabilizer = false;
  bool stabilizer = false;
  /// Both criteria match the direct tests.
  bool agrees = false;
};

struct CodeReport {
  std::string model_label;
  std::size_t ambient_dim = 0;
  std::size_t group_order = 0;
  CodeSpace code;
  Subgroup logical;
  StabilizerData stabilizer;
  DetectableData detectable;
  CodeFlags flags;
  std::optional<Element> partition_witness;
  /// Human-readable reason per failed flag.
  std::map<std::string, std::string> witnesses;
  /// Present for Clifford codes in central-type models.
  std::optional<CentralTypeCheck> central_type;
};

CodeReport classify(const ProjectiveErrorModel& m, const CodeSpace& w);

struct StabilizerClifford {
  Subgroup logical;
  CodeSpace code;
};
/// Realizes the stabilizer code of f (on a normal subgroup) as the Clifford
/// code of the inertia group of f.
StabilizerClifford stabilizer_to_clifford(const ProjectiveErrorModel& m, const PhaseFunction& f);

struct ProductCode {
  ProjectiveErrorModel model;
  CodeSpace code;
  bool logical_is_product = false;
  bool stabilizer_is_product = false;
};
ProductCode product_code(const ProjectiveErrorModel& m1, const CodeSpace& w1,
                         const ProjectiveErrorModel& m2, const CodeSpace& w2,
                         const ModelLimits& limits = {});

/// Span of the Dicke states |D^n_k>, k = 0..n, in (C^2)^(x)n.
CodeSpace dicke_code(std::size_t n);

/// Every homomorphism h -> T, ordered by its values on generators(h).
std::vector<PhaseFunction> linear_characters(const Subgroup& h);

}  // namespace qeclab
