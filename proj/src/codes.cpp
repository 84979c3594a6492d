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

#include "qeclab/codes.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qeclab {

namespace {

constexpr double kScanTol = 1e-8;

Matrix identity(std::size_t d) {
  return Matrix::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
}

// Basis of the joint eigenspace {v : pi(x) v = f(x) v, x in elems}.
Matrix joint_eigenspace(const ProjectiveErrorModel& m, const PhaseFunction& f,
                        const std::vector<Element>& elems) {
  const auto d = static_cast<Eigen::Index>(m.dim());
  if (elems.empty()) return Matrix::Identity(d, d);
  Matrix stacked(static_cast<Eigen::Index>(elems.size()) * d, d);
  for (std::size_t i = 0; i < elems.size(); ++i)
    stacked.middleRows(static_cast<Eigen::Index>(i) * d, d) =
        m(elems[i]) - f.at(elems[i]).value() * Matrix::Identity(d, d);
  return nullspace(stacked);
}

std::string str(std::size_t v) { return std::to_string(v); }

}  // namespace

CodeSpace::CodeSpace(const Matrix& vectors) : basis_(column_space(vectors)) {
  if (basis_.cols() == 0) throw std::invalid_argument("CodeSpace: subspace must be nonzero");
}

CodeSpace CodeSpace::whole(std::size_t ambient_dim) { return CodeSpace(identity(ambient_dim)); }

bool same_subspace(const CodeSpace& a, const CodeSpace& b, double tol) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  return (a.projector() - b.projector()).norm() < tol;
}

std::optional<CodeSpace> weak_stabilizer_code(const ProjectiveErrorModel& m,
                                              const PhaseFunction& f) {
  const Subgroup& h = f.domain();
  if (!same_group(h.parent(), m.group()))
    throw std::invalid_argument("weak_stabilizer_code: phase function on a different group");
  Matrix basis = joint_eigenspace(m, f, generators(h));
  if (basis.cols() > 0) {
    bool holds = true;
    for (Element x : h.members())
      if ((m(x) * basis - f.at(x).value() * basis).norm() > 1e-7) {
        holds = false;
        break;
      }
    if (!holds) basis = joint_eigenspace(m, f, h.members());
  }
  if (basis.cols() == 0) return std::nullopt;
  if (!(coboundary(f) == restrict(m.cocycle(), h)))
    throw std::logic_error("weak_stabilizer_code: nonzero code for a non-projective phase");
  return CodeSpace(basis);
}

std::optional<CodeSpace> stabilizer_code(const ProjectiveErrorModel& m, const PhaseFunction& f) {
  if (!is_normal(f.domain()))
    throw std::invalid_argument("stabilizer_code: subgroup is not normal");
  return weak_stabilizer_code(m, f);
}

std::vector<PhaseFunction> linear_characters(const Subgroup& h) {
  const FiniteGroup& g = *h.parent();
  const std::vector<Element> gens = generators(h);
  std::vector<std::size_t> orders;
  for (Element s : gens) orders.push_back(g.element_order(s));

  std::vector<PhaseFunction> out;
  std::vector<std::size_t> choice(gens.size(), 0);
  const std::size_t k = h.order();
  while (true) {
    // extend along right multiplication by generators and check consistency
    std::vector<std::optional<Phase>> value(k);
    value[h.local_index(g.identity())] = Phase::one();
    std::vector<Element> queue{g.identity()};
    bool ok = true;
    for (std::size_t head = 0; head < queue.size() && ok; ++head) {
      const Element x = queue[head];
      const Phase vx = *value[h.local_index(x)];
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        const Phase v = vx * Phase::root_of_unity(static_cast<std::int64_t>(choice[i]),
                                                  static_cast<std::int64_t>(orders[i]));
        auto& slot = value[h.local_index(g.mul(x, gens[i]))];
        if (!slot) {
          slot = v;
          queue.push_back(g.mul(x, gens[i]));
        } else if (*slot != v) {
          ok = false;
        }
      }
    }
    if (ok) {
      std::vector<Phase> vals;
      for (const auto& v : value) vals.push_back(*v);
      out.emplace_back(h, std::move(vals));
    }
    std::size_t i = gens.size();
    while (i > 0) {
      --i;
      if (++choice[i] < orders[i]) break;
      choice[i] = 0;
      if (i == 0) return out;
    }
    if (gens.empty()) return out;
  }
}

std::vector<PhaseFunction> compatible_phases(const ProjectiveErrorModel& m, const Subgroup& h) {
  const auto f0 = find_trivializing_phase(m.cocycle(), h);
  if (!f0) return {};
  std::vector<PhaseFunction> out;
  for (const PhaseFunction& chi : linear_characters(h)) out.push_back(*f0 * chi);
  return out;
}

std::vector<PhaseFunction> one_dimensional_constituents(const ProjectiveErrorModel& m,
                                                        const Subgroup& h) {
  const auto f0 = find_trivializing_phase(m.cocycle(), h);
  if (!f0) return {};
  const FiniteGroup& g = *h.parent();
  const std::vector<Element> gens = generators(h);
  const auto max_den = static_cast<std::int64_t>(h.as_group()->exponent());
  auto mu = [&](Element x) -> Matrix { return f0->at(x).conj().value() * m(x); };

  std::vector<PhaseFunction> out;
  // depth-first over eigenvalue choices for each generator, ascending phase
  auto recurse = [&](auto&& self, const Matrix& basis, std::size_t depth) -> void {
    if (depth == gens.size()) {
      std::vector<Phase> vals;
      const double k = static_cast<double>(basis.cols());
      for (Element x : h.members()) {
        const cplx c = (basis.adjoint() * mu(x) * basis).trace() / k;
        const auto p = Phase::snap(c, max_den);
        if (!p) throw std::logic_error("one_dimensional_constituents: character snap failed");
        vals.push_back(*p);
      }
      out.push_back(*f0 * PhaseFunction(h, std::move(vals)));
      return;
    }
    const Element s = gens[depth];
    const auto o = static_cast<std::int64_t>(g.element_order(s));
    const Matrix ms = mu(s);
    for (std::int64_t j = 0; j < o; ++j) {
      const cplx lambda = Phase::root_of_unity(j, o).value();
      const Matrix a = ms * basis - lambda * basis;
      const Matrix null = nullspace(a);
      if (null.cols() == 0) continue;
      self(self, Matrix(basis * null), depth + 1);
    }
  };
  recurse(recurse, identity(m.dim()), 0);
  return out;
}

std::optional<PhaseFunction> existence_phase(const ProjectiveErrorModel& m, const Subgroup& h) {
  if (!h.as_group()->is_abelian()) return std::nullopt;
  auto found = one_dimensional_constituents(m, h);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::size_t code_dimension_formula(const ProjectiveErrorModel& m, const PhaseFunction& f) {
  cplx acc = 0;
  for (Element x : f.domain().members()) acc += std::conj(f.at(x).value()) * m(x).trace();
  acc /= static_cast<double>(f.domain().order());
  const auto n = snap_integer(acc.real());
  if (!n || std::abs(acc.imag()) > 1e-7 || *n < 0)
    throw std::runtime_error("code_dimension_formula: value is not a nonnegative integer");
  return static_cast<std::size_t>(*n);
}

CodeSpace clifford_code(const ProjectiveErrorModel& m, const Subgroup& l, const ProjectiveRep& rho) {
  if (!same_group(l.parent(), m.group()))
    throw std::invalid_argument("clifford_code: L is not a subgroup of the model's group");
  if (!same_group(rho.group(), l.as_group()))
    throw std::invalid_argument("clifford_code: rho is not a representation of L");
  if (!is_irreducible(rho)) throw std::invalid_argument("clifford_code: rho is not irreducible");
  if (!(rho.cocycle() == restrict(m.cocycle(), l)))
    throw std::invalid_argument("clifford_code: rho's cocycle differs from the restricted cocycle");
  if (l.index() * rho.dim() != m.dim())
    throw std::invalid_argument("clifford_code: [G:L] * dim rho = " + str(l.index() * rho.dim()) +
                                " but dim V = " + str(m.dim()));
  const auto hom = hom_space(rho, restrict(m.rep(), l));
  if (hom.size() != 1)
    throw std::invalid_argument("clifford_code: dim Hom_L(rho, Res pi) = " + str(hom.size()) +
                                ", expected 1");
  CodeSpace w(hom.front());
  if (w.dim() != rho.dim()) throw std::logic_error("clifford_code: intertwiner is not injective");
  return w;
}

ProjectiveRep restricted_to_code(const ProjectiveErrorModel& m, const Subgroup& l,
                                 const CodeSpace& w) {
  std::vector<Matrix> mats;
  mats.reserve(l.order());
  for (Element x : l.members()) mats.push_back(w.basis().adjoint() * m(x) * w.basis());
  auto sigma = std::make_shared<const Cocycle>(restrict(m.cocycle(), l));
  return ProjectiveRep::with_cocycle(l.as_group(), std::move(mats), std::move(sigma));
}

Subgroup logical_group(const ProjectiveErrorModel& m, const CodeSpace& w) {
  const Matrix p = w.projector();
  std::vector<Element> members;
  for (Element x = 0; x < m.group()->order(); ++x)
    if ((p * m(x) - m(x) * p).norm() < kScanTol) members.push_back(x);
  return Subgroup(m.group(), std::move(members));
}

bool StabilizerData::all_exact() const {
  for (const auto& e : exact)
    if (!e) return false;
  return true;
}

PhaseFunction StabilizerData::phase_function() const {
  std::vector<Phase> vals;
  for (const auto& e : exact) {
    if (!e) throw std::runtime_error("StabilizerData: stabilizer phase is not a root of unity");
    vals.push_back(*e);
  }
  return PhaseFunction(group, std::move(vals));
}

StabilizerData stabilizer_group(const ProjectiveErrorModel& m, const CodeSpace& w) {
  const Matrix& b = w.basis();
  const auto k = static_cast<Eigen::Index>(w.dim());
  const auto max_den = static_cast<std::int64_t>(4 * m.group()->order());
  std::vector<Element> members;
  std::vector<cplx> phases;
  for (Element x = 0; x < m.group()->order(); ++x) {
    const Matrix c = b.adjoint() * m(x) * b;
    const cplx s = c.trace() / static_cast<double>(k);
    if ((c - s * Matrix::Identity(k, k)).norm() < kScanTol && std::abs(std::abs(s) - 1.0) < kScanTol) {
      members.push_back(x);
      phases.push_back(s);
    }
  }
  std::vector<std::optional<Phase>> exact;
  for (const cplx& s : phases) exact.push_back(Phase::snap(s, max_den));
  return {Subgroup(m.group(), std::move(members)), std::move(phases), std::move(exact)};
}

DetectableData detectable_set(const ProjectiveErrorModel& m, const CodeSpace& w) {
  const Matrix& b = w.basis();
  const auto k = static_cast<Eigen::Index>(w.dim());
  DetectableData out;
  for (Element x = 0; x < m.group()->order(); ++x) {
    const Matrix c = b.adjoint() * m(x) * b;
    const cplx s = c.trace() / static_cast<double>(k);
    if ((c - s * Matrix::Identity(k, k)).norm() < kScanTol) {
      out.elements.push_back(x);
      out.coefficients.push_back(s);
    }
  }
  return out;
}

PartitionCheck partition_check(const ProjectiveErrorModel& m, const CodeSpace& w) {
  const Matrix& b = w.basis();
  const Matrix p = w.projector();
  const Matrix q = identity(m.dim()) - p;
  PartitionCheck out;
  for (Element x = 0; x < m.group()->order(); ++x) {
    const Matrix image = m(x) * b;
    const bool inside = (q * image).norm() < kScanTol;
    const bool outside = (b.adjoint() * image).norm() < kScanTol;
    if (!inside && !outside) {
      out.partitioning = false;
      out.witness = x;
      return out;
    }
  }
  // the dichotomy pins down the detectable set
  const Subgroup l = logical_group(m, w);
  const StabilizerData s = stabilizer_group(m, w);
  const DetectableData d = detectable_set(m, w);
  std::vector<Element> expected;
  for (Element x = 0; x < m.group()->order(); ++x)
    if (!l.contains(x) || s.group.contains(x)) expected.push_back(x);
  if (expected != d.elements)
    throw std::logic_error("partition_check: detectable set disagrees with (G \\ L) u S");
  return out;
}

bool is_partitioning(const ProjectiveErrorModel& m, const CodeSpace& w) {
  return partition_check(m, w).partitioning;
}

CodeReport classify(const ProjectiveErrorModel& m, const CodeSpace& w) {
  if (w.ambient_dim() != m.dim())
    throw std::invalid_argument("classify: code lives in a different ambient space");
  const std::size_t order = m.group()->order();
  CodeReport r{m.label(),
               m.dim(),
               order,
               w,
               logical_group(m, w),
               stabilizer_group(m, w),
               detectable_set(m, w),
               {},
               std::nullopt,
               {},
               std::nullopt};

  // weak stabilizer: W must be the joint eigenspace of its own stabilizer
  if (!r.stabilizer.all_exact()) {
    r.witnesses["weak_stabilizer"] = "stabilizer phases are not roots of unity";
  } else {
    const PhaseFunction ft = r.stabilizer.phase_function();
    const auto v = weak_stabilizer_code(m, ft);
    if (v && same_subspace(*v, w)) {
      r.flags.is_weak_stabilizer = true;
      const Subgroup core = normal_core(r.stabilizer.group);
      const auto vc = weak_stabilizer_code(m, ft.restrict(core));
      if (vc && same_subspace(*vc, w)) {
        r.flags.is_stabilizer = true;
      } else {
        r.witnesses["stabilizer"] = "normal core of S (order " + str(core.order()) +
                                    ") cuts out a space of dimension " +
                                    str(vc ? vc->dim() : 0) + " != " + str(w.dim());
      }
    } else {
      r.witnesses["weak_stabilizer"] = "V^St(S, f~) has dimension " + str(v ? v->dim() : 0) +
                                       " != dim W = " + str(w.dim());
    }
    if (!r.flags.is_weak_stabilizer)
      r.witnesses["stabilizer"] = "not a weak stabilizer code";
  }

  // Clifford: the order of L is forced, then Res_L pi on W must induce pi
  const std::size_t lhs = r.logical.order() * m.dim(), rhs = w.dim() * order;
  if (lhs != rhs) {
    r.witnesses["clifford"] = "|L| * dim V = " + str(lhs) + " != dim W * |G| = " + str(rhs);
  } else {
    const ProjectiveRep rho = restricted_to_code(m, r.logical, w);
    if (!is_irreducible(rho)) {
      r.witnesses["clifford"] = "Res_L pi on W is reducible";
    } else {
      const cplx hom = inner_product(character(rho), character(restrict(m.rep(), r.logical)));
      const auto homdim = snap_integer(hom.real());
      if (!homdim || *homdim != 1) {
        r.witnesses["clifford"] = "dim Hom_L(Res pi|W, Res pi) = " +
                                  std::to_string(hom.real()) + ", expected 1";
      } else if (r.logical.index() * w.dim() != m.dim()) {
        r.witnesses["clifford"] = "[G:L] * dim W != dim V";
      } else {
        r.flags.is_clifford = true;
      }
    }
  }

  const PartitionCheck pc = partition_check(m, w);
  r.flags.is_partitioning = pc.partitioning;
  r.partition_witness = pc.witness;
  if (pc.witness)
    r.witnesses["partitioning"] = "pi(" + m.group()->element_name(*pc.witness) +
                                  ") maps W neither into W nor into its complement";

  if (r.flags.is_clifford && m.is_central_type()) {
    CentralTypeCheck ct;
    ct.weak_stabilizer = order == r.logical.order() * r.stabilizer.group.order();
    ct.stabilizer = ct.weak_stabilizer && is_normal(r.stabilizer.group);
    ct.agrees = ct.weak_stabilizer == r.flags.is_weak_stabilizer &&
                ct.stabilizer == r.flags.is_stabilizer;
    r.central_type = ct;
  }
  return r;
}

StabilizerClifford stabilizer_to_clifford(const ProjectiveErrorModel& m, const PhaseFunction& f) {
  const auto w = stabilizer_code(m, f);
  if (!w) throw std::invalid_argument("stabilizer_to_clifford: stabilizer code is zero");
  const Subgroup l = inertia_group(one_dimensional(f), f.domain(), m.cocycle());
  const ProjectiveRep rho = restricted_to_code(m, l, *w);
  CodeSpace code = clifford_code(m, l, rho);
  if (!same_subspace(code, *w))
    throw std::logic_error("stabilizer_to_clifford: Clifford code differs from the stabilizer code");
  return {l, std::move(code)};
}

ProductCode product_code(const ProjectiveErrorModel& m1, const CodeSpace& w1,
                         const ProjectiveErrorModel& m2, const CodeSpace& w2,
                         const ModelLimits& limits) {
  ProjectiveErrorModel model = product_model(m1, m2, limits);
  CodeSpace code(kron(w1.basis(), w2.basis()));
  const std::size_t n2 = m2.group()->order();
  auto product_members = [n2](const Subgroup& a, const Subgroup& b) {
    std::vector<Element> out;
    for (Element x : a.members())
      for (Element y : b.members()) out.push_back(x * n2 + y);
    return out;
  };
  const Subgroup l = logical_group(model, code);
  const Subgroup s = stabilizer_group(model, code).group;
  const bool lp =
      l.members() == product_members(logical_group(m1, w1), logical_group(m2, w2));
  const bool sp = s.members() == product_members(stabilizer_group(m1, w1).group,
                                                 stabilizer_group(m2, w2).group);
  return {std::move(model), std::move(code), lp, sp};
}

CodeSpace dicke_code(std::size_t n) {
  if (n < 1 || n > 6) throw std::invalid_argument("dicke_code: n must be in 1..6");
  const std::size_t dim = std::size_t{1} << n;
  Matrix v = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(n + 1));
  for (std::size_t i = 0; i < dim; ++i)
    v(static_cast<Eigen::Index>(i), std::popcount(i)) = 1;
  return CodeSpace(v);
}

}  // namespace qeclab
