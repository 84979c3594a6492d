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

#include "qeclab/projrep.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace qeclab {

namespace {

void check_matrices(const GroupPtr& group, const std::vector<Matrix>& matrices) {
  if (matrices.size() != group->order())
    throw std::invalid_argument("ProjectiveRep: need one matrix per group element");
  const Eigen::Index d = matrices.front().rows();
  if (d == 0) throw std::invalid_argument("ProjectiveRep: zero-dimensional matrices");
  for (const Matrix& m : matrices) {
    if (m.rows() != d || m.cols() != d)
      throw std::invalid_argument("ProjectiveRep: matrices must be square of equal size");
    if (!is_unitary(m)) throw std::invalid_argument("ProjectiveRep: matrix is not unitary");
  }
}

}  // namespace

ProjectiveRep::ProjectiveRep(GroupPtr group, std::vector<Matrix> matrices, CocyclePtr sigma)
    : group_(std::move(group)),
      dim_(static_cast<std::size_t>(matrices.front().rows())),
      matrices_(std::move(matrices)),
      cocycle_(std::move(sigma)) {}

ProjectiveRep ProjectiveRep::from_matrices(GroupPtr group, std::vector<Matrix> matrices) {
  check_matrices(group, matrices);
  const FiniteGroup& g = *group;
  const std::size_t n = g.order();
  const double d = static_cast<double>(matrices.front().rows());
  const auto max_den = static_cast<std::int64_t>(4 * n);
  std::unordered_map<long long, Phase> cache;
  std::vector<Phase> table(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element xy = g.mul(x, y);
      const Matrix prod = matrices[x] * matrices[y];
      const cplx c = frobenius_inner(matrices[xy], prod) / d;
      const long long key = std::llround(std::arg(c) * 1e7);
      auto it = cache.find(key);
      if (it == cache.end() || std::abs(it->second.value() - c) > 1e-9) {
        const auto snapped = Phase::snap(c, max_den);
        if (!snapped)
          throw std::invalid_argument("ProjectiveRep: products are not scalar multiples of "
                                      "group images (cocycle snap failed)");
        it = cache.insert_or_assign(key, *snapped).first;
      }
      const Phase& p = it->second;
      if ((prod - p.value() * matrices[xy]).norm() > 1e-9)
        throw std::invalid_argument("ProjectiveRep: pi(x)pi(y) is not a scalar times pi(xy)");
      table[x * n + y] = p;
    }
  auto sigma = std::make_shared<const Cocycle>(group, std::move(table));
  if (!verify_cocycle(*sigma))
    throw std::invalid_argument("ProjectiveRep: extracted cocycle violates the cocycle identity");
  return ProjectiveRep(std::move(group), std::move(matrices), std::move(sigma));
}

ProjectiveRep ProjectiveRep::with_cocycle(GroupPtr group, std::vector<Matrix> matrices,
                                          CocyclePtr sigma) {
  check_matrices(group, matrices);
  if (!same_group(group, sigma->group()))
    throw std::invalid_argument("ProjectiveRep: cocycle lives on a different group");
  const FiniteGroup& g = *group;
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) {
      const Matrix diff = matrices[x] * matrices[y] - (*sigma)(x, y).value() * matrices[g.mul(x, y)];
      if (diff.norm() > 1e-9)
        throw std::invalid_argument("ProjectiveRep: matrices do not match the given cocycle");
    }
  if (!verify_cocycle(*sigma))
    throw std::invalid_argument("ProjectiveRep: cocycle identity violated");
  return ProjectiveRep(std::move(group), std::move(matrices), std::move(sigma));
}

Character character(const ProjectiveRep& pi) {
  Character chi{pi.group(), {}, pi.cocycle_ptr()};
  chi.values.reserve(pi.group()->order());
  for (const Matrix& m : pi.matrices()) chi.values.push_back(m.trace());
  return chi;
}

cplx inner_product(const Character& chi1, const Character& chi2) {
  if (!same_group(chi1.group, chi2.group))
    throw std::invalid_argument("inner_product: characters of different groups");
  if (chi1.cocycle != chi2.cocycle && !(*chi1.cocycle == *chi2.cocycle))
    throw std::invalid_argument("inner_product: characters carry different cocycles");
  cplx acc = 0;
  for (std::size_t i = 0; i < chi1.values.size(); ++i)
    acc += chi1.values[i] * std::conj(chi2.values[i]);
  return acc / static_cast<double>(chi1.values.size());
}

bool characters_equal(const Character& chi1, const Character& chi2, double tol) {
  if (chi1.values.size() != chi2.values.size()) return false;
  for (std::size_t i = 0; i < chi1.values.size(); ++i)
    if (std::abs(chi1.values[i] - chi2.values[i]) > tol) return false;
  return true;
}

bool is_irreducible(const ProjectiveRep& pi) {
  const Character chi = character(pi);
  const cplx ip = inner_product(chi, chi);
  return std::abs(ip - 1.0) < 1e-7;
}

bool is_projectively_faithful(const ProjectiveRep& pi) {
  const FiniteGroup& g = *pi.group();
  for (Element x = 0; x < g.order(); ++x)
    if (x != g.identity() && scalar_part(pi(x))) return false;
  return true;
}

std::vector<Matrix> hom_space(const ProjectiveRep& rho1, const ProjectiveRep& rho2) {
  if (!same_group(rho1.group(), rho2.group()))
    throw std::invalid_argument("hom_space: representations of different groups");
  if (!(rho1.cocycle() == rho2.cocycle()))
    throw std::invalid_argument("hom_space: representations carry different cocycles");
  const auto d1 = static_cast<Eigen::Index>(rho1.dim());
  const auto d2 = static_cast<Eigen::Index>(rho2.dim());
  const std::vector<Element> gens = generators(Subgroup::whole(rho1.group()));
  const Eigen::Index block = d1 * d2;
  // vec(rho2 T - T rho1) = (I (x) rho2 - rho1^T (x) I) vec(T), column-major vec
  Matrix stacked(static_cast<Eigen::Index>(gens.size()) * block, block);
  const Matrix i1 = Matrix::Identity(d1, d1), i2 = Matrix::Identity(d2, d2);
  for (std::size_t k = 0; k < gens.size(); ++k)
    stacked.middleRows(static_cast<Eigen::Index>(k) * block, block) =
        kron(i1, rho2(gens[k])) - kron(rho1(gens[k]).transpose(), i2);
  const Matrix null = nullspace(stacked);
  std::vector<Matrix> basis;
  for (Eigen::Index c = 0; c < null.cols(); ++c) {
    Matrix t = Eigen::Map<const Matrix>(null.col(c).data(), d2, d1);
    for (Element x = 0; x < rho1.group()->order(); ++x)
      if ((rho2(x) * t - t * rho1(x)).norm() > 1e-7)
        throw std::logic_error("hom_space: intertwiner fails on a non-generator");
    basis.push_back(std::move(t));
  }
  return basis;
}

ProjectiveRep restrict(const ProjectiveRep& pi, const Subgroup& h) {
  if (!same_group(pi.group(), h.parent()))
    throw std::invalid_argument("restrict: subgroup of a different group");
  if (h.is_whole()) return pi;
  std::vector<Matrix> mats;
  mats.reserve(h.order());
  for (Element x : h.members()) mats.push_back(pi(x));
  auto sigma = std::make_shared<const Cocycle>(restrict(pi.cocycle(), h));
  return ProjectiveRep::with_cocycle(h.as_group(), std::move(mats), std::move(sigma));
}

ProjectiveRep tensor(const ProjectiveRep& pi1, const ProjectiveRep& pi2) {
  const GroupPtr g = direct_product(pi1.group(), pi2.group());
  const std::size_t n1 = pi1.group()->order(), n2 = pi2.group()->order();
  std::vector<Matrix> mats;
  mats.reserve(n1 * n2);
  for (Element a = 0; a < n1; ++a)
    for (Element b = 0; b < n2; ++b) mats.push_back(kron(pi1(a), pi2(b)));
  std::vector<Phase> table(g->order() * g->order());
  for (Element a1 = 0; a1 < n1; ++a1)
    for (Element a2 = 0; a2 < n2; ++a2)
      for (Element b1 = 0; b1 < n1; ++b1)
        for (Element b2 = 0; b2 < n2; ++b2)
          table[(a1 * n2 + a2) * g->order() + b1 * n2 + b2] =
              pi1.cocycle()(a1, b1) * pi2.cocycle()(a2, b2);
  auto sigma = std::make_shared<const Cocycle>(g, std::move(table));
  return ProjectiveRep::with_cocycle(g, std::move(mats), std::move(sigma));
}

ProjectiveRep direct_sum(const ProjectiveRep& pi1, const ProjectiveRep& pi2) {
  if (!same_group(pi1.group(), pi2.group()) || !(pi1.cocycle() == pi2.cocycle()))
    throw std::invalid_argument("direct_sum: need equal groups and cocycles");
  const auto d1 = static_cast<Eigen::Index>(pi1.dim());
  const auto d2 = static_cast<Eigen::Index>(pi2.dim());
  std::vector<Matrix> mats;
  for (Element x = 0; x < pi1.group()->order(); ++x) {
    Matrix m = Matrix::Zero(d1 + d2, d1 + d2);
    m.topLeftCorner(d1, d1) = pi1(x);
    m.bottomRightCorner(d2, d2) = pi2(x);
    mats.push_back(std::move(m));
  }
  return ProjectiveRep::with_cocycle(pi1.group(), std::move(mats), pi1.cocycle_ptr());
}

ProjectiveRep one_dimensional(const PhaseFunction& f) {
  std::vector<Matrix> mats;
  for (const Phase& p : f.values()) mats.push_back(Matrix::Constant(1, 1, p.value()));
  auto sigma = std::make_shared<const Cocycle>(coboundary(f));
  return ProjectiveRep::with_cocycle(f.domain().as_group(), std::move(mats), std::move(sigma));
}

ProjectiveRep twist(const ProjectiveRep& pi, const std::vector<Phase>& f) {
  const FiniteGroup& g = *pi.group();
  if (f.size() != g.order()) throw std::invalid_argument("twist: one phase per element required");
  std::vector<Matrix> mats;
  for (Element x = 0; x < g.order(); ++x) mats.push_back(f[x].value() * pi(x));
  std::vector<Phase> table(g.order() * g.order());
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      table[x * g.order() + y] = pi.cocycle()(x, y) * f[x] * f[y] * f[g.mul(x, y)].conj();
  auto sigma = std::make_shared<const Cocycle>(pi.group(), std::move(table));
  return ProjectiveRep::with_cocycle(pi.group(), std::move(mats), std::move(sigma));
}

ProjectiveRep induce(const ProjectiveRep& theta, const Subgroup& h, const Cocycle& sigma) {
  if (!same_group(h.parent(), sigma.group()))
    throw std::invalid_argument("induce: subgroup and cocycle live on different groups");
  if (!same_group(theta.group(), h.as_group()))
    throw std::invalid_argument("induce: theta is not a representation of the subgroup");
  if (!(restrict(sigma, h) == theta.cocycle()))
    throw std::invalid_argument("induce: theta's cocycle is not the restriction of sigma");
  const FiniteGroup& g = *sigma.group();
  const std::vector<Element> reps = coset_representatives(h);
  std::vector<std::size_t> coset_of(g.order());
  for (std::size_t c = 0; c < reps.size(); ++c)
    for (Element m : h.members()) coset_of[g.mul(reps[c], m)] = c;
  const auto d = static_cast<Eigen::Index>(theta.dim());
  const auto k = static_cast<Eigen::Index>(reps.size());
  std::vector<Matrix> mats;
  mats.reserve(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    Matrix m = Matrix::Zero(k * d, k * d);
    for (std::size_t s = 0; s < reps.size(); ++s) {
      const Element xs = g.mul(x, reps[s]);
      const std::size_t r = coset_of[xs];
      const Element hh = g.mul(g.inv(reps[r]), xs);
      const cplx scale = (sigma(x, reps[s]) * sigma(reps[r], hh).conj()).value();
      m.block(static_cast<Eigen::Index>(r) * d, static_cast<Eigen::Index>(s) * d, d, d) =
          scale * theta(h.local_index(hh));
    }
    mats.push_back(std::move(m));
  }
  return ProjectiveRep::with_cocycle(sigma.group(), std::move(mats),
                                     std::make_shared<const Cocycle>(sigma));
}

ProjectiveRep conjugate_rep(const ProjectiveRep& theta, const Subgroup& h, Element x,
                            const Cocycle& sigma) {
  const FiniteGroup& g = *h.parent();
  const Element xi = g.inv(x);
  std::vector<Matrix> mats;
  mats.reserve(h.order());
  for (Element y : h.members()) {
    const Element c = g.mul(g.mul(xi, y), x);
    if (!h.contains(c))
      throw std::invalid_argument("conjugate_rep: element does not normalize the subgroup");
    const cplx scale = (sigma(xi, y) * sigma(c, xi).conj()).value();
    mats.push_back(scale * theta(h.local_index(c)));
  }
  return ProjectiveRep::with_cocycle(theta.group(), std::move(mats), theta.cocycle_ptr());
}

Subgroup inertia_group(const ProjectiveRep& theta, const Subgroup& h, const Cocycle& sigma) {
  const Subgroup norm = normalizer(h);
  const Character chi = character(theta);
  std::vector<Element> members;
  for (Element x : norm.members())
    if (characters_equal(character(conjugate_rep(theta, h, x, sigma)), chi))
      members.push_back(x);
  return Subgroup(h.parent(), std::move(members));
}

}  // namespace qeclab
