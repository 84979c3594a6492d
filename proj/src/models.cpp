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

#include "qeclab/models.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace qeclab {

namespace {

Matrix mpow(const Matrix& m, std::size_t k) {
  Matrix out = Matrix::Identity(m.rows(), m.cols());
  for (std::size_t i = 0; i < k; ++i) out = out * m;
  return out;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

// [[0, I], [I, 0]] with d x d blocks
Matrix swap_blocks(Eigen::Index d) {
  Matrix out = Matrix::Zero(2 * d, 2 * d);
  out.topRightCorner(d, d) = Matrix::Identity(d, d);
  out.bottomLeftCorner(d, d) = Matrix::Identity(d, d);
  return out;
}

Matrix xp_matrix_x() {
  Matrix x = Matrix::Zero(2, 2);
  x(0, 1) = 1;
  x(1, 0) = 1;
  return x;
}

Matrix xp_matrix_p(std::size_t n) {
  Matrix p = Matrix::Zero(2, 2);
  p(0, 0) = 1;
  p(1, 1) = Phase::root_of_unity(1, static_cast<std::int64_t>(n)).value();
  return p;
}

std::vector<long long> matrix_key(const Matrix& m) {
  std::vector<long long> key;
  key.reserve(static_cast<std::size_t>(2 * m.size()));
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    key.push_back(std::llround(m.data()[i].real() * 1e6));
    key.push_back(std::llround(m.data()[i].imag() * 1e6));
  }
  return key;
}

ProjectiveRep rep_on(const GroupPtr& g, const ProjectiveRep& rep) {
  auto sigma = std::make_shared<const Cocycle>(g, rep.cocycle().table());
  return ProjectiveRep::with_cocycle(g, rep.matrices(), std::move(sigma));
}

}  // namespace

ProjectiveErrorModel::ProjectiveErrorModel(ProjectiveRep rep, std::string label)
    : rep_(std::move(rep)), label_(std::move(label)) {
  if (!is_irreducible(rep_))
    throw std::invalid_argument("ProjectiveErrorModel: representation is not irreducible");
  if (!is_projectively_faithful(rep_))
    throw std::invalid_argument("ProjectiveErrorModel: representation is not projectively faithful");
}

ErrorModel::ErrorModel(ProjectiveRep rep, std::string label)
    : rep_(std::move(rep)), label_(std::move(label)) {
  if (!rep_.cocycle().is_trivial())
    throw std::invalid_argument("ErrorModel: representation is not linear");
  const FiniteGroup& g = *rep_.group();
  const Matrix id = Matrix::Identity(static_cast<Eigen::Index>(rep_.dim()),
                                     static_cast<Eigen::Index>(rep_.dim()));
  for (Element x = 0; x < g.order(); ++x)
    if (x != g.identity() && (rep_(x) - id).norm() < 1e-9)
      throw std::invalid_argument("ErrorModel: representation is not faithful");
  if (!is_irreducible(rep_))
    throw std::invalid_argument("ErrorModel: representation is not irreducible");
}

Matrix shift_matrix(std::size_t n) {
  const auto d = static_cast<Eigen::Index>(n);
  Matrix x = Matrix::Zero(d, d);
  for (Eigen::Index i = 0; i + 1 < d; ++i) x(i, i + 1) = 1;
  x(d - 1, 0) = 1;
  return x;
}

Matrix clock_matrix(std::size_t n) {
  const auto d = static_cast<Eigen::Index>(n);
  Matrix z = Matrix::Zero(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    z(j, j) = Phase::root_of_unity(j, static_cast<std::int64_t>(n)).value();
  return z;
}

ProjectiveErrorModel gen_pauli_model(std::size_t n) {
  if (n < 1) throw std::invalid_argument("gen_pauli_model: n must be >= 1");
  const GroupPtr g = direct_product(cyclic(n), cyclic(n));
  const Matrix x = shift_matrix(n), z = clock_matrix(n);
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mats.push_back(mpow(x, a) * mpow(z, b));
  return ProjectiveErrorModel(ProjectiveRep::from_matrices(g, std::move(mats)),
                              "genpauli:" + std::to_string(n));
}

ProjectiveErrorModel pauli_model(std::size_t qubits, const ModelLimits& limits) {
  if (qubits < 1) throw std::invalid_argument("pauli_model: need at least one qubit");
  const ProjectiveErrorModel one = gen_pauli_model(2);
  ProjectiveErrorModel out = one;
  for (std::size_t i = 1; i < qubits; ++i) out = product_model(out, one, limits);
  return ProjectiveErrorModel(out.rep(), "pauli:" + std::to_string(qubits));
}

ProjectiveErrorModel dihedral_xp_model(std::size_t n) {
  const GroupPtr g = dihedral(n);
  const Matrix x = xp_matrix_x(), p = xp_matrix_p(n);
  std::vector<Matrix> mats;
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t l = 0; l < n; ++l) mats.push_back(mpow(x, k) * mpow(p, l));
  return ProjectiveErrorModel(ProjectiveRep::from_matrices(g, std::move(mats)),
                              "xp:" + std::to_string(n));
}

ProjectiveErrorModel product_model(const ProjectiveErrorModel& m1, const ProjectiveErrorModel& m2,
                                   const ModelLimits& limits) {
  if (m1.dim() * m2.dim() > limits.max_dim)
    throw std::invalid_argument("product_model: ambient dimension exceeds cap");
  if (m1.group()->order() * m2.group()->order() > limits.max_order)
    throw std::invalid_argument("product_model: group order exceeds cap");
  return ProjectiveErrorModel(tensor(m1.rep(), m2.rep()),
                              "prod(" + m1.label() + "," + m2.label() + ")");
}

ProjectiveErrorModel perm_product_model(const ProjectiveErrorModel& m, std::size_t n,
                                        const ModelLimits& limits) {
  if (n < 1) throw std::invalid_argument("perm_product_model: n must be >= 1");
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= m.dim();
    if (total > limits.max_dim)
      throw std::invalid_argument("perm_product_model: ambient dimension exceeds cap");
  }
  GroupLimits glimits;
  glimits.max_semidirect_order = limits.max_order;
  const GroupPtr g = permutation_semidirect(m.group(), n, glimits);
  const auto perms = permutations_of(n);
  const std::size_t q = m.group()->order(), nperm = perms.size(), d = m.dim();
  const auto dim = static_cast<Eigen::Index>(total);

  // P_tau sends factor i to slot tau(i)
  std::vector<Matrix> slot_perm;
  for (const auto& tau : perms) {
    Matrix p = Matrix::Zero(dim, dim);
    std::vector<std::size_t> in(n), out(n);
    for (std::size_t col = 0; col < total; ++col) {
      std::size_t rest = col;
      for (std::size_t i = n; i-- > 0;) {
        in[i] = rest % d;
        rest /= d;
      }
      for (std::size_t i = 0; i < n; ++i) out[tau[i]] = in[i];
      std::size_t row = 0;
      for (std::size_t i = 0; i < n; ++i) row = row * d + out[i];
      p(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = 1;
    }
    slot_perm.push_back(std::move(p));
  }

  std::vector<Matrix> mats;
  mats.reserve(g->order());
  std::vector<Element> digits(n);
  for (Element idx = 0; idx < g->order(); ++idx) {
    const std::size_t t = idx % nperm;
    std::size_t rest = idx / nperm;
    for (std::size_t i = n; i-- > 0;) {
      digits[i] = rest % q;
      rest /= q;
    }
    Matrix op = m(digits[0]);
    for (std::size_t i = 1; i < n; ++i) op = kron(op, m(digits[i]));
    mats.push_back(op * slot_perm[t]);
  }
  return ProjectiveErrorModel(ProjectiveRep::from_matrices(g, std::move(mats)),
                              "permprod(" + m.label() + "," + std::to_string(n) + ")");
}

Subgroup embedded_permutations(const ProjectiveErrorModel& perm_model,
                               const ProjectiveErrorModel& base, std::size_t n) {
  const std::size_t q = base.group()->order();
  std::size_t nperm = 1;
  for (std::size_t i = 2; i <= n; ++i) nperm *= i;
  std::size_t b = 0;
  for (std::size_t i = 0; i < n; ++i) b = b * q + base.group()->identity();
  std::vector<Element> members;
  for (std::size_t t = 0; t < nperm; ++t) members.push_back(b * nperm + t);
  return Subgroup(perm_model.group(), std::move(members));
}

Cocycle dihedral_xp_cocycle(std::size_t n) {
  const GroupPtr g = dihedral(n);
  const std::size_t order = 2 * n;
  std::vector<Phase> table(order * order);
  for (Element x = 0; x < order; ++x)
    for (Element y = 0; y < order; ++y) {
      const auto l1 = static_cast<std::int64_t>(x % n);
      const auto k2 = static_cast<std::int64_t>(y / n);
      table[x * order + y] = Phase::root_of_unity(k2 * l1, static_cast<std::int64_t>(n));
    }
  return Cocycle(g, std::move(table));
}

PhaseFunction dihedral_trivializing_phase(std::size_t n) {
  if (n % 2 == 0) throw std::invalid_argument("dihedral_trivializing_phase: n must be odd");
  const GroupPtr g = dihedral(n);
  std::vector<Phase> values(2 * n);
  for (Element x = 0; x < 2 * n; ++x) {
    const auto l = static_cast<std::int64_t>(x % n);
    values[x] = Phase::root_of_unity((static_cast<std::int64_t>(n) - 1) / 2 * l,
                                     static_cast<std::int64_t>(n));
  }
  return PhaseFunction(Subgroup::whole(g), std::move(values));
}

FamilyModel family_c2_x_d2n(std::size_t n) {
  if (n < 2) throw std::invalid_argument("family_c2_x_d2n: n must be >= 2");
  const std::size_t m2 = 2 * n;
  const GroupPtr g = direct_product(cyclic(2), dihedral(m2));
  const Matrix x = xp_matrix_x(), p = xp_matrix_p(m2);
  const Matrix s = swap_blocks(2), xx = block_diag(x, x), pp = block_diag(p, -p);
  std::vector<Matrix> mats;
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t l = 0; l < 2; ++l)
      for (std::size_t m = 0; m < m2; ++m) mats.push_back(mpow(s, k) * mpow(xx, l) * mpow(pp, m));
  ProjectiveErrorModel model(ProjectiveRep::from_matrices(g, std::move(mats)),
                             "c2d2n:" + std::to_string(n));
  std::vector<Element> lmembers;
  for (Element i = 0; i < 2 * m2; ++i) lmembers.push_back(i);
  Subgroup logical(g, std::move(lmembers));
  ProjectiveRep rho = rep_on(logical.as_group(), dihedral_xp_model(m2).rep());
  return {std::move(model), std::move(logical), std::move(rho)};
}

FamilyModel family_odd(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("family_odd: n must be odd and >= 3");
  const GroupPtr lgroup = inversion_semidirect(n);
  const GroupPtr g = direct_product(lgroup, cyclic(2));
  const auto d = static_cast<Eigen::Index>(n);
  const Matrix xn = shift_matrix(n), zn = clock_matrix(n);
  Matrix c = Matrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) c(i, d - 1 - i) = 1;
  const Matrix bx = block_diag(xn, xn), bz = block_diag(zn, zn), bc = block_diag(c, -c);
  const Matrix s = swap_blocks(d);

  std::vector<Matrix> small, big;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t cc = 0; cc < 2; ++cc) {
        small.push_back(mpow(xn, a) * mpow(zn, b) * mpow(c, cc));
        const Matrix base = mpow(bx, a) * mpow(bz, b) * mpow(bc, cc);
        big.push_back(base);
        big.push_back(base * s);
      }
  ProjectiveErrorModel model(ProjectiveRep::from_matrices(g, std::move(big)),
                             "oddfam:" + std::to_string(n));
  std::vector<Element> lmembers;
  for (Element i = 0; i < lgroup->order(); ++i) lmembers.push_back(2 * i);
  Subgroup logical(g, std::move(lmembers));
  ProjectiveRep rho = ProjectiveRep::from_matrices(logical.as_group(), std::move(small));
  return {std::move(model), std::move(logical), std::move(rho)};
}

ErrorModel error_model_from_generators(const std::vector<Matrix>& gens, std::string label,
                                       std::size_t max_order) {
  if (gens.empty()) throw std::invalid_argument("error_model_from_generators: no generators");
  const Eigen::Index d = gens.front().rows();
  std::vector<Matrix> elems{Matrix::Identity(d, d)};
  std::map<std::vector<long long>, std::size_t> index{{matrix_key(elems[0]), 0}};
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (const Matrix& s : gens) {
      Matrix prod = elems[head] * s;
      auto key = matrix_key(prod);
      if (index.count(key)) continue;
      if (elems.size() >= max_order)
        throw std::invalid_argument("error_model_from_generators: group exceeds order cap");
      index.emplace(std::move(key), elems.size());
      elems.push_back(std::move(prod));
    }
  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto it = index.find(matrix_key(elems[i] * elems[j]));
      if (it == index.end())
        throw std::logic_error("error_model_from_generators: closure incomplete");
      table[i * n + j] = it->second;
    }
  auto g = std::make_shared<FiniteGroup>(n, std::move(table), label);
  return ErrorModel(ProjectiveRep::from_matrices(g, std::move(elems)), std::move(label));
}

ProjectiveErrorModel pem_from_em(const ErrorModel& em) {
  const Quotient q = quotient(center(em.group()));
  std::vector<Matrix> mats;
  for (Element r : q.representatives) mats.push_back(em.rep()(r));
  return ProjectiveErrorModel(ProjectiveRep::from_matrices(q.group, std::move(mats)),
                              em.label() + "/Z");
}

ErrorModel em_from_pem(const ProjectiveErrorModel& m, const Cocycle& sigma_prime,
                       const PhaseFunction& f, std::size_t n) {
  if (n < 1) throw std::invalid_argument("em_from_pem: n must be >= 1");
  if (!same_group(sigma_prime.group(), m.group()) || !f.domain().is_whole() ||
      !same_group(f.domain().parent(), m.group()))
    throw std::invalid_argument("em_from_pem: cocycle or phase on the wrong group");
  const auto nn = static_cast<std::int64_t>(n);
  for (const Phase& p : sigma_prime.table())
    if (nn % p.den() != 0)
      throw std::invalid_argument("em_from_pem: sigma' is not valued in the n-th roots of unity");
  if (!(multiply(coboundary(f), m.cocycle()) == sigma_prime))
    throw std::invalid_argument("em_from_pem: delta f * sigma differs from sigma'");

  const FiniteGroup& g = *m.group();
  const std::size_t order = n * g.order();
  std::vector<Element> table(order * order);
  for (std::size_t z1 = 0; z1 < n; ++z1)
    for (Element x1 = 0; x1 < g.order(); ++x1)
      for (std::size_t z2 = 0; z2 < n; ++z2)
        for (Element x2 = 0; x2 < g.order(); ++x2) {
          const Phase& s = sigma_prime(x1, x2);
          const auto shift = static_cast<std::size_t>(s.num() * (nn / s.den()));
          table[(z1 * g.order() + x1) * order + z2 * g.order() + x2] =
              ((z1 + z2 + shift) % n) * g.order() + g.mul(x1, x2);
        }
  auto e = std::make_shared<FiniteGroup>(order, std::move(table),
                                         "C" + std::to_string(n) + "x_s" + g.label());
  std::vector<Matrix> mats;
  for (std::size_t z = 0; z < n; ++z)
    for (Element x = 0; x < g.order(); ++x)
      mats.push_back((Phase::root_of_unity(static_cast<std::int64_t>(z), nn) * f.at(x)).value() *
                     m(x));
  return ErrorModel(ProjectiveRep::from_matrices(e, std::move(mats)), m.label() + " lifted");
}

}  // namespace qeclab
