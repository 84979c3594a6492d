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

#include "qeclab/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace qeclab {

namespace {

void check_limits(const ProjectiveErrorModel& m, const SearchLimits& limits) {
  if (m.group()->order() > limits.max_order)
    throw std::invalid_argument("search: group order " + std::to_string(m.group()->order()) +
                                " exceeds cap " + std::to_string(limits.max_order));
  if (m.dim() > limits.max_dim)
    throw std::invalid_argument("search: ambient dimension " + std::to_string(m.dim()) +
                                " exceeds cap " + std::to_string(limits.max_dim));
}

std::size_t projector_hash(const Matrix& p) {
  std::size_t h = 0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const long long re = std::llround(p.data()[i].real() * 1e6);
    const long long im = std::llround(p.data()[i].imag() * 1e6);
    h ^= std::hash<long long>{}(re) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<long long>{}(im) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

class SubspaceSet {
 public:
  /// True if w was not present before.
  bool insert(const CodeSpace& w) {
    const Matrix p = w.projector();
    const std::size_t h = projector_hash(p);
    for (std::size_t i : buckets_[h])
      if ((projectors_[i] - p).norm() < 1e-7) return false;
    // rounding can split equal projectors across buckets
    for (std::size_t i = 0; i < projectors_.size(); ++i)
      if (dims_[i] == w.dim() && (projectors_[i] - p).norm() < 1e-7) return false;
    buckets_[h].push_back(projectors_.size());
    projectors_.push_back(p);
    dims_.push_back(w.dim());
    return true;
  }

 private:
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets_;
  std::vector<Matrix> projectors_;
  std::vector<std::size_t> dims_;
};

}  // namespace

std::vector<WeakStabilizerPair> enumerate_weak_stabilizer_pairs(const ProjectiveErrorModel& m,
                                                                const SearchLimits& limits) {
  check_limits(m, limits);
  GroupLimits glimits;
  glimits.max_subgroup_search_order = limits.max_order;
  std::vector<WeakStabilizerPair> out;
  for (const Subgroup& h : all_subgroups(m.group(), glimits))
    for (PhaseFunction& f : compatible_phases(m, h)) {
      auto code = weak_stabilizer_code(m, f);
      out.push_back({h, std::move(f), std::move(code)});
    }
  return out;
}

std::vector<FoundCode> enumerate_weak_stabilizer_codes(const ProjectiveErrorModel& m,
                                                       const SearchLimits& limits) {
  std::vector<FoundCode> out;
  SubspaceSet seen;
  for (auto& pair : enumerate_weak_stabilizer_pairs(m, limits)) {
    if (!pair.code || !seen.insert(*pair.code)) continue;
    out.push_back({std::move(pair.subgroup), std::move(pair.phase), std::move(*pair.code)});
  }
  return out;
}

Q3Result q3_probe(const ProjectiveErrorModel& m, const SearchLimits& limits, std::uint64_t seed) {
  check_limits(m, limits);
  if (!m.is_central_type())
    throw std::invalid_argument("q3_probe: model is not of central type");
  GroupLimits glimits;
  glimits.max_subgroup_search_order = limits.max_order;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const std::size_t dim = m.dim();
  const auto d = static_cast<Eigen::Index>(dim);

  Q3Result result;
  SubspaceSet seen;
  for (const Subgroup& l : all_subgroups(m.group(), glimits)) {
    if (dim % l.index() != 0) continue;
    const std::size_t target = dim / l.index();
    const ProjectiveRep res = restrict(m.rep(), l);
    const std::vector<Matrix> commutant = hom_space(res, res);

    // a generic Hermitian element of the commutant splits V into irreducibles
    Matrix h = Matrix::Zero(d, d);
    for (const Matrix& t : commutant) h += cplx(normal(rng), normal(rng)) * t;
    h = (h + h.adjoint()).eval() / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
    const auto& vals = eig.eigenvalues();
    Eigen::Index start = 0;
    while (start < d) {
      Eigen::Index end = start + 1;
      while (end < d && std::abs(vals(end) - vals(start)) < 1e-6) ++end;
      if (static_cast<std::size_t>(end - start) == target) {
        CodeSpace w(eig.eigenvectors().middleCols(start, end - start));
        const ProjectiveRep rho = restricted_to_code(m, l, w);
        const cplx mult = inner_product(character(rho), character(res));
        if (is_irreducible(rho) && std::abs(mult - 1.0) < 1e-7 && seen.insert(w)) {
          CodeReport report = classify(m, w);
          if (!report.flags.is_clifford)
            throw std::logic_error("q3_probe: scanned code failed Clifford classification");
          const bool hit = m.group()->order() ==
                               report.logical.order() * report.stabilizer.group.order() &&
                           !is_normal(report.stabilizer.group);
          if (hit) result.hits.push_back(report);
          result.clifford_codes.push_back(std::move(report));
        }
      }
      start = end;
    }
  }
  return result;
}

}  // namespace qeclab
